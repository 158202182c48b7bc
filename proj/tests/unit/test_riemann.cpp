#include <cmath>
#include <random>

#include "doctest.h"
#include "qwave/riemann.hpp"

using namespace qwave;
using doctest::Approx;

namespace {

const State kUR{2.0, 3.0};
const Viscosity kAniso{1.0, 0.5};
const Viscosity kIso{1.0, 2.0};

void check_state(const State& a, const State& b, double eps = 1e-7) {
  CHECK(a.u1 == Approx(b.u1).epsilon(eps));
  CHECK(a.u2 == Approx(b.u2).epsilon(eps));
}

void check_wave(const Wave& w, WaveKind kind, const State& l, const State& r, double lo, double hi) {
  CHECK(w.kind == kind);
  check_state(w.left, l);
  check_state(w.right, r);
  CHECK(w.theta_min == Approx(lo).epsilon(1e-7));
  CHECK(w.theta_max == Approx(hi).epsilon(1e-7));
}

}  // namespace

TEST_CASE("equal states give no waves") {
  auto s = solve_riemann(kUR, kUR, kIso);
  CHECK(s.waves.empty());
  CHECK(validate_solution(s, kIso).empty());
  CHECK(sample_solution(s, 3.0) == kUR);
}

TEST_CASE("two shocks") {
  auto s = solve_riemann({5.0, 2.0}, kUR, kIso);
  CHECK(s.region == Region::R1);
  CHECK_FALSE(s.on_boundary);
  REQUIRE(s.waves.size() == 2);
  check_wave(s.waves[0], WaveKind::SlowShock, {5, 2}, {3, 4}, 2, 2);
  check_wave(s.waves[1], WaveKind::FastShock, {3, 4}, kUR, 12, 12);
  CHECK(validate_solution(s, kIso).empty());
  CHECK(std::string(pattern_of(s.region)) == "S1 S2");
}

TEST_CASE("two fans") {
  for (const auto& mu : {kIso, kAniso}) {
    auto s = solve_riemann({0.5, 2.5}, kUR, mu);
    CHECK(s.region == Region::R6);
    REQUIRE(s.waves.size() == 2);
    check_wave(s.waves[0], WaveKind::SlowRarefaction, {0.5, 2.5}, {1, 2}, -4, -2);
    check_wave(s.waves[1], WaveKind::FastRarefaction, {1, 2}, kUR, 6, 10);
    check_state(sample_solution(s, -3.0), {0.75, 2.25});
    check_state(sample_solution(s, -100.0), {0.5, 2.5});
    check_state(sample_solution(s, 100.0), kUR);
    check_state(sample_solution(s, 0.0), {1, 2});
  }
}

TEST_CASE("undercompressive triple") {
  auto s = solve_riemann({7.5414519, -2.5}, kUR, kAniso);
  CHECK(s.region == Region::R1p);
  REQUIRE(s.waves.size() == 3);
  check_wave(s.waves[0], WaveKind::SlowShock, {7.5414519, -2.5}, {6.5414519, -3.5}, 8.0829038, 8.0829038);
  check_wave(s.waves[1], WaveKind::Undercompressive, {6.5414519, -3.5}, {2.5, 3.5}, 9.0414519, 9.0414519);
  check_wave(s.waves[2], WaveKind::FastShock, {2.5, 3.5}, kUR, 11, 11);
  CHECK(validate_solution(s, kAniso).empty());
}

TEST_CASE("special fan on the axis") {
  auto s = solve_riemann({-1.0, 0.0}, {2.0, 0.0}, kAniso);
  REQUIRE(s.waves.size() == 1);
  CHECK(s.waves[0].kind == WaveKind::SpecialRarefaction);
  CHECK(s.waves[0].theta_min == Approx(-2.0));
  CHECK(s.waves[0].theta_max == Approx(4.0));
  check_state(sample_solution(s, 1.0), {0.5, 0.0});
  CHECK(classify_region({-1.0, 0.0}, {2.0, 0.0}, kAniso) == Region::Degenerate);
}

TEST_CASE("closed-form region labels") {
  CHECK(classify_region({0.5, 2.5}, kUR, kIso) == Region::R6);
  CHECK(classify_region({5.0, 2.0}, kUR, kIso) == Region::R1);
  // Centre of the rectangle spanned by G, D, F, E.
  auto k = key_points(kUR, kAniso);
  const State centre = (*k.G + *k.D + *k.F + *k.E) / 4.0;
  CHECK(classify_region(centre, kUR, kAniso) == Region::R1p);
  CHECK(solve_riemann(centre, kUR, kAniso).region == Region::R1p);
}

TEST_CASE("viscosity regime decides undercompressive waves") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> U1(-10.0, 14.0), U2(-9.0, 9.0);
  for (int i = 0; i < 500; ++i) {
    const State uL{U1(rng), U2(rng)};
    auto iso = solve_riemann(uL, kUR, kIso);
    for (const auto& w : iso.waves) CHECK(w.kind != WaveKind::Undercompressive);
    auto an = solve_riemann(uL, kUR, kAniso);
    bool has_under = false;
    for (const auto& w : an.waves) has_under = has_under || w.kind == WaveKind::Undercompressive;
    const bool primed = an.region == Region::R1p || an.region == Region::R2p || an.region == Region::R3p ||
                        an.region == Region::R4p;
    CHECK(has_under == primed);
  }
}

TEST_CASE("mirror symmetry of solutions") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> U1(-10.0, 14.0), U2(-9.0, 9.0);
  for (int i = 0; i < 300; ++i) {
    const State uL{U1(rng), U2(rng)};
    const Viscosity& mu = i % 2 ? kIso : kAniso;
    auto s = solve_riemann(uL, kUR, mu);
    auto m = solve_riemann(uL.mirrored(), kUR.mirrored(), mu);
    REQUIRE(s.waves.size() == m.waves.size());
    CHECK(s.region == m.region);
    for (std::size_t j = 0; j < s.waves.size(); ++j) {
      CHECK(m.waves[j].kind == s.waves[j].kind);
      CHECK(m.waves[j].theta_min == Approx(s.waves[j].theta_min));
      CHECK(m.waves[j].theta_max == Approx(s.waves[j].theta_max));
      check_state(m.waves[j].right, s.waves[j].right.mirrored(), 1e-9);
    }
  }
}

TEST_CASE("solver output validates on random data") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> U(-6.0, 6.0), R(0.2, 3.0);
  int solved = 0;
  for (int i = 0; i < 1000; ++i) {
    const State uL{U(rng), U(rng)}, uR{U(rng), U(rng)};
    const Viscosity mu{R(rng), R(rng)};
    auto all = admissible_solutions(uL, uR, mu);
    REQUIRE_FALSE(all.empty());
    auto s = solve_riemann(uL, uR, mu);
    CHECK(validate_solution(s, mu).empty());
    ++solved;
  }
  CHECK(solved == 1000);
}

TEST_CASE("validation flags speeds out of order") {
  RiemannSolution s;
  s.left = {13.0, -4.0};
  s.right = kUR;
  s.waves = {make_wave(WaveKind::SlowShock, {13.0, -4.0}, {4.0, 5.0}),
             make_wave(WaveKind::FastShock, {4.0, 5.0}, kUR)};
  CHECK(s.waves[0].speed() == Approx(16.0));
  CHECK(s.waves[1].speed() == Approx(14.0));
  auto report = validate_solution(s, kIso);
  REQUIRE(report.size() == 1);
  CHECK(report[0].find("waves 0 and 1") != std::string::npos);
}

TEST_CASE("validation flags a slow shock beyond the structure threshold") {
  RiemannSolution s;
  s.left = {7.0, -2.0};
  s.right = kUR;
  s.waves = {make_wave(WaveKind::SlowShock, {7.0, -2.0}, kUR)};
  CHECK(validate_solution(s, kIso).empty());
  CHECK_FALSE(validate_solution(s, kAniso).empty());
}

TEST_CASE("validation flags broken chains and wrong kinds") {
  auto s = solve_riemann({5.0, 2.0}, kUR, kIso);
  auto gap = s;
  gap.waves[1].left = {3.0, 4.5};
  CHECK_FALSE(validate_solution(gap, kIso).empty());
  auto kind = s;
  kind.waves[0].kind = WaveKind::FastShock;
  CHECK_FALSE(validate_solution(kind, kIso).empty());
}

TEST_CASE("json round trip") {
  for (const State& uL : {State{5.0, 2.0}, State{0.5, 2.5}, State{7.5414519, -2.5}, State{-3.0, -7.0}}) {
    auto s = solve_riemann(uL, kUR, kAniso);
    auto back = solution_from_json(to_json(s));
    CHECK(back.left == s.left);
    CHECK(back.right == s.right);
    CHECK(back.region == s.region);
    CHECK(back.on_boundary == s.on_boundary);
    REQUIRE(back.waves.size() == s.waves.size());
    for (std::size_t i = 0; i < s.waves.size(); ++i) {
      CHECK(back.waves[i].kind == s.waves[i].kind);
      CHECK(back.waves[i].left == s.waves[i].left);
      CHECK(back.waves[i].right == s.waves[i].right);
      CHECK(back.waves[i].theta_min == s.waves[i].theta_min);
      CHECK(back.waves[i].theta_max == s.waves[i].theta_max);
    }
  }
  CHECK_THROWS_AS(solution_from_json("{\"left\": 1}"), Error);
  CHECK_THROWS_AS(solution_from_json("not json"), Error);
}

TEST_CASE("labels round trip") {
  for (auto r : {Region::R1, Region::R4, Region::R8, Region::R1p, Region::R4p, Region::Degenerate})
    CHECK(region_from_string(to_string(r)) == r);
  for (auto k : {WaveKind::FastShock, WaveKind::Jouguet, WaveKind::SpecialRarefaction})
    CHECK(wave_kind_from_string(to_string(k)) == k);
  CHECK_FALSE(region_from_string("R9").has_value());
}

TEST_CASE("region map layout") {
  const Box box{-10.0, 14.0, -9.0, 9.0};
  auto map = region_map(kUR, kIso, box, 24);
  REQUIRE(map.labels.size() == 24u * 24u);
  for (int j = 0; j < 24; j += 5)
    for (int i = 0; i < 24; i += 5) CHECK(map.at(i, j) == classify_region(map.cell_center(i, j), kUR, kIso));
  check_state(map.cell_center(0, 0), {-9.5, -8.625});
}
