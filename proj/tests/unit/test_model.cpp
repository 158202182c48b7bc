#include <cmath>
#include <random>

#include "doctest.h"
#include "qwave/model.hpp"

using namespace qwave;
using doctest::Approx;

namespace {

const State kUp{2.0, 3.0};
const Viscosity kAniso{1.0, 0.5};  // mu2 < mu1, m = 1/sqrt(3)
const Viscosity kIso{1.0, 2.0};

void check_state(const State& a, const State& b, double eps = 1e-7) {
  CHECK(a.u1 == Approx(b.u1).epsilon(eps));
  CHECK(a.u2 == Approx(b.u2).epsilon(eps));
}

}  // namespace

TEST_CASE("flux and characteristic speeds") {
  check_state(flux(kUp), {13.0, 12.0});
  auto c = characteristic_speeds(kUp);
  CHECK(c.c1 == Approx(-2.0));
  CHECK(c.c2 == Approx(10.0));
  CHECK_FALSE(c.coincident);
  CHECK(characteristic_speeds({1.0, 0.0}).coincident);
}

TEST_CASE("hugoniot branches of (2,3)") {
  auto br = hugoniot_branches(kUp);
  for (const auto& b : br) {
    for (double u1 : {-7.0, -1.5, 0.0, 3.25, 11.0}) {
      const State u = b.at(u1);
      CHECK(locus_product(u, kUp) == Approx(0.0).scale(1.0));
      if (u == kUp) continue;
      CHECK(rh_residual({u, kUp, b.speed_at(u1)}) <= 1e-10);
    }
  }
  // Lines through u+ along (1,1) and (1,-1), the horizontal line through the reflection.
  for (const auto& b : br) {
    if (b.id == BranchId::Horizontal) {
      CHECK(b.at(0.0).u2 == Approx(-3.0));
      CHECK(b.speed_at(5.0) == Approx(7.0));  // W = u1 + u1+
    }
  }
  auto diag = [&](double u1) { return State{u1, u1 + 1.0}; };
  auto anti = [&](double u1) { return State{u1, -u1 + 5.0}; };
  CHECK(shock_speed(diag(7.0), kUp) == Approx(2.0 * (7.0 + 3.0)));
  CHECK(shock_speed(anti(7.0), kUp) == Approx(2.0 * (7.0 - 3.0)));
}

TEST_CASE("shock speed from the jump conditions") {
  CHECK(shock_speed({4.0, 5.0}, kUp) == Approx(14.0));
  CHECK(shock_speed({3.0, 2.0}, kUp) == Approx(0.0).scale(1.0));
  CHECK(shock_speed({5.0, 2.0}, {3.0, 4.0}) == Approx(2.0));
  CHECK(shock_speed({3.0, 4.0}, kUp) == Approx(12.0));
  CHECK_THROWS_AS(shock_speed({0.0, 0.5}, kUp), Error);
  try {
    shock_speed({0.0, 0.5}, kUp);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOnLocus);
  }
  CHECK_THROWS_AS(shock_speed(kUp, kUp), Error);
}

TEST_CASE("locus product is bounded away from zero off the locus") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    State up{U(rng), U(rng)};
    for (const auto& b : hugoniot_branches(up)) {
      const State on = b.at(U(rng));
      const State normal{-b.direction.u2, b.direction.u1};
      const State off = on + 0.5 * normal / norm(normal);
      // Far from the other two lines the product picks up a factor of the offset.
      bool near_other = false;
      for (const auto& o : hugoniot_branches(up)) {
        if (o.id == b.id) continue;
        const State d{-o.direction.u2, o.direction.u1};
        near_other = near_other || std::abs(dot(off - o.point, d / norm(d))) < 0.3;
      }
      if (!near_other) CHECK(std::abs(locus_product(off, up)) > 1e-3);
    }
  }
}

TEST_CASE("energy coefficients and gradient") {
  const double W = 4.0 + 2.0 * std::sqrt(3.0);
  auto D = coefficients_D(kUp, W);
  CHECK(D.D1 == Approx(-1.9282032).epsilon(1e-7));
  CHECK(D.D2 == Approx(-10.3923048).epsilon(1e-7));
  for (double w : {-3.0, 0.0, 7.0, 12.5}) {
    const State g = energy_gradient(kUp, kUp, w);
    CHECK(std::abs(g.u1) < 1e-12);
    CHECK(std::abs(g.u2) < 1e-12);
  }
  CHECK(undercompressive_energy_gap(kUp, kAniso) == Approx(69.2820323).epsilon(1e-9));
}

TEST_CASE("energy gap matches Z at the undercompressive speed") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-4.0, 4.0), M(0.1, 0.95);
  for (int i = 0; i < 100; ++i) {
    State up{U(rng), U(rng)};
    if (std::abs(up.u2) < 0.1) continue;
    const Viscosity mu = Viscosity::from_m(M(rng));
    const double W = undercompressive_speed(up, mu);
    const State ux{W - up.u1, -up.u2};
    const double gap = energy_Z(ux, up, W) - energy_Z(up, up, W);
    CHECK(gap == Approx(undercompressive_energy_gap(up, mu)).epsilon(1e-10));
    CHECK(gap > 0.0);
    // Both end states are saddles at this speed.
    CHECK((up.u1 - W / 2) * (up.u1 - W / 2) < up.u2 * up.u2);
  }
}

TEST_CASE("critical points") {
  auto cp = critical_points(kUp, 7.0);
  check_state(cp[0].location, kUp);
  check_state(cp[1].location, {5.0, -3.0});
  check_state(cp[2].location, {6.5, -1.5});
  check_state(cp[3].location, {0.5, 1.5});
  CHECK(cp[0].z_type == cp[1].z_type);
  CHECK(is_extremum(cp[2].z_type));
  CHECK(is_extremum(cp[3].z_type));
  CHECK_FALSE(is_extremum(cp[0].z_type));

  auto jouguet = critical_points(kUp, 10.0);
  check_state(jouguet[1].location, {8.0, -3.0});
  check_state(jouguet[2].location, {8.0, -3.0});
  CHECK(jouguet[1].multiplicity == 2);

  auto axis = critical_points({1.0, 0.0}, 2.0);
  for (const auto& e : axis) {
    check_state(e.location, {1.0, 0.0});
    CHECK(e.multiplicity == 4);
  }
}

TEST_CASE("lax classification examples") {
  CHECK(lax_classify({{4.0, 5.0}, kUp, 14.0}).kind == ShockKind::FastShock);
  CHECK(lax_classify({{3.0, 2.0}, kUp, 0.0}).kind == ShockKind::SlowShock);
  const double W = 4.0 + 2.0 * std::sqrt(3.0);
  CHECK(lax_classify({{W - 2.0, -3.0}, kUp, W}).kind == ShockKind::Undercompressive);
  CHECK(lax_classify({{9.0, -3.0}, kUp, 11.0}).kind == ShockKind::Overcompressive);
  CHECK_THROWS_AS(lax_classify({{0.0, 0.5}, kUp, 1.0}), Error);
}

TEST_CASE("classification along the branches of (2,3)") {
  // Antidiagonal: slow on (0, 2 u2+), fast beyond B.
  for (double t = 0.05; t < 6.0; t += 0.1) CHECK(lax_classify({kUp + t * State{1, -1}, kUp, 2 * (2 + t - 3)}).kind == ShockKind::SlowShock);
  for (double t = 6.1; t < 15.0; t += 0.5) CHECK(lax_classify({kUp + t * State{1, -1}, kUp, 2 * (2 + t - 3)}).kind == ShockKind::FastShock);
  // Diagonal: fast to the right of u+.
  for (double t = 0.1; t < 10.0; t += 0.5) CHECK(lax_classify({kUp + t * State{1, 1}, kUp, 2 * (2 + t + 3)}).kind == ShockKind::FastShock);
  // Horizontal: undercompressive strictly between C and B, overcompressive right of B.
  for (double u1 = -3.9; u1 < 8.0; u1 += 0.2) CHECK(lax_classify({{u1, -3.0}, kUp, u1 + 2.0}).kind == ShockKind::Undercompressive);
  for (double u1 = 8.2; u1 < 20.0; u1 += 0.5) CHECK(lax_classify({{u1, -3.0}, kUp, u1 + 2.0}).kind == ShockKind::Overcompressive);
}

TEST_CASE("hessian route agrees with the lax sign pattern") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-6.0, 6.0);
  int compared = 0;
  for (int i = 0; i < 1000; ++i) {
    State up{U(rng), U(rng)};
    if (std::abs(up.u2) < 0.05) continue;
    const auto& b = hugoniot_branches(up)[static_cast<std::size_t>(i % 3)];
    const double u1 = up.u1 + U(rng);
    const ShockCandidate c{b.at(u1), up, b.speed_at(u1)};
    if (distance(c.u_minus, up) < 1e-3) continue;
    const auto lax = lax_classify(c).kind;
    const auto hess = hessian_kind(c);
    if (lax == ShockKind::FastShock || lax == ShockKind::SlowShock) {
      REQUIRE(hess.has_value());
      CHECK(*hess == lax);
      ++compared;
    } else if (lax != ShockKind::Degenerate) {
      CHECK_FALSE(hess.has_value());
    }
  }
  CHECK(compared > 300);
}

TEST_CASE("undercompressive and saddle connection speeds") {
  CHECK(kAniso.m().value() == Approx(0.5773503).epsilon(1e-7));
  CHECK(undercompressive_speed(kUp, kAniso) == Approx(7.4641016).epsilon(1e-8));
  CHECK(undercompressive_speed(kUp.mirrored(), kAniso) == Approx(7.4641016).epsilon(1e-8));
  CHECK(undercompressive_speed({1.0, 1.0}, {2.0, 1.0}) == Approx(3.1547005).epsilon(1e-7));
  CHECK_THROWS_AS(undercompressive_speed(kUp, kIso), Error);
  CHECK_THROWS_AS(undercompressive_speed({2.0, 0.0}, kAniso), Error);

  auto ab = ab_connection_speeds(kUp, kAniso);
  CHECK(ab[0] == Approx(14.3923048).epsilon(1e-8));
  CHECK(ab[1] == Approx(-6.3923048).epsilon(1e-8));
  CHECK_THROWS_AS(ab_connection_speeds(kUp, {1.0, 1.0}), Error);
  auto small = ab_connection_speeds({2.0, 1e-9}, kAniso);
  CHECK(small[0] == Approx(4.0));
  CHECK(small[1] == Approx(4.0));
}

TEST_CASE("structure existence examples") {
  CHECK(structure_exists({{6.0, -1.0}, kUp, 6.0}, kIso).verdict == Verdict::Yes);
  auto below = structure_exists({{6.0, -1.0}, kUp, 6.0}, kAniso);
  CHECK(below.verdict == Verdict::Yes);
  CHECK(below.threshold == Approx(3.0 * (1.0 + 1.0 / std::sqrt(3.0))));
  CHECK(structure_exists({{7.0, -2.0}, kUp, 8.0}, kAniso).verdict == Verdict::No);
  CHECK(structure_exists({{4.0, 5.0}, kUp, 14.0}, kAniso).verdict == Verdict::Yes);
  CHECK(structure_exists({{4.0, 5.0}, kUp, 14.0}, kIso).verdict == Verdict::Yes);
  // Fast shocks of the other family need to lie beyond E when mu2 < mu1.
  const double tE = 3.0 * (1.0 + std::sqrt(3.0));
  for (double t : {6.5, tE - 0.01}) {
    const State um = kUp + t * State{1, -1};
    CHECK(structure_exists({um, kUp, 2 * (um.u1 - 3)}, kAniso).verdict == Verdict::No);
    CHECK(structure_exists({um, kUp, 2 * (um.u1 - 3)}, kIso).verdict == Verdict::Yes);
  }
  const State beyond = kUp + (tE + 0.01) * State{1, -1};
  CHECK(structure_exists({beyond, kUp, 2 * (beyond.u1 - 3)}, kAniso).verdict == Verdict::Yes);
  const State onD = kUp + 3.0 * (1.0 + 1.0 / std::sqrt(3.0)) * State{1, -1};
  CHECK(structure_exists({onD, kUp, 2 * (onD.u1 - 3)}, kAniso).verdict == Verdict::Boundary);
  CHECK_THROWS_AS(structure_exists({{9.0, -3.0}, kUp, 11.0}, kAniso), Error);
}

TEST_CASE("overcompressive structure") {
  CHECK_FALSE(overcompressive_structure_exists({{9.0, -3.0}, kUp, 11.0}, kAniso));
  CHECK(overcompressive_structure_exists({{13.0, -3.0}, kUp, 15.0}, kAniso));
  CHECK(overcompressive_structure_exists({{9.0, -3.0}, kUp, 11.0}, kIso));
}

TEST_CASE("key points") {
  auto k = key_points(kUp, kAniso);
  check_state(k.A, kUp);
  check_state(k.B, {8.0, -3.0});
  check_state(k.C, {-4.0, -3.0});
  check_state(k.H, {-1.0, 0.0});
  REQUIRE(k.D.has_value());
  check_state(*k.D, {6.7320508, -1.7320508});
  check_state(*k.E, {10.1961524, -5.1961524});
  check_state(*k.F, {12.3923048, -3.0});
  check_state(*k.G, {2.0 + 2.0 * 3.0 / std::sqrt(3.0), -3.0});

  auto iso = key_points(kUp, kIso);
  CHECK_FALSE(iso.D.has_value());
  CHECK_FALSE(iso.E.has_value());
  CHECK_FALSE(iso.F.has_value());
  CHECK_FALSE(iso.G.has_value());
}

TEST_CASE("D and E approach B as the viscosity ratio approaches one") {
  for (double m : {0.9, 0.99, 0.999}) {
    auto k = key_points(kUp, Viscosity::from_m(m));
    CHECK(distance(*k.D, k.B) < 7.0 * (1.0 - m) + 1e-12);
    CHECK(distance(*k.E, k.B) < 7.0 * (1.0 / m - 1.0) + 1e-12);
  }
}

TEST_CASE("mirror symmetry") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-6.0, 6.0);
  for (int i = 0; i < 300; ++i) {
    State up{U(rng), U(rng)};
    if (std::abs(up.u2) < 0.05) continue;
    const auto& b = hugoniot_branches(up)[static_cast<std::size_t>(i % 3)];
    const double u1 = up.u1 + U(rng);
    const ShockCandidate c{b.at(u1), up, b.speed_at(u1)};
    if (distance(c.u_minus, up) < 1e-3) continue;
    const ShockCandidate mc{c.u_minus.mirrored(), up.mirrored(), c.W};
    CHECK(shock_speed(mc.u_minus, mc.u_plus) == Approx(shock_speed(c.u_minus, c.u_plus)));
    const auto k = lax_classify(c).kind;
    CHECK(lax_classify(mc).kind == k);
    if (k == ShockKind::FastShock || k == ShockKind::SlowShock)
      CHECK(structure_exists(mc, kAniso).verdict == structure_exists(c, kAniso).verdict);
  }
  auto k = key_points(kUp, kAniso), mk = key_points(kUp.mirrored(), kAniso);
  check_state(mk.B, k.B.mirrored());
  check_state(*mk.D, k.D->mirrored());
  check_state(*mk.F, k.F->mirrored());
}

TEST_CASE("rescaling invariance") {
  // Scaling states by s scales speeds by s; scaling mu leaves every verdict unchanged.
  const ShockCandidate c{{6.0, -1.0}, kUp, 6.0};
  for (double s : {0.5, 3.0}) {
    const ShockCandidate sc{c.u_minus * s, c.u_plus * s, c.W * s};
    CHECK(shock_speed(sc.u_minus, sc.u_plus) == Approx(6.0 * s));
    CHECK(lax_classify(sc).kind == ShockKind::SlowShock);
    CHECK(structure_exists(sc, kAniso).verdict == Verdict::Yes);
    CHECK(structure_exists(c, kAniso.scaled(s)).verdict == Verdict::Yes);
    CHECK(structure_exists({{7.0, -2.0}, kUp, 8.0}, kAniso.scaled(s)).verdict == Verdict::No);
    CHECK(undercompressive_speed(kUp, kAniso.scaled(s)) == Approx(undercompressive_speed(kUp, kAniso)));
  }
}

TEST_CASE("viscosity validation") {
  CHECK_THROWS_AS(Viscosity(0.0, 1.0), Error);
  CHECK_THROWS_AS(Viscosity(1.0, -1.0), Error);
  CHECK_THROWS_AS(Viscosity(1.0, NAN), Error);
  CHECK(Viscosity::from_m(0.5).m().value() == Approx(0.5));
  CHECK_FALSE(kIso.m().has_value());
}
