#include <cmath>
#include <sstream>

#include "doctest.h"
#include "qwave/structure.hpp"

using namespace qwave;
using doctest::Approx;

namespace {

const State kUp{2.0, 3.0};
const Viscosity kAniso{1.0, 0.5};
const double kWstar = 4.0 + 2.0 * std::sqrt(3.0);

// Largest increase of Z between consecutive samples, per unit xi.
double max_z_increase(const Trajectory& tr, const State& up, double W) {
  double worst = 0.0;
  for (std::size_t i = 1; i < tr.samples.size(); ++i) {
    const double dz = energy_Z(tr.samples[i].u, up, W) - energy_Z(tr.samples[i - 1].u, up, W);
    const double dxi = tr.samples[i].xi - tr.samples[i - 1].xi;
    if (dxi > 0.0) worst = std::max(worst, dz / dxi);
  }
  return worst;
}

}  // namespace

TEST_CASE("ode right-hand side") {
  const OdeParams p(kUp, kWstar, Viscosity{1.0, 1.0});
  const State r = ode_rhs({0.0, 0.0}, p);
  CHECK(r.u1 == Approx(1.9282032).epsilon(1e-7));
  CHECK(r.u2 == Approx(10.3923048).epsilon(1e-7));
  for (const auto& e : critical_points(kUp, kWstar, kAniso)) {
    const State z = ode_rhs(e.location, OdeParams(kUp, kWstar, kAniso));
    CHECK(norm(z) < 1e-12);
  }
  // With the identity viscosity the field is minus the gradient of Z.
  const State u{1.3, -0.7};
  const State g = energy_gradient(u, kUp, 5.0);
  const State f = ode_rhs(u, OdeParams(kUp, 5.0, Viscosity{1.0, 1.0}));
  CHECK(f.u1 == Approx(-g.u1));
  CHECK(f.u2 == Approx(-g.u2));
}

TEST_CASE("saddle separatrix at the undercompressive speed") {
  auto shoot_to_plus = [](double W) {
    const OdeParams p(kUp, W, kAniso);
    const auto cp = critical_points(kUp, W, kAniso);
    const auto& ux = cp[1];
    REQUIRE(ux.z_type == ZType::Saddle);
    const auto& unstable = ux.ode_eigen[1];
    REQUIRE(unstable.value > 0.0);
    State dir = unstable.vector;
    if (dot(dir, kUp - ux.location) < 0.0) dir = -dir;
    return shoot_separatrix(ux, dir, p);
  };
  auto hit = shoot_to_plus(kWstar);
  CHECK(hit.terminal == Terminal::ConvergedTo);
  REQUIRE(hit.limit.has_value());
  CHECK(distance(*hit.limit, kUp) < 1e-5);
  CHECK(max_z_increase(hit, kUp, kWstar) <= 1e-7);

  auto miss = shoot_to_plus(7.6);
  const bool reached = miss.terminal == Terminal::ConvergedTo && distance(*miss.limit, kUp) < 1e-3;
  CHECK_FALSE(reached);
}

TEST_CASE("shooting refuses non-saddles") {
  const double W = 6.0;
  const auto cp = critical_points(kUp, W, kAniso);
  for (const auto& e : cp) {
    if (e.z_type == ZType::Saddle) continue;
    CHECK_THROWS_AS(shoot_separatrix(e, e.ode_eigen[0].vector, OdeParams(kUp, W, kAniso)), Error);
  }
}

TEST_CASE("heteroclinic orbits of Lax shocks") {
  auto slow = find_heteroclinic({6.0, -1.0}, kUp, 6.0, kAniso);
  REQUIRE(slow.found());
  const Profile& p = *slow.profile;
  CHECK(distance(p.at(p.xi_min() - 10.0), {6.0, -1.0}) < 1e-4);
  CHECK(distance(p.at(p.xi_max() + 10.0), kUp) < 1e-4);
  CHECK(max_z_increase(p.trajectory, kUp, 6.0) <= 1e-7);
  const State mid = p.at(p.center());
  CHECK(distance(mid, State{4.0, 1.0}) < distance(State{6.0, -1.0}, kUp) / 4.0);

  CHECK_FALSE(find_heteroclinic({7.0, -2.0}, kUp, 8.0, kAniso).found());
  CHECK(find_heteroclinic({7.0, -2.0}, kUp, 8.0, Viscosity{1.0, 2.0}).found());
  CHECK(find_heteroclinic({4.0, 5.0}, kUp, 14.0, kAniso).found());
}

TEST_CASE("overcompressive family") {
  auto none = find_heteroclinic({9.0, -3.0}, kUp, 11.0, kAniso);
  CHECK_FALSE(none.found());
  auto fam = find_heteroclinic({13.0, -3.0}, kUp, 15.0, kAniso);
  REQUIRE(fam.found());
  CHECK(fam.type == ConnectionType::NodeToNode);
  CHECK(fam.family);
}

TEST_CASE("heteroclinic search input checks") {
  CHECK_THROWS_AS(find_heteroclinic({0.0, 0.0}, kUp, 6.0, kAniso), Error);
  // B and the reflected state coincide at the Jouguet speed.
  CHECK_THROWS_AS(find_heteroclinic({8.0, -3.0}, kUp, 10.0, kAniso), Error);
}

TEST_CASE("measured saddle connection speed") {
  auto m = verify_connection(kUp, kAniso);
  CHECK(std::abs(m.W_star - kWstar) <= 1e-6 * kWstar);
  CHECK(m.max_line_deviation <= 1e-5);

  auto m2 = verify_connection({1.0, 1.0}, {2.0, 1.0});
  CHECK(m2.W_star == Approx(3.1547005).epsilon(1e-6));
  CHECK_THROWS_AS(verify_connection(kUp, {1.0, 1.5}), Error);

  CHECK(std::abs(separatrix_splitting(kUp, kWstar, kAniso)) < 1e-6);
  const double below = separatrix_splitting(kUp, kWstar - 0.2, kAniso);
  const double above = separatrix_splitting(kUp, kWstar + 0.2, kAniso);
  CHECK(below * above < 0.0);
}

TEST_CASE("reversed stable separatrix reproduces the connection") {
  const OdeParams p(kUp, kWstar, kAniso);
  const auto cp = critical_points(kUp, kWstar, kAniso);
  const auto& plus = cp[0];
  REQUIRE(plus.z_type == ZType::Saddle);
  const auto& stable = plus.ode_eigen[0];
  REQUIRE(stable.value < 0.0);
  State dir = stable.vector;
  if (dot(dir, cp[1].location - kUp) < 0.0) dir = -dir;
  auto back = shoot_separatrix(plus, dir, p);
  REQUIRE(back.terminal == Terminal::ConvergedTo);
  CHECK(distance(*back.limit, cp[1].location) < 1e-5);
  // Samples run in increasing xi and end at u+.
  CHECK(distance(back.samples.back().u, kUp) < 1e-5);
  for (std::size_t i = 1; i < back.samples.size(); ++i) CHECK(back.samples[i].xi > back.samples[i - 1].xi);
}

TEST_CASE("jouguet connection exists iff mu1 <= mu2") {
  CHECK(jouguet_connection(kUp, {1.0, 2.0}).has_value());
  CHECK(jouguet_connection(kUp, {1.0, 1.0}).has_value());
  CHECK_FALSE(jouguet_connection(kUp, kAniso).has_value());
  CHECK(jouguet_connection(kUp.mirrored(), {1.0, 2.0}).has_value());
}

TEST_CASE("profile csv") {
  auto s = find_heteroclinic({6.0, -1.0}, kUp, 6.0, kAniso);
  REQUIRE(s.found());
  std::ostringstream os;
  write_profile_csv(os, *s.profile);
  const std::string text = os.str();
  CHECK(text.rfind("xi,u1,u2,Z\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == s.profile->trajectory.samples.size() + 1);
}
