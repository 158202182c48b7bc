#include "qwave/structure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include <boost/numeric/odeint/stepper/controlled_runge_kutta.hpp>
#include <boost/numeric/odeint/stepper/generation.hpp>
#include <boost/numeric/odeint/stepper/runge_kutta_dopri5.hpp>

namespace qwave {

State ode_rhs(const State& u, const OdeParams& p) {
  const State f = flux(u);
  return {(f.u1 - p.W * u.u1 - p.D.D1) / p.mu.mu1(), (f.u2 - p.W * u.u2 - p.D.D2) / p.mu.mu2()};
}

const char* to_string(Terminal t) {
  switch (t) {
    case Terminal::ConvergedTo: return "converged";
    case Terminal::Escaped: return "escaped";
    case Terminal::StepLimit: return "step-limit";
  }
  return "?";
}

const char* to_string(ConnectionType t) {
  switch (t) {
    case ConnectionType::SaddleToNode: return "saddle-node";
    case ConnectionType::NodeToSaddle: return "node-saddle";
    case ConnectionType::SaddleToSaddle: return "saddle-saddle";
    case ConnectionType::NodeToNode: return "node-node";
  }
  return "?";
}

namespace {

namespace odeint = boost::numeric::odeint;
using Vec = std::array<double, 2>;

enum class Step { Continue, Stop };

/// Equilibrium set of the ODE with its bounding geometry.
struct Landscape {
  std::array<State, 4> points;
  State center;
  double diameter;

  explicit Landscape(const OdeParams& p) {
    const auto eq = critical_points(p.u_plus, p.W, p.mu);
    for (int i = 0; i < 4; ++i) points[i] = eq[i].location;
    center = (points[0] + points[1] + points[2] + points[3]) * 0.25;
    diameter = 0.0;
    for (const auto& a : points)
      for (const auto& b : points) diameter = std::max(diameter, distance(a, b));
  }

  double escape_radius() const { return 10.0 * diameter + 10.0; }

  /// Distance from `from` to the nearest distinct equilibrium, or 1.
  double separation(const State& from) const {
    double s = std::numeric_limits<double>::infinity();
    for (const auto& q : points) {
      const double d = distance(from, q);
      if (d > tol::degenerate * (1.0 + diameter)) s = std::min(s, d);
    }
    return std::isfinite(s) ? s : 1.0;
  }
};

/// Integrates u' = sign * rhs(u) from `start`, recording every accepted step.
/// `observe` sees (xi, u) and may stop the run; sample xi is the physical
/// variable, i.e. negative and decreasing for sign < 0.
template <class Observe>
Trajectory integrate(const State& start, double sign, const OdeParams& p, const ShootingNumerics& num,
                     Observe&& observe) {
  auto stepper = odeint::make_controlled(num.abs_tol, num.rel_tol, odeint::runge_kutta_dopri5<Vec>());
  auto system = [&](const Vec& x, Vec& dxdt, double) {
    const State f = ode_rhs({x[0], x[1]}, p);
    dxdt = {sign * f.u1, sign * f.u2};
  };

  Trajectory out;
  Vec x{start.u1, start.u2};
  double tau = 0.0;
  const auto lin = ode_linearization(start, p.W, p.mu);
  double h = 1e-2 / (1.0 + std::max(std::abs(lin[0].value), std::abs(lin[1].value)));
  out.samples.push_back({0.0, start});

  std::size_t accepted = 0;
  std::size_t rejected = 0;
  while (accepted < num.max_steps && tau < num.max_xi) {
    const auto res = stepper.try_step(system, x, tau, h);
    if (res != odeint::success) {
      if (++rejected > 100'000 || h < 1e-300) break;
      continue;
    }
    ++accepted;
    const State u{x[0], x[1]};
    out.samples.push_back({sign * tau, u});
    if (!u.finite()) {
      out.terminal = Terminal::Escaped;
      break;
    }
    if (observe(u, out) == Step::Stop) break;
  }
  if (sign < 0.0) std::reverse(out.samples.begin(), out.samples.end());
  return out;
}

/// Standard stopping rule: convergence to an equilibrium, escape, or return
/// to the start point.
struct ShotObserver {
  const Landscape& land;
  State start_eq;
  double offset;
  double delta;

  Step operator()(const State& u, Trajectory& t) const {
    if (distance(u, land.center) > land.escape_radius()) {
      t.terminal = Terminal::Escaped;
      return Step::Stop;
    }
    if (distance(u, start_eq) < 0.5 * offset) {
      t.terminal = Terminal::ConvergedTo;
      t.limit = start_eq;
      return Step::Stop;
    }
    for (const auto& q : land.points) {
      if (distance(q, start_eq) <= tol::degenerate * (1.0 + land.diameter)) continue;
      if (distance(u, q) < delta) {
        t.terminal = Terminal::ConvergedTo;
        t.limit = q;
        return Step::Stop;
      }
    }
    return Step::Continue;
  }
};

Trajectory shoot_from(const State& eq, const State& direction, double sign, const OdeParams& p,
                      const ShootingNumerics& num, const Landscape& land) {
  const double eps = num.offset_factor * land.separation(eq);
  const State dir = direction / norm(direction);
  ShotObserver obs{land, eq, eps, num.convergence_radius};
  return integrate(eq + dir * eps, sign, p, num, obs);
}

enum class NodeKind { Saddle, Attracting, Repelling, Degenerate };

NodeKind node_kind(const std::array<EigenPair, 2>& e) {
  const double scale = 1.0 + std::max(std::abs(e[0].value), std::abs(e[1].value));
  if (std::abs(e[0].value) <= tol::degenerate * scale || std::abs(e[1].value) <= tol::degenerate * scale)
    return NodeKind::Degenerate;
  if (e[0].value < 0.0 && e[1].value > 0.0) return NodeKind::Saddle;
  return e[1].value < 0.0 ? NodeKind::Attracting : NodeKind::Repelling;
}

bool converged_to(const Trajectory& t, const State& target, double delta) {
  return t.terminal == Terminal::ConvergedTo && t.limit && distance(*t.limit, target) < delta;
}

struct Splitting {
  double value;  // NaN when undefined
  double gap;    // |value|, or infinity
};

/// Signed offset, along the section through the midpoint of [ux, u+]
/// perpendicular to it, of the first crossing of a separatrix. NaN if the
/// separatrix never reaches the section.
double section_offset(const State& from, const State& dir, double sign, const State& mid, const State& axis,
                      const OdeParams& p, const ShootingNumerics& num, const Landscape& land) {
  double offset = std::numeric_limits<double>::quiet_NaN();
  const double eps = num.offset_factor * land.separation(from);
  State prev = from + dir * eps;
  auto observe = [&](const State& u, Trajectory& t) {
    if (distance(u, land.center) > land.escape_radius()) {
      t.terminal = Terminal::Escaped;
      return Step::Stop;
    }
    const double s0 = dot(prev - mid, axis) * sign;
    const double s1 = dot(u - mid, axis) * sign;
    if (s0 < 0.0 && s1 >= 0.0) {
      const double w = s0 / (s0 - s1);
      offset = cross(axis, prev + (u - prev) * w - mid);
      return Step::Stop;
    }
    prev = u;
    for (const auto& q : land.points)
      if (distance(q, from) > num.convergence_radius && distance(u, q) < num.convergence_radius) return Step::Stop;
    return Step::Continue;
  };
  integrate(prev, sign, p, num, observe);
  return offset;
}

Splitting splitting_impl(const State& up_in, double W, const Viscosity& mu, const ShootingNumerics& num) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  const State up = up_in.u2 < 0.0 ? up_in.mirrored() : up_in;
  const State ux{W - up.u1, -up.u2};
  if (z_type_at(up, W) != ZType::Saddle || z_type_at(ux, W) != ZType::Saddle) return {nan, inf};

  const OdeParams p(up, W, mu);
  const Landscape land(p);
  const State axis = (up - ux) / distance(up, ux);
  const State mid = (up + ux) * 0.5;

  State v_out = ode_linearization(ux, W, mu)[1].vector;
  if (dot(v_out, axis) < 0.0) v_out = -v_out;
  State v_in = ode_linearization(up, W, mu)[0].vector;
  if (dot(v_in, axis) > 0.0) v_in = -v_in;

  // Forward from ux the section is crossed with dot(u - mid, axis) rising;
  // backward from u+ it is crossed falling.
  const double a = section_offset(ux, v_out, 1.0, mid, axis, p, num, land);
  const double b = section_offset(up, v_in, -1.0, mid, axis, p, num, land);
  if (!std::isfinite(a) || !std::isfinite(b)) return {nan, inf};
  return {a - b, std::abs(a - b)};
}

}  // namespace

// ---------------------------------------------------------------------------

Trajectory shoot_separatrix(const EquilibriumInfo& eq, const State& direction, const OdeParams& p,
                            const ShootingNumerics& numerics) {
  if (eq.z_type != ZType::Saddle) throw Error(ErrorCode::NotASaddle, "shoot_separatrix: equilibrium is not a saddle");
  const auto lin = ode_linearization(eq.location, p.W, p.mu);
  const State dir = direction / norm(direction);
  const int k = std::abs(dot(dir, lin[0].vector)) >= std::abs(dot(dir, lin[1].vector)) ? 0 : 1;
  if (std::abs(dot(dir, lin[k].vector)) < 0.99)
    throw Error(ErrorCode::InvalidArgument, "shoot_separatrix: direction is not a saddle eigenvector");
  const double sign = lin[k].value > 0.0 ? 1.0 : -1.0;
  const Landscape land(p);
  return shoot_from(eq.location, dir, sign, p, numerics, land);
}

State Profile::at(double xi) const {
  const auto& s = trajectory.samples;
  if (xi <= s.front().xi) return u_minus;
  if (xi >= s.back().xi) return u_plus;
  auto it = std::upper_bound(s.begin(), s.end(), xi, [](double x, const TrajectorySample& q) { return x < q.xi; });
  const auto& b = *it;
  const auto& a = *(it - 1);
  const double h = b.xi - a.xi;
  const double t = (xi - a.xi) / h;
  const OdeParams p(u_plus, W, mu);
  const State da = ode_rhs(a.u, p) * h;
  const State db = ode_rhs(b.u, p) * h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return a.u * (2 * t3 - 3 * t2 + 1) + da * (t3 - 2 * t2 + t) + b.u * (-2 * t3 + 3 * t2) + db * (t3 - t2);
}

double Profile::center() const {
  const State mid = (u_minus + u_plus) * 0.5;
  double best = std::numeric_limits<double>::infinity();
  double xi = 0.0;
  for (const auto& s : trajectory.samples) {
    const double d = distance(s.u, mid);
    if (d < best) {
      best = d;
      xi = s.xi;
    }
  }
  return xi;
}

HeteroclinicSearch find_heteroclinic(const State& u_minus, const State& u_plus, double W, const Viscosity& mu,
                                     const ShootingNumerics& numerics) {
  const OdeParams p(u_plus, W, mu);
  const Landscape land(p);
  const double scale = 1.0 + dot(u_minus, u_minus) + dot(u_plus, u_plus) + W * W;
  if (norm(ode_rhs(u_minus, p)) * std::min(mu.mu1(), mu.mu2()) > tol::locus * scale)
    throw Error(ErrorCode::NotEquilibrium, "find_heteroclinic: u_minus is not an equilibrium for this speed");

  const auto em = ode_linearization(u_minus, W, mu);
  const auto ep = ode_linearization(u_plus, W, mu);
  const NodeKind km = node_kind(em);
  const NodeKind kp = node_kind(ep);
  if (km == NodeKind::Degenerate || kp == NodeKind::Degenerate)
    throw Error(ErrorCode::DegenerateEquilibrium,
                "find_heteroclinic: saddle-node equilibrium; generic shooting does not apply");

  HeteroclinicSearch out;
  const double delta = numerics.convergence_radius;
  auto accept = [&](Trajectory t) {
    out.profile = Profile{std::move(t), u_minus, u_plus, W, mu};
  };

  if (km == NodeKind::Saddle && (kp == NodeKind::Attracting || kp == NodeKind::Saddle)) {
    out.type = kp == NodeKind::Saddle ? ConnectionType::SaddleToSaddle : ConnectionType::SaddleToNode;
    for (double s : {1.0, -1.0}) {
      ++out.arcs_tried;
      auto t = shoot_from(u_minus, em[1].vector * s, 1.0, p, numerics, land);
      if (converged_to(t, u_plus, delta)) {
        ++out.arcs_found;
        if (!out.profile) accept(std::move(t));
      }
    }
    out.reason = out.found() ? "unstable separatrix of u- reaches u+" : "both unstable separatrix branches miss u+";
    return out;
  }
  if (km == NodeKind::Repelling && kp == NodeKind::Saddle) {
    out.type = ConnectionType::NodeToSaddle;
    for (double s : {1.0, -1.0}) {
      ++out.arcs_tried;
      auto t = shoot_from(u_plus, ep[0].vector * s, -1.0, p, numerics, land);
      if (converged_to(t, u_minus, delta)) {
        ++out.arcs_found;
        if (!out.profile) accept(std::move(t));
      }
    }
    out.reason = out.found() ? "stable separatrix of u+ comes from u-" : "both stable separatrix branches miss u-";
    return out;
  }
  if (km == NodeKind::Repelling && kp == NodeKind::Attracting) {
    out.type = ConnectionType::NodeToNode;
    constexpr int kRing = 64;
    std::vector<Trajectory> hits;
    for (int i = 0; i < kRing; ++i) {
      const double a = 2.0 * std::numbers::pi * (i + 0.5) / kRing;
      ++out.arcs_tried;
      auto t = shoot_from(u_minus, {std::cos(a), std::sin(a)}, 1.0, p, numerics, land);
      if (converged_to(t, u_plus, delta)) hits.push_back(std::move(t));
    }
    if (!hits.empty()) {
      out.arcs_found = static_cast<int>(hits.size());
      accept(std::move(hits[hits.size() / 2]));
      out.reason = "arcs from the repelling node reach u+";
    } else {
      // When both saddle separatrices leave u- tangent to the same weak
      // eigendirection, the connecting orbits fill a cusp far thinner than any
      // ring spacing. Seeds inside the phase plane, followed both ways, find it.
      const auto eq = critical_points(u_plus, W, mu);
      const std::array<std::pair<State, State>, 2> chords{{{u_minus, u_plus}, {eq[2].location, eq[3].location}}};
      constexpr int kSeeds = 32;
      for (const auto& [a, b] : chords) {
        for (int i = 0; i < kSeeds && !out.profile; ++i) {
          const State seed = a + (b - a) * ((i + 0.5) / kSeeds);
          const ShotObserver obs{land, seed, 0.0, delta};
          ++out.arcs_tried;
          auto fwd = integrate(seed, 1.0, p, numerics, obs);
          if (!converged_to(fwd, u_plus, delta)) continue;
          auto back = integrate(seed, -1.0, p, numerics, obs);
          if (!converged_to(back, u_minus, delta)) continue;
          ++out.arcs_found;
          back.samples.insert(back.samples.end(), fwd.samples.begin() + 1, fwd.samples.end());
          back.terminal = Terminal::ConvergedTo;
          back.limit = u_plus;
          accept(std::move(back));
        }
      }
      out.reason = out.found() ? "an interior orbit joins the two nodes" : "no orbit from u- reaches u+";
    }
    // Both basins are open, so one connecting orbit comes with a whole family.
    out.family = out.found();
    return out;
  }
  out.type = km == NodeKind::Saddle ? ConnectionType::SaddleToNode : ConnectionType::NodeToSaddle;
  out.reason = "equilibrium types admit no orbit u- -> u+ (energy must decrease along the profile)";
  return out;
}

double separatrix_splitting(const State& u_plus, double W, const Viscosity& mu, const ShootingNumerics& numerics) {
  return splitting_impl(u_plus, W, mu, numerics).value;
}

ConnectionMeasurement verify_connection(const State& u_plus_in, const Viscosity& mu,
                                        const ShootingNumerics& numerics) {
  if (!mu.anisotropic_fast())
    throw Error(ErrorCode::NoUndercompressive, "verify_connection: saddle connections require mu2 < mu1");
  if (std::abs(u_plus_in.u2) <= tol::degenerate)
    throw Error(ErrorCode::DegenerateAxis, "verify_connection: u2+ = 0");
  const State up = u_plus_in.u2 < 0.0 ? u_plus_in.mirrored() : u_plus_in;
  const double a2 = up.u2;

  // Both u+ and ux are saddles for W/2 in (u1+ - a2, u1+ + a2).
  constexpr int kScan = 48;
  const double lo = 2.0 * (up.u1 - a2);
  const double hi = 2.0 * (up.u1 + a2);
  std::vector<double> ws;
  std::vector<Splitting> sp;
  int shots = 0;
  for (int i = 1; i < kScan; ++i) {
    ws.push_back(lo + (hi - lo) * i / kScan);
    sp.push_back(splitting_impl(up, ws.back(), mu, numerics));
    ++shots;
  }

  double best_W = std::numeric_limits<double>::quiet_NaN();
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
    const double f0 = sp[i].value;
    const double f1 = sp[i + 1].value;
    if (!std::isfinite(f0) || !std::isfinite(f1)) continue;
    if (f0 == 0.0 || f1 == 0.0 || (f0 < 0.0) != (f1 < 0.0)) {
      double a = ws[i], b = ws[i + 1], fa = f0;
      double dmin = std::min(sp[i].gap, sp[i + 1].gap);
      if (f0 == 0.0) b = a;
      else if (f1 == 0.0) a = b;
      for (int it = 0; it < 200 && b - a > 1e-14 * (1.0 + std::abs(a)); ++it) {
        const double mid = 0.5 * (a + b);
        const auto s = splitting_impl(up, mid, mu, numerics);
        ++shots;
        if (!std::isfinite(s.value)) break;
        dmin = s.gap;
        if (s.value == 0.0) {
          a = b = mid;
          break;
        }
        if ((s.value < 0.0) == (fa < 0.0)) {
          a = mid;
          fa = s.value;
        } else {
          b = mid;
        }
      }
      if (dmin < best_d) {
        best_d = dmin;
        best_W = 0.5 * (a + b);
      }
    }
  }
  const double sep_scale = 2.0 * a2;
  if (!std::isfinite(best_W) || !(best_d < 1e-6 * sep_scale))
    throw Error(ErrorCode::NotFound, "verify_connection: no saddle connection ux -> u+ located");

  // Shape of the connecting orbit at the located speed.
  const State ux{best_W - up.u1, -up.u2};
  const OdeParams p(up, best_W, mu);
  const Landscape land(p);
  auto ex = ode_linearization(ux, best_W, mu);
  State v = ex[1].vector;
  if (dot(v, up - ux) < 0.0) v = -v;
  const auto t = shoot_from(ux, v, 1.0, p, numerics, land);
  ++shots;
  const State axis = (up - ux) / norm(up - ux);
  double dev = 0.0;
  for (const auto& s : t.samples) dev = std::max(dev, std::abs(cross(axis, s.u - ux)));
  return {best_W, dev, shots};
}

std::optional<Trajectory> jouguet_connection(const State& u_plus_in, const Viscosity& mu,
                                             const ShootingNumerics& numerics) {
  if (std::abs(u_plus_in.u2) <= tol::degenerate)
    throw Error(ErrorCode::DegenerateAxis, "jouguet_connection: u2+ = 0");
  const bool flip = u_plus_in.u2 < 0.0;
  const State up = flip ? u_plus_in.mirrored() : u_plus_in;
  const double W = 2.0 * (up.u1 + up.u2);
  const State b{up.u1 + 2.0 * up.u2, -up.u2};
  const OdeParams p(up, W, mu);
  const Landscape land(p);
  const auto lin = ode_linearization(b, W, mu);
  const int centre = std::abs(lin[0].value) <= std::abs(lin[1].value) ? 0 : 1;
  // The centre direction first; the strong direction of B as a fallback shot.
  for (const State dir : {lin[centre].vector, -lin[centre].vector, lin[1 - centre].vector, -lin[1 - centre].vector}) {
    auto t = shoot_from(b, dir, 1.0, p, numerics, land);
    if (converged_to(t, up, numerics.convergence_radius)) {
      if (flip)
        for (auto& s : t.samples) s.u = s.u.mirrored();
      if (flip && t.limit) t.limit = t.limit->mirrored();
      return t;
    }
  }
  return std::nullopt;
}

void write_profile_csv(std::ostream& os, const Profile& profile) {
  const auto old = os.precision(17);
  os << "xi,u1,u2,Z\n";
  for (const auto& s : profile.trajectory.samples)
    os << s.xi << ',' << s.u.u1 << ',' << s.u.u2 << ',' << energy_Z(s.u, profile.u_plus, profile.W) << '\n';
  os.precision(old);
}

}  // namespace qwave
