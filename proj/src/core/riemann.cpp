#include "qwave/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace qwave {

namespace {

using json = nlohmann::json;

bool on_axis(const State& u, double eps = tol::degenerate) { return std::abs(u.u2) <= eps; }

double inf_norm(const State& u) { return std::max(std::abs(u.u1), std::abs(u.u2)); }

/// Half-plane of a fan: sign of the endpoint farther from the axis.
double fan_side(const State& l, const State& r) {
  const State& far = std::abs(l.u2) >= std::abs(r.u2) ? l : r;
  return far.u2 >= 0.0 ? 1.0 : -1.0;
}

/// Direction of a fan of the given kind in the half-plane `side`,
/// scaled so that the family speed grows by 4 per unit parameter.
State fan_direction(WaveKind k, double side) {
  const bool fast = k == WaveKind::FastRarefaction;
  return (fast == (side > 0.0)) ? State{1.0, 1.0} : State{1.0, -1.0};
}

double family_speed(WaveKind k, const State& u) {
  switch (k) {
    case WaveKind::FastRarefaction: return 2.0 * u.u1 + 2.0 * std::abs(u.u2);
    case WaveKind::SlowRarefaction: return 2.0 * u.u1 - 2.0 * std::abs(u.u2);
    default: return 2.0 * u.u1;
  }
}

}  // namespace

const char* to_string(WaveKind k) {
  switch (k) {
    case WaveKind::FastShock: return "FastShock";
    case WaveKind::SlowShock: return "SlowShock";
    case WaveKind::Undercompressive: return "Undercompressive";
    case WaveKind::Jouguet: return "Jouguet";
    case WaveKind::FastRarefaction: return "FastRarefaction";
    case WaveKind::SlowRarefaction: return "SlowRarefaction";
    case WaveKind::SpecialRarefaction: return "SpecialRarefaction";
  }
  return "?";
}

std::optional<WaveKind> wave_kind_from_string(const std::string& s) {
  for (auto k : {WaveKind::FastShock, WaveKind::SlowShock, WaveKind::Undercompressive, WaveKind::Jouguet,
                 WaveKind::FastRarefaction, WaveKind::SlowRarefaction, WaveKind::SpecialRarefaction})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

const char* to_string(Region r) {
  switch (r) {
    case Region::R1: return "R1";
    case Region::R2: return "R2";
    case Region::R3: return "R3";
    case Region::R4: return "R4";
    case Region::R5: return "R5";
    case Region::R6: return "R6";
    case Region::R7: return "R7";
    case Region::R8: return "R8";
    case Region::R1p: return "R1p";
    case Region::R2p: return "R2p";
    case Region::R3p: return "R3p";
    case Region::R4p: return "R4p";
    case Region::Degenerate: return "Degenerate";
  }
  return "?";
}

std::optional<Region> region_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(Region::Degenerate); ++i)
    if (s == to_string(static_cast<Region>(i))) return static_cast<Region>(i);
  return std::nullopt;
}

const char* pattern_of(Region r) {
  switch (r) {
    case Region::R1: return "S1 S2";
    case Region::R2: return "S1 S2^";
    case Region::R3: return "R1 S2^";
    case Region::R4: return "R1 J R2";
    case Region::R5: return "R1 R R2";
    case Region::R6: return "R1 R2";
    case Region::R7: return "R1 S2";
    case Region::R8: return "S1 R2";
    case Region::R1p: return "S1 Z S2";
    case Region::R2p: return "R1 Z S2";
    case Region::R3p: return "S1 Z R2";
    case Region::R4p: return "R1 Z R2";
    case Region::Degenerate: return "-";
  }
  return "?";
}

State Wave::fan_state(double theta) const {
  const double t = std::clamp(theta, theta_min, theta_max);
  if (kind == WaveKind::SpecialRarefaction) return {0.5 * t, 0.0};
  if (t >= theta_max) return right;
  return left + fan_direction(kind, fan_side(left, right)) * ((t - theta_min) / 4.0);
}

Wave make_wave(WaveKind kind, const State& left, const State& right) {
  if (is_fan(kind)) return {kind, left, right, family_speed(kind, left), family_speed(kind, right)};
  const double W = shock_speed(left, right);
  return {kind, left, right, W, W};
}

// ---------------------------------------------------------------------------
// Admissibility predicates

namespace {

struct Tolerance {
  double eps;  // absolute, already scaled to the data
};

/// Entropy rule for a shock touching the u2 = 0 axis: each Riemann invariant
/// is either continuous or jumps down from left to right.
bool axis_entropy_ok(const State& l, const State& r, double eps) {
  const State a = to_invariants(l);
  const State b = to_invariants(r);
  return a.u1 >= b.u1 - eps && a.u2 >= b.u2 - eps;
}

std::optional<std::string> check_shock(const Wave& w, const Viscosity& mu, Tolerance tol) {
  const ShockCandidate c{w.left, w.right, w.speed()};
  const double scale = 1.0 + inf_norm(w.left) + inf_norm(w.right);
  if (rh_residual(c) > tol::locus * scale * scale) return "jump conditions violated";

  switch (w.kind) {
    case WaveKind::Undercompressive: {
      if (!mu.anisotropic_fast()) return "undercompressive wave requires mu2 < mu1";
      if (on_axis(w.right, tol.eps)) return "undercompressive wave ahead state on the axis";
      const double W = undercompressive_speed(w.right, mu);
      if (std::abs(W - w.speed()) > tol.eps * (1.0 + std::abs(W))) return "undercompressive speed mismatch";
      return std::nullopt;
    }
    case WaveKind::Jouguet: {
      if (!jouguet_admissible(mu)) return "Jouguet wave requires mu1 <= mu2";
      if (on_axis(w.right, tol.eps)) return "Jouguet wave ahead state on the axis";
      const State b{w.right.u1 + 2.0 * std::abs(w.right.u2), -w.right.u2};
      if (distance(b, w.left) > tol.eps * scale) return "Jouguet wave behind state is not the tangency point";
      return std::nullopt;
    }
    default: break;
  }

  if (on_axis(w.left) || on_axis(w.right)) {
    if (!axis_entropy_ok(w.left, w.right, tol.eps)) return "axis shock violates the invariant entropy rule";
    return std::nullopt;
  }
  const Classification k = lax_classify(c);
  const ShockKind want = w.kind == WaveKind::FastShock ? ShockKind::FastShock : ShockKind::SlowShock;
  if (k.kind != want) return std::string("classified as ") + to_string(k.kind);
  const StructureVerdict sv = structure_exists(c, mu);
  if (sv.verdict == Verdict::No) return "no viscous profile: " + sv.reason;
  return std::nullopt;
}

std::optional<std::string> check_fan(const Wave& w, Tolerance tol) {
  if (w.kind == WaveKind::SpecialRarefaction) {
    if (!on_axis(w.left, tol.eps) || !on_axis(w.right, tol.eps)) return "special fan leaves the axis";
    if (!(w.left.u1 < w.right.u1)) return "special fan must increase u1";
    return std::nullopt;
  }
  const double side = fan_side(w.left, w.right);
  if (w.left.u2 * side < -tol.eps || w.right.u2 * side < -tol.eps) return "fan crosses the axis";
  const State d = fan_direction(w.kind, side);
  if (std::abs(cross(w.right - w.left, d)) > tol.eps * (1.0 + inf_norm(w.right - w.left)))
    return "fan endpoints not on one family line";
  if (!(family_speed(w.kind, w.right) > family_speed(w.kind, w.left))) return "fan speeds decrease";
  return std::nullopt;
}

std::optional<std::string> check_wave(const Wave& w, const Viscosity& mu, Tolerance tol) {
  try {
    return is_fan(w.kind) ? check_fan(w, tol) : check_shock(w, mu, tol);
  } catch (const Error& e) {
    return std::string(e.what());
  }
}

/// Order check between consecutive waves. Equal speeds are allowed at a
/// Jouguet wave and where the shared state lies on the axis.
std::optional<std::string> check_order(const Wave& a, const Wave& b, Tolerance tol, bool strict) {
  const double gap = b.theta_min - a.theta_max;
  const double eps = tol.eps * (1.0 + std::abs(a.theta_max));
  if (gap < -eps) return "speeds out of order";
  if (strict && gap <= eps && a.kind != WaveKind::Jouguet && b.kind != WaveKind::Jouguet && !on_axis(a.right, tol.eps))
    return "consecutive waves travel at equal speed";
  return std::nullopt;
}

Tolerance tolerance_for(const State& uL, const State& uR) {
  return {1e-9 * (1.0 + inf_norm(uL) + inf_norm(uR))};
}

// ---------------------------------------------------------------------------
// Candidate patterns, built in the frame where u2 of uR is >= 0.

enum class FastPart { Shock, ShockHat, Fan, FullFan };
enum class MidPart { None, Under, Jouguet, Special };
enum class SlowPart { Shock, Fan };

struct Pattern {
  Region region;
  FastPart fast;
  MidPart mid;
  SlowPart slow;
};

constexpr std::array<Pattern, 12> kPatterns{{
    {Region::R1, FastPart::Shock, MidPart::None, SlowPart::Shock},
    {Region::R2, FastPart::ShockHat, MidPart::None, SlowPart::Shock},
    {Region::R3, FastPart::ShockHat, MidPart::None, SlowPart::Fan},
    {Region::R4, FastPart::Fan, MidPart::Jouguet, SlowPart::Fan},
    {Region::R5, FastPart::FullFan, MidPart::Special, SlowPart::Fan},
    {Region::R6, FastPart::Fan, MidPart::None, SlowPart::Fan},
    {Region::R7, FastPart::Shock, MidPart::None, SlowPart::Fan},
    {Region::R8, FastPart::Fan, MidPart::None, SlowPart::Shock},
    {Region::R1p, FastPart::Shock, MidPart::Under, SlowPart::Shock},
    {Region::R2p, FastPart::Shock, MidPart::Under, SlowPart::Fan},
    {Region::R3p, FastPart::Fan, MidPart::Under, SlowPart::Shock},
    {Region::R4p, FastPart::Fan, MidPart::Under, SlowPart::Fan},
}};

/// Map from the fast wave's behind state v to the middle wave's behind state:
/// w = (v1 + k v2, -v2), with k = 2m (undercompressive) or 2 (Jouguet).
State cross_map(const State& v, double k) { return {v.u1 + k * v.u2, -v.u2}; }

std::optional<RiemannSolution> build(const Pattern& pat, const State& uL, const State& A, const Viscosity& mu,
                                     double slow_side, Tolerance tol) {
  const double a2 = A.u2;
  const State H{A.u1 - a2, 0.0};

  if (pat.mid == MidPart::Under && !mu.anisotropic_fast()) return std::nullopt;
  if (pat.mid == MidPart::Jouguet && mu.anisotropic_fast()) return std::nullopt;
  const double k_mid = pat.mid == MidPart::Under ? 2.0 * *mu.m() : 2.0;

  // Fast wave behind state v = v0 + P dv, middle wave behind state w = w0 + P dw.
  State v0 = A, dv{0.0, 0.0};
  switch (pat.fast) {
    case FastPart::Shock: dv = {1.0, 1.0}; break;
    case FastPart::ShockHat: dv = {1.0, -1.0}; break;
    case FastPart::Fan: dv = {-1.0, -1.0}; break;
    case FastPart::FullFan: v0 = H; break;
  }
  State w0 = v0, dw = dv;
  switch (pat.mid) {
    case MidPart::None: break;
    case MidPart::Under:
    case MidPart::Jouguet:
      w0 = cross_map(v0, k_mid);
      dw = cross_map(dv, k_mid);
      break;
    case MidPart::Special:
      w0 = H;
      dw = {-1.0, 0.0};
      break;
  }
  // Slow wave: uL = w + q s.
  State s = slow_side > 0.0 ? State{1.0, -1.0} : State{1.0, 1.0};
  if (pat.slow == SlowPart::Fan) s = -s;

  const double det = cross(dw, s);
  if (std::abs(det) < 1e-14) return std::nullopt;
  const State rhs = uL - w0;
  const double P = cross(rhs, s) / det;
  const double q = cross(dw, rhs) / det;
  if (P < -tol.eps || q < -tol.eps) return std::nullopt;

  const State v = v0 + dv * P;
  const State w = w0 + dw * P;
  if (w.u2 * slow_side < -tol.eps) return std::nullopt;

  const WaveKind fast_kind =
      (pat.fast == FastPart::Shock || pat.fast == FastPart::ShockHat) ? WaveKind::FastShock : WaveKind::FastRarefaction;
  const WaveKind slow_kind = pat.slow == SlowPart::Shock ? WaveKind::SlowShock : WaveKind::SlowRarefaction;

  std::vector<State> pts{uL};
  std::vector<WaveKind> kinds{slow_kind};
  if (pat.mid != MidPart::None) {
    pts.push_back(w);
    kinds.push_back(pat.mid == MidPart::Under     ? WaveKind::Undercompressive
                    : pat.mid == MidPart::Jouguet ? WaveKind::Jouguet
                                                  : WaveKind::SpecialRarefaction);
  }
  pts.push_back(v);
  kinds.push_back(fast_kind);
  pts.push_back(A);

  // Drop zero-strength waves; the data end states stay exact.
  for (std::size_t i = 0; i + 1 < pts.size();) {
    if (distance(pts[i], pts[i + 1]) <= tol.eps) {
      kinds.erase(kinds.begin() + static_cast<long>(i));
      pts.erase(pts.begin() + static_cast<long>(i + 1 == pts.size() - 1 ? i : i + 1));
    } else {
      ++i;
    }
  }

  RiemannSolution sol{uL, A, {}, pat.region, false};
  try {
    for (std::size_t i = 0; i < kinds.size(); ++i) sol.waves.push_back(make_wave(kinds[i], pts[i], pts[i + 1]));
  } catch (const Error&) {
    return std::nullopt;
  }
  for (const auto& wv : sol.waves)
    if (check_wave(wv, mu, tol)) return std::nullopt;
  for (std::size_t i = 0; i + 1 < sol.waves.size(); ++i)
    if (check_order(sol.waves[i], sol.waves[i + 1], tol, false)) return std::nullopt;
  return sol;
}

bool same_waves(const RiemannSolution& a, const RiemannSolution& b, double eps) {
  if (a.waves.size() != b.waves.size()) return false;
  for (std::size_t i = 0; i < a.waves.size(); ++i) {
    const Wave& x = a.waves[i];
    const Wave& y = b.waves[i];
    if (x.kind != y.kind || distance(x.left, y.left) > eps || distance(x.right, y.right) > eps) return false;
  }
  return true;
}

RiemannSolution mirror(RiemannSolution s) {
  s.left = s.left.mirrored();
  s.right = s.right.mirrored();
  for (auto& w : s.waves) {
    w.left = w.left.mirrored();
    w.right = w.right.mirrored();
  }
  return s;
}

}  // namespace

std::vector<RiemannSolution> admissible_solutions(const State& uL, const State& uR, const Viscosity& mu) {
  if (!uL.finite() || !uR.finite()) throw Error(ErrorCode::InvalidArgument, "Riemann data must be finite");
  const Tolerance tol = tolerance_for(uL, uR);
  const bool flip = uR.u2 < 0.0;
  const State A = flip ? uR.mirrored() : uR;
  const State L = flip ? uL.mirrored() : uL;
  const bool degenerate = on_axis(A);

  std::vector<RiemannSolution> out;
  if (distance(L, A) <= tol.eps) {
    out.push_back({uL, uR, {}, degenerate ? Region::Degenerate : Region::R1, false});
    return out;
  }
  for (const auto& pat : kPatterns) {
    for (double side : {1.0, -1.0}) {
      auto sol = build(pat, L, A, mu, side, tol);
      if (!sol) continue;
      if (degenerate) sol->region = Region::Degenerate;
      const bool dup = std::any_of(out.begin(), out.end(), [&](const RiemannSolution& o) {
        return same_waves(o, *sol, 1e3 * tol.eps);
      });
      if (!dup) out.push_back(flip ? mirror(std::move(*sol)) : std::move(*sol));
    }
  }
  return out;
}

RiemannSolution solve_riemann(const State& uL, const State& uR, const Viscosity& mu) {
  auto all = admissible_solutions(uL, uR, mu);
  if (all.empty()) throw Error(ErrorCode::NoSolution, "no admissible wave pattern connects the data");
  RiemannSolution sol = std::move(all.front());
  sol.on_boundary = all.size() > 1;
  return sol;
}

// ---------------------------------------------------------------------------
// Closed-form region inequalities

std::optional<Region> classify_region_closed_form(const State& uL_in, const State& uR, const Viscosity& mu) {
  if (on_axis(uR)) return Region::Degenerate;
  const bool flip = uR.u2 < 0.0;
  const State A = flip ? uR.mirrored() : uR;
  const State uL = flip ? uL_in.mirrored() : uL_in;
  const double a1 = A.u1, a2 = A.u2;
  const double x = uL.u1 - a1, y = uL.u2 - a2;
  const bool aniso = mu.anisotropic_fast();
  const double m = aniso ? *mu.m() : 1.0;

  for (double eps : {0.0, tolerance_for(uL, A).eps}) {
    auto lt = [eps](double a, double b) { return a < b + eps; };
    {  // S1 S2
      const double p = (x + y) / 2, q = (x - y) / 2;
      if (lt(0, p) && lt(0, q) && lt(q, 2 * a2 + p) && (!aniso || lt(q, (1 + m) * (a2 + p)))) return Region::R1;
    }
    {  // S1 S2^
      const double p = (x - y) / 2, q = (x + y) / 2;
      const bool fast_ok = aniso ? lt((1 + 1 / m) * a2, p) : lt(2 * a2, p);
      if (fast_ok && lt(0, q) && lt(q, p - 2 * a2) && (!aniso || lt(q, (1 + m) * (p - a2)))) return Region::R2;
    }
    {  // R1 S2^
      const double p = (x - y) / 2, q = -(x + y) / 2;
      const bool fast_ok = aniso ? lt((1 + 1 / m) * a2, p) : lt(2 * a2, p);
      if (fast_ok && lt(0, q)) return Region::R3;
    }
    if (!aniso) {  // R1 J R2
      const double p = a2 - (x - y) / 4, q = p - y - 2 * a2;
      if (lt(0, p) && lt(p, a2) && lt(0, q)) return Region::R4;
    }
    {  // R1 R R2
      const double q = std::abs(uL.u2), r = a1 - a2 - q - uL.u1;
      if (lt(0, r) && lt(0, q)) return Region::R5;
    }
    {  // R1 R2
      const double p = -(x + y) / 2, q = (y - x) / 2;
      if (lt(0, p) && lt(p, a2) && lt(0, q)) return Region::R6;
    }
    {  // R1 S2
      const double p = (x + y) / 2, q = (y - x) / 2;
      if (lt(0, p) && lt(0, q)) return Region::R7;
    }
    {  // S1 R2
      const double p = -(x + y) / 2, q = (x - y) / 2;
      const double cap = aniso ? (1 + m) * (a2 - p) : 2 * (a2 - p);
      if (lt(0, p) && lt(p, a2) && lt(0, q) && lt(q, cap)) return Region::R8;
    }
    if (aniso) {
      const double pf = (x - y - 2 * a2 * (1 + m)) / (2 * (1 + m));
      const double pr = (2 * a2 * (1 + m) - (x - y)) / (2 * (1 + m));
      if (lt(0, pf) && lt(m * pf, (1 - m) * a2)) {
        const double q1 = y + 2 * a2 + pf;
        if (lt(0, q1) && lt(q1, (1 - m) * (a2 + pf))) return Region::R1p;
        const double q2 = -y - 2 * a2 - pf;
        if (lt(0, q2)) return Region::R2p;
      }
      if (lt(0, pr) && lt(pr, a2)) {
        const double q3 = y + 2 * a2 - pr;
        if (lt(0, q3) && lt(q3, (1 - m) * (a2 - pr))) return Region::R3p;
        const double q4 = pr - y - 2 * a2;
        if (lt(0, q4)) return Region::R4p;
      }
    }
  }
  return std::nullopt;
}

Region classify_region(const State& uL, const State& uR, const Viscosity& mu) {
  if (auto r = classify_region_closed_form(uL, uR, mu)) return *r;
  try {
    return solve_riemann(uL, uR, mu).region;
  } catch (const Error&) {
    return Region::Degenerate;
  }
}

// ---------------------------------------------------------------------------

State sample_solution(const RiemannSolution& sol, double theta) {
  State current = sol.left;
  for (const auto& w : sol.waves) {
    if (theta < w.theta_min) return current;
    if (is_fan(w.kind) && theta < w.theta_max) return w.fan_state(theta);
    current = w.right;
  }
  return current;
}

std::vector<std::string> validate_solution(const RiemannSolution& sol, const Viscosity& mu) {
  std::vector<std::string> issues;
  const Tolerance tol = tolerance_for(sol.left, sol.right);
  auto wave_name = [](std::size_t i, const Wave& w) {
    return "wave " + std::to_string(i) + " (" + to_string(w.kind) + "): ";
  };

  if (sol.waves.empty()) {
    if (!(sol.left == sol.right)) issues.emplace_back("no waves but left and right states differ");
    return issues;
  }
  if (!(sol.waves.front().left == sol.left)) issues.emplace_back("first wave does not start at the left state");
  if (!(sol.waves.back().right == sol.right)) issues.emplace_back("last wave does not end at the right state");
  for (std::size_t i = 0; i + 1 < sol.waves.size(); ++i)
    if (!(sol.waves[i].right == sol.waves[i + 1].left))
      issues.push_back("waves " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not share a state");

  for (std::size_t i = 0; i < sol.waves.size(); ++i) {
    const Wave& w = sol.waves[i];
    const Wave ref = [&] {
      try {
        return make_wave(w.kind, w.left, w.right);
      } catch (const Error&) {
        return w;
      }
    }();
    if (std::abs(ref.theta_min - w.theta_min) > tol.eps * (1 + std::abs(w.theta_min)) ||
        std::abs(ref.theta_max - w.theta_max) > tol.eps * (1 + std::abs(w.theta_max)))
      issues.push_back(wave_name(i, w) + "recorded speed does not match its end states");
    if (auto why = check_wave(w, mu, tol)) issues.push_back(wave_name(i, w) + *why);
  }
  for (std::size_t i = 0; i + 1 < sol.waves.size(); ++i)
    if (auto why = check_order(sol.waves[i], sol.waves[i + 1], tol, !sol.on_boundary))
      issues.push_back("waves " + std::to_string(i) + " and " + std::to_string(i + 1) + ": " + *why);
  return issues;
}

State RegionMap::cell_center(int i, int j) const {
  return {box.u1_min + (i + 0.5) * (box.u1_max - box.u1_min) / resolution,
          box.u2_min + (j + 0.5) * (box.u2_max - box.u2_min) / resolution};
}

RegionMap region_map(const State& uR, const Viscosity& mu, const Box& box, int resolution) {
  if (resolution < 1 || !(box.u1_max > box.u1_min) || !(box.u2_max > box.u2_min))
    throw Error(ErrorCode::InvalidArgument, "region_map: empty box or resolution");
  RegionMap map{box, resolution, {}};
  map.labels.reserve(static_cast<std::size_t>(resolution) * resolution);
  for (int j = 0; j < resolution; ++j)
    for (int i = 0; i < resolution; ++i) map.labels.push_back(classify_region(map.cell_center(i, j), uR, mu));
  return map;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json state_json(const State& u) { return json::array({u.u1, u.u2}); }

State state_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorCode::InvalidArgument, "expected a state [u1, u2]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string to_json(const RiemannSolution& sol, int indent) {
  json waves = json::array();
  for (const auto& w : sol.waves) {
    json jw{{"kind", to_string(w.kind)}, {"left", state_json(w.left)}, {"right", state_json(w.right)}};
    if (is_fan(w.kind))
      jw["fan"] = json::array({w.theta_min, w.theta_max});
    else
      jw["speed"] = w.speed();
    waves.push_back(std::move(jw));
  }
  json doc{{"left", state_json(sol.left)},
           {"right", state_json(sol.right)},
           {"region", to_string(sol.region)},
           {"pattern", pattern_of(sol.region)},
           {"on_boundary", sol.on_boundary},
           {"waves", std::move(waves)}};
  return doc.dump(indent);
}

RiemannSolution solution_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    RiemannSolution sol;
    sol.left = state_from(doc.at("left"));
    sol.right = state_from(doc.at("right"));
    const auto region = region_from_string(doc.at("region").get<std::string>());
    if (!region) throw Error(ErrorCode::InvalidArgument, "unknown region label");
    sol.region = *region;
    sol.on_boundary = doc.value("on_boundary", false);
    for (const auto& jw : doc.at("waves")) {
      const auto kind = wave_kind_from_string(jw.at("kind").get<std::string>());
      if (!kind) throw Error(ErrorCode::InvalidArgument, "unknown wave kind");
      Wave w{*kind, state_from(jw.at("left")), state_from(jw.at("right")), 0.0, 0.0};
      if (is_fan(*kind)) {
        w.theta_min = jw.at("fan").at(0).get<double>();
        w.theta_max = jw.at("fan").at(1).get<double>();
      } else {
        w.theta_min = w.theta_max = jw.at("speed").get<double>();
      }
      sol.waves.push_back(w);
    }
    return sol;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed solution document: ") + e.what());
  }
}

}  // namespace qwave
