#include "qwave/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qwave {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotOnLocus: return "NotOnLocus";
    case ErrorCode::NoUndercompressive: return "NoUndercompressive";
    case ErrorCode::DegenerateAxis: return "DegenerateAxis";
    case ErrorCode::NoConnection: return "NoConnection";
    case ErrorCode::NotAShock: return "NotAShock";
    case ErrorCode::NotASaddle: return "NotASaddle";
    case ErrorCode::NotEquilibrium: return "NotEquilibrium";
    case ErrorCode::DegenerateEquilibrium: return "DegenerateEquilibrium";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::BlowUp: return "BlowUp";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool on_axis(const State& u) { return std::abs(u.u2) <= tol::degenerate; }

}  // namespace

State flux(const State& u) { return {u.u1 * u.u1 + u.u2 * u.u2, 2.0 * u.u1 * u.u2}; }

double potential_Q(const State& u) { return u.u1 * u.u1 * u.u1 / 3.0 + u.u1 * u.u2 * u.u2; }

CharacteristicSpeeds characteristic_speeds(const State& u) {
  const double a = std::abs(u.u2);
  const State plus{kInvSqrt2, kInvSqrt2};
  const State minus{kInvSqrt2, -kInvSqrt2};
  CharacteristicSpeeds s{2.0 * u.u1 - 2.0 * a, 2.0 * u.u1 + 2.0 * a, minus, plus, on_axis(u)};
  if (u.u2 < 0.0) std::swap(s.beta1, s.beta2);
  return s;
}

// ---------------------------------------------------------------------------

const char* to_string(BranchId id) {
  switch (id) {
    case BranchId::Horizontal: return "horizontal";
    case BranchId::Diagonal: return "diagonal";
    case BranchId::Antidiagonal: return "antidiagonal";
  }
  return "?";
}

State HugoniotBranch::at(double u1) const {
  return point + direction * ((u1 - point.u1) / direction.u1);
}

std::array<HugoniotBranch, 3> hugoniot_branches(const State& u_plus) {
  const double a1 = u_plus.u1;
  const double a2 = u_plus.u2;
  return {{
      {BranchId::Horizontal, {a1, -a2}, {1.0, 0.0}, 1.0, a1},
      {BranchId::Diagonal, u_plus, {kInvSqrt2, kInvSqrt2}, 2.0, 2.0 * a2},
      {BranchId::Antidiagonal, u_plus, {kInvSqrt2, -kInvSqrt2}, 2.0, -2.0 * a2},
  }};
}

double locus_product(const State& u, const State& up) {
  return (u.u2 + up.u2) * (u.u2 - u.u1 + up.u1 - up.u2) * (u.u2 + u.u1 - up.u1 - up.u2);
}

double rh_residual(const ShockCandidate& c) {
  const State jump = c.u_plus - c.u_minus;
  const State fjump = flux(c.u_plus) - flux(c.u_minus);
  return norm(jump * c.W - fjump);
}

double shock_speed(const State& u_minus, const State& u_plus) {
  const State jump = u_plus - u_minus;
  const double jj = dot(jump, jump);
  if (jj == 0.0) throw Error(ErrorCode::InvalidArgument, "shock_speed: identical states");
  const State fjump = flux(u_plus) - flux(u_minus);
  const double W = dot(jump, fjump) / jj;
  const double res = rh_residual({u_minus, u_plus, W});
  if (res > tol::locus) {
    std::ostringstream msg;
    msg << "states " << u_minus << " and " << u_plus << " are not on a common Hugoniot locus (residual "
        << res << ")";
    throw Error(ErrorCode::NotOnLocus, msg.str());
  }
  return W;
}

// ---------------------------------------------------------------------------

Coefficients coefficients_D(const State& up, double W) {
  return {up.u1 * up.u1 + up.u2 * up.u2 - W * up.u1, 2.0 * up.u1 * up.u2 - W * up.u2};
}

double energy_Z(const State& u, const State& u_plus, double W) {
  const auto [D1, D2] = coefficients_D(u_plus, W);
  return -potential_Q(u) + 0.5 * W * dot(u, u) + D1 * u.u1 + D2 * u.u2;
}

State energy_gradient(const State& u, const State& u_plus, double W) {
  const auto [D1, D2] = coefficients_D(u_plus, W);
  const State f = flux(u);
  return {-f.u1 + W * u.u1 + D1, -f.u2 + W * u.u2 + D2};
}

const char* to_string(ZType t) {
  switch (t) {
    case ZType::Minimum: return "minimum";
    case ZType::Maximum: return "maximum";
    case ZType::Saddle: return "saddle";
    case ZType::Degenerate: return "degenerate";
  }
  return "?";
}

std::array<EigenPair, 2> eigen2x2(double a, double b, double c, double d) {
  const double half_tr = 0.5 * (a + d);
  const double det = a * d - b * c;
  const double disc = std::max(0.0, half_tr * half_tr - det);
  const double r = std::sqrt(disc);
  std::array<double, 2> values{half_tr - r, half_tr + r};
  std::array<EigenPair, 2> out{};
  for (int k = 0; k < 2; ++k) {
    const double l = values[k];
    // Two candidate null vectors of (A - l I); keep the better conditioned one.
    State v1{b, l - a};
    State v2{l - d, c};
    State v = norm(v1) >= norm(v2) ? v1 : v2;
    if (norm(v) == 0.0) v = (k == 0) ? State{1.0, 0.0} : State{0.0, 1.0};
    v = v / norm(v);
    out[k] = {l, v};
  }
  return out;
}

ZType z_type_at(const State& u, double W) {
  const double h = W - 2.0 * u.u1;  // diagonal entry of d^2Z
  const double off = -2.0 * u.u2;
  const double det = h * h - off * off;
  const double scale = std::max(1.0, h * h + off * off);
  if (std::abs(det) <= tol::degenerate * scale) return ZType::Degenerate;
  if (det < 0.0) return ZType::Saddle;
  return h > 0.0 ? ZType::Minimum : ZType::Maximum;
}

std::array<EigenPair, 2> ode_linearization(const State& u, double W, const Viscosity& mu) {
  // d/du of M^{-1}(f(u) - W u - D) = M^{-1} (d^2Q - W I).
  const double diag = 2.0 * u.u1 - W;
  const double off = 2.0 * u.u2;
  return eigen2x2(diag / mu.mu1(), off / mu.mu1(), off / mu.mu2(), diag / mu.mu2());
}

const char* to_string(EquilibriumRole r) {
  switch (r) {
    case EquilibriumRole::Plus: return "u+";
    case EquilibriumRole::Cross: return "ux";
    case EquilibriumRole::A: return "ua";
    case EquilibriumRole::B: return "ub";
  }
  return "?";
}

std::array<EquilibriumInfo, 4> critical_points(const State& up, double W, const Viscosity& mu) {
  const std::array<State, 4> loc{
      up,
      State{W - up.u1, -up.u2},
      State{up.u2 + 0.5 * W, up.u1 - 0.5 * W},
      State{0.5 * W - up.u2, 0.5 * W - up.u1},
  };
  const std::array<EquilibriumRole, 4> roles{EquilibriumRole::Plus, EquilibriumRole::Cross,
                                             EquilibriumRole::A, EquilibriumRole::B};
  const double scale = 1.0 + norm(up) + std::abs(W);
  std::array<EquilibriumInfo, 4> out{};
  for (int i = 0; i < 4; ++i) {
    int mult = 0;
    for (int j = 0; j < 4; ++j)
      if (distance(loc[i], loc[j]) <= tol::degenerate * scale) ++mult;
    out[i] = {roles[i], loc[i], z_type_at(loc[i], W), ode_linearization(loc[i], W, mu), mult};
  }
  return out;
}

// ---------------------------------------------------------------------------

const char* to_string(ShockKind k) {
  switch (k) {
    case ShockKind::FastShock: return "fast";
    case ShockKind::SlowShock: return "slow";
    case ShockKind::Undercompressive: return "undercompressive";
    case ShockKind::Overcompressive: return "overcompressive";
    case ShockKind::Degenerate: return "degenerate";
    case ShockKind::NonEvolutionary: return "nonevolutionary";
  }
  return "?";
}

Classification lax_classify(const ShockCandidate& c) {
  const double res = rh_residual(c);
  if (res > tol::locus) {
    std::ostringstream msg;
    msg << "lax_classify: candidate off the Hugoniot locus (residual " << res << ")";
    throw Error(ErrorCode::NotOnLocus, msg.str());
  }
  const auto sm = characteristic_speeds(c.u_minus);
  const auto sp = characteristic_speeds(c.u_plus);
  Classification out{ShockKind::NonEvolutionary, sm.c1 - c.W, sm.c2 - c.W, sp.c1 - c.W, sp.c2 - c.W};

  const double z = tol::degenerate * (1.0 + std::abs(c.W));
  const bool zero_lambda = std::abs(out.l1_minus) <= z || std::abs(out.l2_minus) <= z ||
                           std::abs(out.l1_plus) <= z || std::abs(out.l2_plus) <= z;
  if (zero_lambda || sm.coincident || sp.coincident) {
    out.kind = ShockKind::Degenerate;
    return out;
  }
  const double l1m = out.l1_minus, l2m = out.l2_minus, l1p = out.l1_plus, l2p = out.l2_plus;
  if (l2p < 0.0 && l1m < 0.0 && 0.0 < l2m)
    out.kind = ShockKind::FastShock;
  else if (l1p < 0.0 && 0.0 < l2p && 0.0 < l1m)
    out.kind = ShockKind::SlowShock;
  else if (l1p < 0.0 && 0.0 < l2p && l1m < 0.0 && 0.0 < l2m)
    out.kind = ShockKind::Undercompressive;
  else if (l2p < 0.0 && 0.0 < l1m)
    out.kind = ShockKind::Overcompressive;
  return out;
}

std::optional<ShockKind> hessian_kind(const ShockCandidate& c) {
  auto det = [&](const State& u) {
    const double h = -u.u1 + 0.5 * c.W;
    return h * h - u.u2 * u.u2;
  };
  const double dm = det(c.u_minus);
  const double dp = det(c.u_plus);
  if (!(dm * dp < 0.0)) return std::nullopt;
  // d^2Z(u) = 2 [[W/2 - u1, -u2], [-u2, W/2 - u1]]
  const bool plus_positive = dp > 0.0 && 0.5 * c.W - c.u_plus.u1 > 0.0;
  const bool minus_negative = dm > 0.0 && 0.5 * c.W - c.u_minus.u1 < 0.0;
  if (plus_positive) return ShockKind::FastShock;
  if (minus_negative) return ShockKind::SlowShock;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

double undercompressive_speed(const State& up, const Viscosity& mu) {
  const auto m = mu.m();
  if (!m) throw Error(ErrorCode::NoUndercompressive, "undercompressive shocks require mu2 < mu1");
  if (on_axis(up)) throw Error(ErrorCode::DegenerateAxis, "undercompressive speed undefined for u2+ = 0");
  return 2.0 * (up.u1 + *m * std::abs(up.u2));
}

double undercompressive_energy_gap(const State& up, const Viscosity& mu) {
  const auto m = mu.m();
  if (!m) throw Error(ErrorCode::NoUndercompressive, "undercompressive shocks require mu2 < mu1");
  const double a = std::abs(up.u2);
  return 4.0 * *m * a * a * a * (1.0 + *m * *m / 3.0);
}

std::array<double, 2> ab_connection_speeds(const State& up, const Viscosity& mu) {
  const auto m = mu.m();
  if (!m) throw Error(ErrorCode::NoConnection, "ua-ub saddle connections require mu2 < mu1");
  const double a = std::abs(up.u2) / *m;
  return {2.0 * (up.u1 + a), 2.0 * (up.u1 - a)};
}

// ---------------------------------------------------------------------------

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Boundary: return "boundary";
  }
  return "?";
}

StructureVerdict structure_exists(const ShockCandidate& c, const Viscosity& mu) {
  const auto cls = lax_classify(c);
  if (cls.kind != ShockKind::FastShock && cls.kind != ShockKind::SlowShock)
    throw Error(ErrorCode::NotAShock,
                std::string("structure_exists: candidate is ") + to_string(cls.kind) + ", not a Lax shock");

  const bool flip = c.u_plus.u2 < 0.0;
  const State up = flip ? c.u_plus.mirrored() : c.u_plus;
  const State um = flip ? c.u_minus.mirrored() : c.u_minus;
  const State d = um - up;
  const double t = d.u1;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const auto m = mu.m();

  if (std::abs(d.u1 - d.u2) <= tol::locus * (1.0 + std::abs(t)))
    return {Verdict::Yes, ShockFamily::FastB, t, nan, "fast shock of the ub family always has a profile"};

  auto threshold_verdict = [&](double th, bool yes_below, ShockFamily fam, const char* name) {
    StructureVerdict v{Verdict::Yes, fam, t, th, {}};
    std::ostringstream why;
    if (std::abs(t - th) <= tol::boundary_band) {
      v.verdict = Verdict::Boundary;
      why << "t = " << t << " within band of point " << name << " (t = " << th << ")";
    } else if ((t < th) == yes_below) {
      why << "t = " << t << (yes_below ? " below " : " beyond ") << "point " << name << " (t = " << th << ")";
    } else {
      v.verdict = Verdict::No;
      why << "t = " << t << (yes_below ? " beyond " : " below ") << "point " << name << " (t = " << th
          << "): the separatrix escapes";
    }
    v.reason = why.str();
    return v;
  };

  if (cls.kind == ShockKind::SlowShock) {
    if (!m) return {Verdict::Yes, ShockFamily::Slow, t, nan, "mu1 <= mu2: every slow shock has a profile"};
    return threshold_verdict((1.0 + *m) * up.u2, true, ShockFamily::Slow, "D");
  }
  if (!m) return {Verdict::Yes, ShockFamily::FastA, t, nan, "mu1 <= mu2: every fast shock has a profile"};
  return threshold_verdict((1.0 + 1.0 / *m) * up.u2, false, ShockFamily::FastA, "E");
}

bool overcompressive_structure_exists(const ShockCandidate& c, const Viscosity& mu) {
  const auto cls = lax_classify(c);
  if (cls.kind != ShockKind::Overcompressive)
    throw Error(ErrorCode::NotAShock, "overcompressive_structure_exists: candidate is not overcompressive");
  const auto m = mu.m();
  if (!m) return true;
  return 0.5 * c.W > c.u_plus.u1 + std::abs(c.u_plus.u2) / *m;
}

KeyPoints key_points(const State& u_plus, const Viscosity& mu) {
  const bool flip = u_plus.u2 < 0.0;
  const State a = flip ? u_plus.mirrored() : u_plus;
  const double a2 = a.u2;
  const State down{1.0, -1.0};
  KeyPoints k{a, a + down * (2.0 * a2), a + State{-1.0, -1.0} * (2.0 * a2), {a.u1 - a2, 0.0}, {}, {}, {}, {}};
  if (const auto m = mu.m()) {
    k.D = a + down * ((1.0 + *m) * a2);
    k.E = a + down * ((1.0 + 1.0 / *m) * a2);
    k.F = State{a.u1 + 2.0 * a2 / *m, -a2};
    k.G = State{a.u1 + 2.0 * *m * a2, -a2};
  }
  if (flip) {
    k.A = k.A.mirrored();
    k.B = k.B.mirrored();
    k.C = k.C.mirrored();
    k.H = k.H.mirrored();
    for (auto* p : {&k.D, &k.E, &k.F, &k.G})
      if (*p) *p = p->value().mirrored();
  }
  return k;
}

}  // namespace qwave
