#ifndef QWAVE_MODEL_HPP
#define QWAVE_MODEL_HPP

// Closed-form layer for the system
//   u_t + (dQ/du)_x = M u_xx,   Q = u1^3/3 + u1 u2^2,   M = diag(mu1, mu2).
//
// Conventions: u_plus is the state ahead of a discontinuity (right), u_minus the
// state behind it (left), W its speed. States with u2 < 0 are handled by
// reflecting u2 -> -u2, solving, and reflecting back.

#include <array>
#include <optional>
#include <string>

#include "qwave/state.hpp"

namespace qwave {

namespace tol {
/// Rankine-Hugoniot residual accepted as "on the locus".
inline constexpr double locus = 1e-8;
/// Zero test for eigenvalues, determinants and the u2 = 0 axis.
inline constexpr double degenerate = 1e-9;
/// Half-width of the Boundary verdict around the thresholds D and E (in t).
inline constexpr double boundary_band = 1e-6;
}  // namespace tol

/// dQ/du = (u1^2 + u2^2, 2 u1 u2).
State flux(const State& u);

struct CharacteristicSpeeds {
  double c1;        // slow, c1 <= c2
  double c2;        // fast
  State beta1;      // unit eigenvector of c1
  State beta2;      // unit eigenvector of c2
  bool coincident;  // u2 == 0: hyperbolicity is not strict
};

CharacteristicSpeeds characteristic_speeds(const State& u);

// ---------------------------------------------------------------------------
// Hugoniot locus

enum class BranchId { Horizontal, Diagonal, Antidiagonal };
const char* to_string(BranchId id);

/// One straight component of the Hugoniot locus of u_plus, with the affine
/// speed map W(u1) = speed_slope * u1 + speed_offset.
struct HugoniotBranch {
  BranchId id;
  State point;
  State direction;
  double speed_slope;
  double speed_offset;

  /// Point of the line with first component u1.
  State at(double u1) const;
  double speed_at(double u1) const { return speed_slope * u1 + speed_offset; }
};

std::array<HugoniotBranch, 3> hugoniot_branches(const State& u_plus);

/// (u2 + u2+)(u2 - u1 + u1+ - u2+)(u2 + u1 - u1+ - u2+), zero exactly on the locus.
double locus_product(const State& u, const State& u_plus);

struct ShockCandidate {
  State u_minus;
  State u_plus;
  double W;
};

/// |W (u+ - u-) - (f(u+) - f(u-))|.
double rh_residual(const ShockCandidate& c);

/// Least-squares speed of the overdetermined jump conditions. Throws
/// NotOnLocus when the residual at the minimiser exceeds tol::locus and
/// InvalidArgument when u_minus == u_plus.
double shock_speed(const State& u_minus, const State& u_plus);

// ---------------------------------------------------------------------------
// Energy function of the traveling-wave ODE

struct Coefficients {
  double D1;
  double D2;
};

/// Integration constants making u_plus a critical point of Z.
Coefficients coefficients_D(const State& u_plus, double W);

/// Z(u) = -Q(u) + W |u|^2 / 2 + D1 u1 + D2 u2.
double energy_Z(const State& u, const State& u_plus, double W);
State energy_gradient(const State& u, const State& u_plus, double W);

/// Q(u) = u1^3/3 + u1 u2^2.
double potential_Q(const State& u);

enum class ZType { Minimum, Maximum, Saddle, Degenerate };
const char* to_string(ZType t);
/// Saddle or extremum, ignoring which extremum.
inline bool is_extremum(ZType t) { return t == ZType::Minimum || t == ZType::Maximum; }

struct EigenPair {
  double value;
  State vector;  // unit length
};

/// Real eigen-decomposition of a 2x2 matrix with real spectrum, ascending.
std::array<EigenPair, 2> eigen2x2(double a, double b, double c, double d);

enum class EquilibriumRole { Plus, Cross, A, B };
const char* to_string(EquilibriumRole r);

struct EquilibriumInfo {
  EquilibriumRole role;
  State location;
  ZType z_type;
  std::array<EigenPair, 2> ode_eigen;  // of -M^{-1} d^2Z at location
  int multiplicity;                    // how many of the four coincide here
};

/// Type of u as a critical point of Z, from the sign of det d^2Z and its trace.
ZType z_type_at(const State& u, double W);

/// Eigenpairs of the linearisation of u' = -M^{-1} dZ/du at u.
std::array<EigenPair, 2> ode_linearization(const State& u, double W, const Viscosity& mu);

/// The four equilibria u+, ux, ua, ub of the traveling-wave ODE, in that order.
std::array<EquilibriumInfo, 4> critical_points(const State& u_plus, double W,
                                               const Viscosity& mu = Viscosity{1.0, 1.0});

// ---------------------------------------------------------------------------
// Classification

enum class ShockKind { FastShock, SlowShock, Undercompressive, Overcompressive, Degenerate, NonEvolutionary };
const char* to_string(ShockKind k);

struct Classification {
  ShockKind kind;
  // lambda_j^pm = c_j^pm - W, ordered {l1-, l2-, l1+, l2+}.
  double l1_minus;
  double l2_minus;
  double l1_plus;
  double l2_plus;
};

/// Lax classification by the sign pattern of c_j^pm - W. Degenerate when a
/// lambda vanishes or an end state lies on the u2 = 0 axis. Throws NotOnLocus.
Classification lax_classify(const ShockCandidate& c);

/// Independent route: sign of the product of Hessian determinants plus the
/// definiteness rule. Returns FastShock, SlowShock, or nullopt (not a Lax shock).
std::optional<ShockKind> hessian_kind(const ShockCandidate& c);

// ---------------------------------------------------------------------------
// Undercompressive and saddle-connection speeds

/// Speed of the saddle connection ux -> u+: W = 2 (u1+ + m |u2+|).
/// Throws NoUndercompressive (mu1 <= mu2) or DegenerateAxis (u2+ == 0).
double undercompressive_speed(const State& u_plus, const Viscosity& mu);

/// Z(ux) - Z(u+) at the undercompressive speed: 4 m |u2+|^3 (1 + m^2/3).
double undercompressive_energy_gap(const State& u_plus, const Viscosity& mu);

/// Both speeds W = 2 (u1+ +- u2+/m) of a ua-ub saddle connection, larger first.
/// Throws NoConnection when mu1 <= mu2.
std::array<double, 2> ab_connection_speeds(const State& u_plus, const Viscosity& mu);

// ---------------------------------------------------------------------------
// Structure (viscous profile) existence

enum class Verdict { Yes, No, Boundary };
const char* to_string(Verdict v);

enum class ShockFamily { Slow, FastA, FastB };

struct StructureVerdict {
  Verdict verdict;
  ShockFamily family;
  double t;          // parameter along the branch of u+ (mirrored frame)
  double threshold;  // D or E parameter, NaN when no threshold applies
  std::string reason;
};

/// Analytic existence of a traveling-wave profile for a Lax shock.
/// Throws NotAShock unless lax_classify gives FastShock or SlowShock.
StructureVerdict structure_exists(const ShockCandidate& c, const Viscosity& mu);

/// Overcompressive (node-node) shock u- = ux on the horizontal branch right of B:
/// structure iff mu1 <= mu2 or W/2 > u1+ + |u2+|/m.
bool overcompressive_structure_exists(const ShockCandidate& c, const Viscosity& mu);

/// Degenerate Jouguet shock B -> u+ has a profile iff mu1 <= mu2.
inline bool jouguet_admissible(const Viscosity& mu) { return !mu.anisotropic_fast(); }

struct KeyPoints {
  State A;
  State B;
  State C;
  State H;
  std::optional<State> D;
  std::optional<State> E;
  std::optional<State> F;
  std::optional<State> G;
};

/// Distinguished points of the Hugoniot locus and region maps of u_plus.
KeyPoints key_points(const State& u_plus, const Viscosity& mu);

}  // namespace qwave

#endif  // QWAVE_MODEL_HPP
