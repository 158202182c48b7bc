#ifndef QWAVE_STRUCTURE_HPP
#define QWAVE_STRUCTURE_HPP

// Phase-plane layer: numerical integration of the traveling-wave ODE
//
//   u' = -M^{-1} dZ/du = M^{-1} (f(u) - W u - D),
//
// separatrix shooting and heteroclinic search. Everything here is numerical and
// independent of the closed-form thresholds in model.hpp, which it is used to
// check.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qwave/model.hpp"

namespace qwave {

struct OdeParams {
  State u_plus;
  double W;
  Viscosity mu;
  Coefficients D;

  OdeParams(const State& up, double speed, const Viscosity& visc)
      : u_plus(up), W(speed), mu(visc), D(coefficients_D(up, speed)) {}
};

/// Right-hand side of the profile ODE.
State ode_rhs(const State& u, const OdeParams& p);

struct ShootingNumerics {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  /// Initial offset from the equilibrium, times the equilibrium separation scale.
  double offset_factor = 1e-6;
  /// Radius of the ball around an equilibrium that counts as convergence.
  double convergence_radius = 1e-5;
  std::size_t max_steps = 1'000'000;
  /// Independent variable cap, a safety net next to max_steps.
  double max_xi = 1e9;
};

enum class Terminal { ConvergedTo, Escaped, StepLimit };
const char* to_string(Terminal t);

struct TrajectorySample {
  double xi;
  State u;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;  // xi strictly increasing
  Terminal terminal = Terminal::StepLimit;
  /// Equilibrium reached (forward shots) or left (reversed shots) when
  /// terminal == ConvergedTo.
  std::optional<State> limit;
};

/// Integrates the separatrix of a saddle leaving along `direction`. The
/// direction must match an eigenvector of the linearisation: unstable vectors
/// are shot forward, stable ones in reversed time (samples are then returned in
/// increasing xi, ending at the saddle). Throws NotASaddle.
Trajectory shoot_separatrix(const EquilibriumInfo& eq, const State& direction, const OdeParams& p,
                            const ShootingNumerics& numerics = {});

/// Traveling-wave profile: u(xi) from u_minus (xi -> -inf) to u_plus.
struct Profile {
  Trajectory trajectory;
  State u_minus;
  State u_plus;
  double W;
  Viscosity mu;

  /// Cubic Hermite interpolation in xi, constant outside the sampled range.
  State at(double xi) const;
  double xi_min() const { return trajectory.samples.front().xi; }
  double xi_max() const { return trajectory.samples.back().xi; }
  /// xi at which the profile is closest to the midpoint of its end states.
  double center() const;
};

enum class ConnectionType { SaddleToNode, NodeToSaddle, SaddleToSaddle, NodeToNode };
const char* to_string(ConnectionType t);

struct HeteroclinicSearch {
  std::optional<Profile> profile;
  ConnectionType type;
  int arcs_tried = 0;
  int arcs_found = 0;
  /// Node-to-node connections come in a one-parameter family.
  bool family = false;
  std::string reason;

  bool found() const { return profile.has_value(); }
};

/// Searches for a heteroclinic orbit u_minus -> u_plus of the profile ODE.
/// Throws NotEquilibrium or DegenerateEquilibrium.
HeteroclinicSearch find_heteroclinic(const State& u_minus, const State& u_plus, double W, const Viscosity& mu,
                                     const ShootingNumerics& numerics = {});

struct ConnectionMeasurement {
  double W_star;
  /// Largest distance of the connecting orbit from the segment [u+, ux].
  double max_line_deviation;
  int shots;
};

/// Locates the speed of the ux -> u+ saddle connection by bisection on the
/// separatrix splitting, scanning the whole range where both are saddles.
/// Throws NoUndercompressive, DegenerateAxis, or NotFound.
ConnectionMeasurement verify_connection(const State& u_plus, const Viscosity& mu,
                                        const ShootingNumerics& numerics = {});

/// Signed splitting between the unstable separatrix of ux aimed at u+ and the
/// stable separatrix of u+ aimed at ux, measured where each first crosses the
/// perpendicular bisector of [ux, u+]. Zero at a saddle connection; NaN when
/// either separatrix misses the bisector.
double separatrix_splitting(const State& u_plus, double W, const Viscosity& mu,
                            const ShootingNumerics& numerics = {});

/// Shot along the centre direction of the saddle-node B toward u+ at the
/// Jouguet speed 2 (u1+ + |u2+|). Returns the arc that reaches u+, if any.
std::optional<Trajectory> jouguet_connection(const State& u_plus, const Viscosity& mu,
                                             const ShootingNumerics& numerics = {});

/// Profile as CSV rows "xi,u1,u2,Z".
void write_profile_csv(std::ostream& os, const Profile& profile);

}  // namespace qwave

#endif  // QWAVE_STRUCTURE_HPP
