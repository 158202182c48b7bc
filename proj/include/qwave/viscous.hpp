#ifndef QWAVE_VISCOUS_HPP
#define QWAVE_VISCOUS_HPP

// Finite-difference solver for u_t + f(u)_x = M u_xx on a bounded interval
// with fixed far-field (Dirichlet) values. Central conservative fluxes, explicit
// Heun (RK2) time stepping. An optional frame speed solves the equation in
// coordinates moving with a traveling wave, where the flux is f(u) - W u.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qwave/riemann.hpp"
#include "qwave/structure.hpp"

namespace qwave {

struct Grid1D {
  double x_min;
  double x_max;
  int n;

  /// Throws InvalidArgument unless n >= 16 and x_max > x_min.
  Grid1D(double lo, double hi, int cells);

  double dx() const { return (x_max - x_min) / n; }
  /// Cell centre.
  double x(int i) const { return x_min + (i + 0.5) * dx(); }
};

struct Field {
  Grid1D grid;
  std::vector<State> values;
  double time = 0.0;

  static Field from_function(const Grid1D& grid, const std::function<State(double)>& u0, double time = 0.0);
  /// Sum of values times dx.
  State integral() const;
};

struct SchemeSettings {
  double safety = 0.4;
  /// Constant velocity of the computational frame.
  double frame_speed = 0.0;
  /// Replay this step sequence instead of choosing dt adaptively.
  std::vector<double> dt_sequence;
  double blowup_bound = 1e6;
};

struct EvolveReport {
  std::vector<double> dt_history;
  /// Time integral of the flux through both ends, so that
  /// integral(t_end) - integral(t0) == -(boundary_flux).
  State boundary_flux;
  /// Largest per-step |d(sum u dx) + dt * boundary flux| seen.
  double max_conservation_defect = 0.0;
  /// Largest cell Peclet number |c - frame| dx / mu; above 2 central
  /// differencing is no longer dominated by the physical viscosity.
  double max_peclet = 0.0;
  /// The solution differs from its far-field value inside the outer 20% of the
  /// domain at t_end: waves may have interacted with the boundaries.
  bool boundary_contact = false;
  std::vector<std::string> warnings;
};

/// Throws BlowUp if a value leaves the bound or becomes non-finite.
Field evolve(const Field& f0, const Viscosity& mu, double t_end, const SchemeSettings& settings = {},
             EvolveReport* report = nullptr);

/// Step between uL and uR at x = 0, smoothed by tanh(x / width) (sharp for width 0).
Field riemann_ic(const State& uL, const State& uR, const Grid1D& grid, double width);

/// Largest cell width for which central differencing stays viscosity dominated
/// for data spanning the given speeds: min(sqrt(mu)/4, 2 mu_min / max|c|).
double resolved_dx(const Viscosity& mu, double max_abs_speed);

/// Sum over cells of |a - b| dx (Euclidean norm per cell).
double l1_distance(const Field& a, const std::function<State(double)>& b);
double linf_distance(const Field& a, const std::function<State(double)>& b);

struct RiemannComparison {
  double l1_error;
  Field numeric;
  RiemannSolution exact;
  EvolveReport report;
};

/// Evolves a sharp Riemann step to time t and measures the L1 distance to the
/// exact self-similar solution on the same grid. With a frame speed W the grid
/// coordinate y corresponds to x = y + W t.
RiemannComparison compare_to_riemann(const State& uL, const State& uR, const Viscosity& mu, double t,
                                     const Grid1D& grid, const SchemeSettings& settings = {});

struct RiemannSetup {
  Grid1D grid;
  double frame_speed;
};

/// Grid and frame suited to compare_to_riemann: the frame moves with the mean
/// of the extreme wave speeds, the waves plus a margin stay within the middle
/// 60% of the domain, and the spacing is resolved_dx for the relative speeds.
RiemannSetup riemann_setup(const RiemannSolution& sol, const Viscosity& mu, double t);

/// At mu1 == mu2 the Riemann invariants obey two uncoupled viscous Burgers-type
/// equations. Evolves the coupled system and the two scalar equations with the
/// same operators and steps; returns the max-norm difference after mapping back.
double decoupling_check(const Field& f0, double mu, double t);

struct StabilityRecord {
  std::vector<double> times;
  std::vector<double> distances;
  /// Optimal shift(s); two per sample when the invariants are fitted independently.
  std::vector<std::vector<double>> shifts;
};

struct StabilityOptions {
  double t_end = 50.0;
  int samples = 25;
  /// Fit a separate shift to each Riemann invariant (only meaningful at mu1 == mu2,
  /// where each invariant is a scalar viscous shock on its own).
  bool per_invariant_shift = false;
  SchemeSettings scheme;
};

/// Places the profile centre at x = 0, adds the perturbation and evolves in the
/// frame of the wave. At each sample time records the L-infinity distance to the
/// nearest translate of the profile (golden-section search over shifts in a
/// quarter of the domain).
StabilityRecord stability_experiment(const Profile& profile, const Field& perturbation, const Viscosity& mu,
                                     const StabilityOptions& options = {});

/// Smallest L-infinity distance between the field and profile(x - s) over
/// |s| <= max_shift; returns {distance, shift}.
std::pair<double, double> shift_minimized_distance(const Field& f, const std::function<State(double)>& profile,
                                                   double max_shift);

/// CSV rows "x,u1,u2".
void write_field_csv(std::ostream& os, const Field& f);
/// JSON run sidecar: grid, viscosity, scheme, run-length encoded dt history.
std::string run_metadata_json(const Field& f, const Viscosity& mu, const SchemeSettings& s, const EvolveReport& r);

}  // namespace qwave

#endif  // QWAVE_VISCOUS_HPP
