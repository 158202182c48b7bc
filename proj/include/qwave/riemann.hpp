#ifndef QWAVE_RIEMANN_HPP
#define QWAVE_RIEMANN_HPP

// Exact Riemann solver. Candidate wave patterns are assembled along the known
// straight wave families, their free parameters are fixed by a 2x2 linear
// solve, and each candidate is kept only if every wave is admissible and the
// speeds are ordered. A closed-form region classifier is kept separately as
// an independent cross-check.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qwave/model.hpp"

namespace qwave {

enum class WaveKind {
  FastShock,
  SlowShock,
  Undercompressive,
  Jouguet,
  FastRarefaction,
  SlowRarefaction,
  SpecialRarefaction,
};
const char* to_string(WaveKind k);
std::optional<WaveKind> wave_kind_from_string(const std::string& s);

inline bool is_fan(WaveKind k) {
  return k == WaveKind::FastRarefaction || k == WaveKind::SlowRarefaction || k == WaveKind::SpecialRarefaction;
}

struct Wave {
  WaveKind kind;
  State left;
  State right;
  // For shocks both equal the shock speed; for fans the range of theta.
  double theta_min;
  double theta_max;

  double speed() const { return theta_min; }
  /// State inside a fan at self-similar coordinate theta (clamped to the fan).
  State fan_state(double theta) const;
};

/// Shock or fan between two states with its speed(s) filled in.
Wave make_wave(WaveKind kind, const State& left, const State& right);

enum class Region { R1, R2, R3, R4, R5, R6, R7, R8, R1p, R2p, R3p, R4p, Degenerate };
const char* to_string(Region r);
std::optional<Region> region_from_string(const std::string& s);

/// Wave pattern of a region, slow wave first, e.g. "S1 S2" for R1.
const char* pattern_of(Region r);

struct RiemannSolution {
  State left;
  State right;
  std::vector<Wave> waves;  // left to right
  Region region = Region::Degenerate;
  /// More than one distinct pattern was admissible within tolerance.
  bool on_boundary = false;
};

/// Throws NoSolution if no candidate pattern is admissible.
RiemannSolution solve_riemann(const State& uL, const State& uR, const Viscosity& mu);

/// Every distinct admissible candidate, in canonical pattern order.
std::vector<RiemannSolution> admissible_solutions(const State& uL, const State& uR, const Viscosity& mu);

/// Region of uL from the closed-form parameter inequalities alone; nullopt
/// if no inequality set holds, even with boundary tolerance.
std::optional<Region> classify_region_closed_form(const State& uL, const State& uR, const Viscosity& mu);

/// Closed-form region, falling back on the solver's label when the inequalities
/// leave uL unassigned (only possible on a boundary). Degenerate when u2 of uR is 0.
Region classify_region(const State& uL, const State& uR, const Viscosity& mu);

/// Self-similar solution at theta = x / t. At a shock speed the right limit is returned.
State sample_solution(const RiemannSolution& sol, double theta);

/// Invariant violations of a solution; empty for valid solutions.
std::vector<std::string> validate_solution(const RiemannSolution& sol, const Viscosity& mu);

struct Box {
  double u1_min;
  double u1_max;
  double u2_min;
  double u2_max;
};

struct RegionMap {
  Box box;
  int resolution;
  /// Row-major, row j = u2 index (bottom to top), column i = u1 index;
  /// cell centres at min + (i + 1/2) * width / resolution.
  std::vector<Region> labels;

  State cell_center(int i, int j) const;
  Region at(int i, int j) const { return labels[static_cast<std::size_t>(j) * resolution + i]; }
};

RegionMap region_map(const State& uR, const Viscosity& mu, const Box& box, int resolution);

/// JSON document for a solution (schema documented in README).
std::string to_json(const RiemannSolution& sol, int indent = 2);
/// Inverse of to_json. Throws InvalidArgument on malformed input.
RiemannSolution solution_from_json(const std::string& text);

}  // namespace qwave

#endif  // QWAVE_RIEMANN_HPP
