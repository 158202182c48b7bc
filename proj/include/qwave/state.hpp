#ifndef QWAVE_STATE_HPP
#define QWAVE_STATE_HPP

#include <cmath>
#include <optional>
#include <ostream>

#include "qwave/errors.hpp"

namespace qwave {

/// A point (u1, u2) of the state plane.
struct State {
  double u1{0.0};
  double u2{0.0};

  constexpr State() = default;
  constexpr State(double a, double b) : u1(a), u2(b) {}

  constexpr State operator+(const State& o) const { return {u1 + o.u1, u2 + o.u2}; }
  constexpr State operator-(const State& o) const { return {u1 - o.u1, u2 - o.u2}; }
  constexpr State operator-() const { return {-u1, -u2}; }
  constexpr State operator*(double s) const { return {u1 * s, u2 * s}; }
  constexpr State operator/(double s) const { return {u1 / s, u2 / s}; }
  State& operator+=(const State& o) { u1 += o.u1; u2 += o.u2; return *this; }
  State& operator-=(const State& o) { u1 -= o.u1; u2 -= o.u2; return *this; }
  constexpr bool operator==(const State&) const = default;

  /// Reflection u2 -> -u2; the system is symmetric under it.
  constexpr State mirrored() const { return {u1, -u2}; }

  bool finite() const { return std::isfinite(u1) && std::isfinite(u2); }
};

constexpr State operator*(double s, const State& u) { return u * s; }
constexpr double dot(const State& a, const State& b) { return a.u1 * b.u1 + a.u2 * b.u2; }
/// z-component of the planar cross product.
constexpr double cross(const State& a, const State& b) { return a.u1 * b.u2 - a.u2 * b.u1; }
inline double norm(const State& a) { return std::hypot(a.u1, a.u2); }
inline double distance(const State& a, const State& b) { return norm(a - b); }

/// Riemann invariants (u1 + u2, u1 - u2); each obeys its own Hopf equation.
constexpr State to_invariants(const State& u) { return {u.u1 + u.u2, u.u1 - u.u2}; }
constexpr State from_invariants(const State& w) {
  return {0.5 * (w.u1 + w.u2), 0.5 * (w.u1 - w.u2)};
}

inline std::ostream& operator<<(std::ostream& os, const State& u) {
  return os << '(' << u.u1 << ", " << u.u2 << ')';
}

/// Diagonal viscosity matrix diag(mu1, mu2).
class Viscosity {
 public:
  Viscosity(double mu1, double mu2) : mu1_(mu1), mu2_(mu2) {
    if (!(std::isfinite(mu1) && std::isfinite(mu2)) || mu1 <= 0.0 || mu2 <= 0.0)
      throw Error(ErrorCode::InvalidArgument, "viscosity components must be finite and positive");
  }

  double mu1() const { return mu1_; }
  double mu2() const { return mu2_; }

  /// True when undercompressive saddle connections are possible (mu2 < mu1).
  bool anisotropic_fast() const { return mu2_ < mu1_; }

  /// m = sqrt(mu2 / (2 mu1 - mu2)), defined only for mu2 < mu1; then 0 < m < 1.
  std::optional<double> m() const {
    if (!(mu2_ < mu1_)) return std::nullopt;
    return std::sqrt(mu2_ / (2.0 * mu1_ - mu2_));
  }

  Viscosity scaled(double s) const { return {s * mu1_, s * mu2_}; }
  double max() const { return mu1_ > mu2_ ? mu1_ : mu2_; }
  double min() const { return mu1_ < mu2_ ? mu1_ : mu2_; }

  /// Viscosity with ratio chosen so that m() == m (mu1 fixed).
  static Viscosity from_m(double m, double mu1 = 1.0) {
    if (!(m > 0.0 && m < 1.0)) throw Error(ErrorCode::InvalidArgument, "m must lie in (0, 1)");
    return {mu1, 2.0 * m * m * mu1 / (1.0 + m * m)};
  }

 private:
  double mu1_;
  double mu2_;
};

}  // namespace qwave

#endif  // QWAVE_STATE_HPP
