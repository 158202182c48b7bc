#include "qwave/viscous.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "json.hpp"

namespace qwave {

Grid1D::Grid1D(double lo, double hi, int cells) : x_min(lo), x_max(hi), n(cells) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && hi > lo)) throw Error(ErrorCode::InvalidArgument, "grid needs x_max > x_min");
  if (cells < 16) throw Error(ErrorCode::InvalidArgument, "grid needs at least 16 cells");
}

Field Field::from_function(const Grid1D& grid, const std::function<State(double)>& u0, double time) {
  Field f{grid, {}, time};
  f.values.reserve(grid.n);
  for (int i = 0; i < grid.n; ++i) f.values.push_back(u0(grid.x(i)));
  return f;
}

State Field::integral() const {
  State s;
  for (const auto& v : values) s += v;
  return s * grid.dx();
}

namespace {

struct Stage {
  std::vector<State> g;     // flux in the moving frame, per cell
  std::vector<State> F;     // interface fluxes, n + 1
};

/// du_i/dt = -(F_{i+1/2} - F_{i-1/2}) / dx with ghost cells holding the
/// far-field values. Returns F_right - F_left.
State rhs(const std::vector<State>& u, const State& ghost_l, const State& ghost_r, double W, double mu1, double mu2,
          double dx, Stage& st, std::vector<State>& du) {
  const std::size_t n = u.size();
  auto g = [W](const State& v) {
    const State f = flux(v);
    return State{f.u1 - W * v.u1, f.u2 - W * v.u2};
  };
  st.g.resize(n + 2);
  st.g[0] = g(ghost_l);
  for (std::size_t i = 0; i < n; ++i) st.g[i + 1] = g(u[i]);
  st.g[n + 1] = g(ghost_r);

  const double k1 = mu1 / dx, k2 = mu2 / dx;
  st.F.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const State& a = k == 0 ? ghost_l : u[k - 1];
    const State& b = k == n ? ghost_r : u[k];
    st.F[k] = {0.5 * (st.g[k].u1 + st.g[k + 1].u1) - k1 * (b.u1 - a.u1),
               0.5 * (st.g[k].u2 + st.g[k + 1].u2) - k2 * (b.u2 - a.u2)};
  }
  du.resize(n);
  const double inv = 1.0 / dx;
  for (std::size_t i = 0; i < n; ++i) du[i] = (st.F[i + 1] - st.F[i]) * (-inv);
  return st.F[n] - st.F[0];
}

double max_relative_speed(const std::vector<State>& u, double W) {
  double s = 0.0;
  for (const auto& v : u) {
    const double a = std::abs(v.u2);
    s = std::max({s, std::abs(2.0 * v.u1 - 2.0 * a - W), std::abs(2.0 * v.u1 + 2.0 * a - W)});
  }
  return s;
}

bool in_bounds(const std::vector<State>& u, double bound) {
  for (const auto& v : u)
    if (!v.finite() || std::abs(v.u1) > bound || std::abs(v.u2) > bound) return false;
  return true;
}

}  // namespace

Field evolve(const Field& f0, const Viscosity& mu, double t_end, const SchemeSettings& settings, EvolveReport* report) {
  if (!(t_end >= f0.time)) throw Error(ErrorCode::InvalidArgument, "evolve: t_end precedes the field time");
  if (!(settings.safety > 0.0)) throw Error(ErrorCode::InvalidArgument, "evolve: safety must be positive");

  EvolveReport local;
  EvolveReport& rep = report ? *report : local;
  rep = EvolveReport{};

  Field f = f0;
  const double dx = f.grid.dx();
  const double W = settings.frame_speed;
  const State ghost_l = f0.values.front();
  const State ghost_r = f0.values.back();
  const double diffusive = dx * dx / (2.0 * mu.max());

  std::vector<State>& u = f.values;
  std::vector<State> k1, k2, stage(u.size());
  Stage scratch;
  std::size_t replay = 0;
  const double t_eps = 1e-13 * std::max(1.0, std::abs(t_end));

  while (f.time < t_end - t_eps) {
    const double speed = max_relative_speed(u, W);
    rep.max_peclet = std::max(rep.max_peclet, speed * dx / mu.min());
    double dt;
    if (!settings.dt_sequence.empty()) {
      if (replay >= settings.dt_sequence.size())
        throw Error(ErrorCode::InvalidArgument, "evolve: replayed step sequence ends before t_end");
      dt = settings.dt_sequence[replay++];
    } else {
      const double advective = speed > 0.0 ? dx / (2.0 * speed) : diffusive;
      dt = settings.safety * std::min(advective, diffusive);
      dt = std::min(dt, t_end - f.time);
    }

    const double mass0_1 = [&] { double s = 0; for (const auto& v : u) s += v.u1; return s * dx; }();
    const double mass0_2 = [&] { double s = 0; for (const auto& v : u) s += v.u2; return s * dx; }();

    const State b1 = rhs(u, ghost_l, ghost_r, W, mu.mu1(), mu.mu2(), dx, scratch, k1);
    for (std::size_t i = 0; i < u.size(); ++i) stage[i] = u[i] + k1[i] * dt;
    const State b2 = rhs(stage, ghost_l, ghost_r, W, mu.mu1(), mu.mu2(), dx, scratch, k2);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += (k1[i] + k2[i]) * (0.5 * dt);
    f.time += dt;
    rep.dt_history.push_back(dt);

    const State bflux = (b1 + b2) * (0.5 * dt);
    rep.boundary_flux += bflux;
    double m1 = 0, m2 = 0;
    for (const auto& v : u) {
      m1 += v.u1;
      m2 += v.u2;
    }
    const double defect = std::max(std::abs(m1 * dx - mass0_1 + bflux.u1), std::abs(m2 * dx - mass0_2 + bflux.u2));
    rep.max_conservation_defect = std::max(rep.max_conservation_defect, defect);

    if (!in_bounds(u, settings.blowup_bound))
      throw Error(ErrorCode::BlowUp, "evolve: solution left the bound at t = " + std::to_string(f.time));
  }

  if (rep.max_peclet > 2.0)
    rep.warnings.push_back("cell Peclet number " + std::to_string(rep.max_peclet) +
                           " exceeds 2; the grid does not resolve the viscous scale");
  const int edge = std::max(1, f.grid.n / 5);
  const double scale = 1e-4 * (1.0 + distance(ghost_l, ghost_r));
  for (int i = 0; i < edge; ++i)
    if (distance(u[i], ghost_l) > scale || distance(u[f.grid.n - 1 - i], ghost_r) > scale) rep.boundary_contact = true;
  if (rep.boundary_contact) rep.warnings.emplace_back("waves reached the outer 20% of the domain");
  return f;
}

Field riemann_ic(const State& uL, const State& uR, const Grid1D& grid, double width) {
  if (!(width >= 0.0)) throw Error(ErrorCode::InvalidArgument, "riemann_ic: smoothing width must be >= 0");
  return Field::from_function(grid, [&](double x) {
    if (width == 0.0) return x < 0.0 ? uL : x > 0.0 ? uR : (uL + uR) * 0.5;
    const double s = 0.5 * (1.0 + std::tanh(x / width));
    return uL + (uR - uL) * s;
  });
}

double resolved_dx(const Viscosity& mu, double max_abs_speed) {
  double dx = std::sqrt(mu.min()) / 4.0;
  // Profiles overshoot the end states slightly, so keep the cell Peclet number under 1.8 rather than 2.
  if (max_abs_speed > 0.0) dx = std::min(dx, 1.8 * mu.min() / max_abs_speed);
  return dx;
}

double l1_distance(const Field& a, const std::function<State(double)>& b) {
  double s = 0.0;
  for (int i = 0; i < a.grid.n; ++i) s += distance(a.values[i], b(a.grid.x(i)));
  return s * a.grid.dx();
}

double linf_distance(const Field& a, const std::function<State(double)>& b) {
  double s = 0.0;
  for (int i = 0; i < a.grid.n; ++i) s = std::max(s, distance(a.values[i], b(a.grid.x(i))));
  return s;
}

RiemannComparison compare_to_riemann(const State& uL, const State& uR, const Viscosity& mu, double t,
                                     const Grid1D& grid, const SchemeSettings& settings) {
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "compare_to_riemann: t must be positive");
  RiemannComparison out{0.0, riemann_ic(uL, uR, grid, 0.0), solve_riemann(uL, uR, mu), {}};
  out.numeric = evolve(out.numeric, mu, t, settings, &out.report);
  const double W = settings.frame_speed;
  const RiemannSolution& sol = out.exact;
  out.l1_error = l1_distance(out.numeric, [&](double y) { return sample_solution(sol, (y + W * t) / t); });
  return out;
}

RiemannSetup riemann_setup(const RiemannSolution& sol, const Viscosity& mu, double t) {
  double lo = -1.0, hi = 1.0;
  double frame = 0.0;
  if (!sol.waves.empty()) {
    lo = sol.waves.front().theta_min;
    hi = sol.waves.back().theta_max;
    frame = 0.5 * (lo + hi);
  }
  double speed = 0.0;
  auto consider = [&](const State& v) {
    const double a = std::abs(v.u2);
    speed = std::max({speed, std::abs(2 * v.u1 - 2 * a - frame), std::abs(2 * v.u1 + 2 * a - frame)});
  };
  consider(sol.left);
  for (const auto& w : sol.waves) consider(w.right);
  const double half = 0.5 * (hi - lo) * t + 1.0 + 40.0 * mu.max();
  const double L = half / 0.6;
  const double dx = resolved_dx(mu, speed);
  const int n = std::max(16, static_cast<int>(std::ceil(2.0 * L / dx)));
  return {Grid1D(-L, L, n), frame};
}

double decoupling_check(const Field& f0, double mu, double t) {
  const Viscosity visc(mu, mu);
  EvolveReport rep;
  const Field coupled = evolve(f0, visc, t, {}, &rep);

  // The same central flux and Heun steps applied to each invariant w with flux w^2.
  const int n = f0.grid.n;
  const double dx = f0.grid.dx();
  const double k = mu / dx;
  auto scalar_run = [&](double sign) {
    std::vector<double> w(n), st(n), d1(n), d2(n), F(n + 1);
    for (int i = 0; i < n; ++i) w[i] = f0.values[i].u1 + sign * f0.values[i].u2;
    const double gl = w.front(), gr = w.back();
    auto rhs_scalar = [&](const std::vector<double>& v, std::vector<double>& dv) {
      for (int j = 0; j <= n; ++j) {
        const double a = j == 0 ? gl : v[j - 1];
        const double b = j == n ? gr : v[j];
        F[j] = 0.5 * (a * a + b * b) - k * (b - a);
      }
      for (int i = 0; i < n; ++i) dv[i] = (F[i + 1] - F[i]) * (-1.0 / dx);
    };
    for (double dt : rep.dt_history) {
      rhs_scalar(w, d1);
      for (int i = 0; i < n; ++i) st[i] = w[i] + d1[i] * dt;
      rhs_scalar(st, d2);
      for (int i = 0; i < n; ++i) w[i] += (d1[i] + d2[i]) * (0.5 * dt);
    }
    return w;
  };
  const auto w1 = scalar_run(1.0);
  const auto w2 = scalar_run(-1.0);
  double dev = 0.0;
  for (int i = 0; i < n; ++i) {
    const State back = from_invariants({w1[i], w2[i]});
    const State d = back - coupled.values[i];
    dev = std::max({dev, std::abs(d.u1), std::abs(d.u2)});
  }
  return dev;
}

// ---------------------------------------------------------------------------
// Stability of traveling waves

namespace {

/// Minimises a function of one variable over [lo, hi]: coarse scan, then
/// golden-section refinement around the best sample.
std::pair<double, double> minimise_1d(const std::function<double(double)>& f, double lo, double hi) {
  constexpr int kScan = 80;
  double best_x = lo, best_f = f(lo);
  const double h = (hi - lo) / kScan;
  for (int i = 1; i <= kScan; ++i) {
    const double x = lo + i * h;
    const double v = f(x);
    if (v < best_f) {
      best_f = v;
      best_x = x;
    }
  }
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = std::max(lo, best_x - h), b = std::min(hi, best_x + h);
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 60 && b - a > 1e-12 * (1.0 + std::abs(best_x)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  const double x = fc < fd ? c : d;
  const double v = std::min(fc, fd);
  return v < best_f ? std::pair{v, x} : std::pair{best_f, best_x};
}

}  // namespace

std::pair<double, double> shift_minimized_distance(const Field& f, const std::function<State(double)>& profile,
                                                   double max_shift) {
  return minimise_1d(
      [&](double s) { return linf_distance(f, [&](double x) { return profile(x - s); }); }, -max_shift, max_shift);
}

StabilityRecord stability_experiment(const Profile& profile, const Field& perturbation, const Viscosity& mu,
                                     const StabilityOptions& options) {
  if (options.samples < 1 || !(options.t_end > 0.0))
    throw Error(ErrorCode::InvalidArgument, "stability_experiment: need t_end > 0 and samples >= 1");
  const double centre = profile.center();
  const auto wave = [&](double x) { return profile.at(x + centre); };
  const Grid1D& grid = perturbation.grid;
  Field f = Field::from_function(grid, [&](double x) { return wave(x); });
  for (int i = 0; i < grid.n; ++i) f.values[i] += perturbation.values[i];

  SchemeSettings scheme = options.scheme;
  scheme.frame_speed = profile.W;
  const double max_shift = 0.25 * (grid.x_max - grid.x_min);

  StabilityRecord rec;
  auto measure = [&]() {
    rec.times.push_back(f.time);
    if (!options.per_invariant_shift) {
      const auto [d, s] = shift_minimized_distance(f, wave, max_shift);
      rec.distances.push_back(d);
      rec.shifts.push_back({s});
      return;
    }
    double worst = 0.0;
    std::vector<double> shifts;
    for (int comp = 0; comp < 2; ++comp) {
      auto inv = [comp](const State& u) { return comp == 0 ? u.u1 + u.u2 : u.u1 - u.u2; };
      const auto [d, s] = minimise_1d(
          [&](double sh) {
            double m = 0.0;
            for (int i = 0; i < grid.n; ++i)
              m = std::max(m, std::abs(inv(f.values[i]) - inv(wave(grid.x(i) - sh))));
            return m;
          },
          -max_shift, max_shift);
      worst = std::max(worst, d);
      shifts.push_back(s);
    }
    rec.distances.push_back(worst);
    rec.shifts.push_back(shifts);
  };

  measure();
  for (int k = 1; k <= options.samples; ++k) {
    f = evolve(f, mu, options.t_end * k / options.samples, scheme);
    measure();
  }
  return rec;
}

// ---------------------------------------------------------------------------
// Output

void write_field_csv(std::ostream& os, const Field& f) {
  const auto old = os.precision(17);
  os << "x,u1,u2\n";
  for (int i = 0; i < f.grid.n; ++i) os << f.grid.x(i) << ',' << f.values[i].u1 << ',' << f.values[i].u2 << '\n';
  os.precision(old);
}

std::string run_metadata_json(const Field& f, const Viscosity& mu, const SchemeSettings& s, const EvolveReport& r) {
  using json = nlohmann::json;
  json rle = json::array();
  for (std::size_t i = 0; i < r.dt_history.size();) {
    std::size_t j = i;
    while (j < r.dt_history.size() && r.dt_history[j] == r.dt_history[i]) ++j;
    rle.push_back(json::array({r.dt_history[i], j - i}));
    i = j;
  }
  json doc{
      {"grid", {{"x_min", f.grid.x_min}, {"x_max", f.grid.x_max}, {"n", f.grid.n}, {"dx", f.grid.dx()}}},
      {"time", f.time},
      {"mu", json::array({mu.mu1(), mu.mu2()})},
      {"scheme",
       {{"flux", "central"}, {"time_stepping", "heun-rk2"}, {"safety", s.safety}, {"frame_speed", s.frame_speed},
        {"boundary", "dirichlet-far-field"}}},
      {"steps", r.dt_history.size()},
      {"dt_history", std::move(rle)},
      {"boundary_flux", json::array({r.boundary_flux.u1, r.boundary_flux.u2})},
      {"max_conservation_defect", r.max_conservation_defect},
      {"max_peclet", r.max_peclet},
      {"boundary_contact", r.boundary_contact},
      {"warnings", r.warnings},
  };
  return doc.dump(2);
}

}  // namespace qwave
