#include "qwave.h"

#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "qwave/riemann.hpp"
#include "qwave/structure.hpp"
#include "qwave/validation.hpp"
#include "qwave/viscous.hpp"

struct qw_profile {
  qwave::Profile profile;
  bool family;
};

struct qw_riemann {
  qwave::RiemannSolution solution;
};

struct qw_field {
  qwave::Field field;
  std::string metadata;
};

namespace {

thread_local std::string g_last_error;

qwave::State S(qw_state s) { return {s.u1, s.u2}; }
qw_state C(const qwave::State& s) { return {s.u1, s.u2}; }
qwave::Viscosity V(qw_viscosity m) { return {m.mu1, m.mu2}; }

qw_status fail(qw_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs fn and converts any exception into a status code.
template <class Fn>
qw_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return QW_OK;
  } catch (const qwave::Error& e) {
    return fail(static_cast<qw_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QW_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw qwave::Error(qwave::ErrorCode::InvalidArgument, what);
}

void copy_out(const std::string& s, char* buf, size_t cap, size_t* needed) {
  if (needed) *needed = s.size();
  if (buf && cap > 0) {
    size_t n = s.size() < cap - 1 ? s.size() : cap - 1;
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  }
}

std::ofstream open_out(const char* path) {
  require(path != nullptr, "path is null");
  std::ofstream os(path);
  if (!os) throw qwave::Error(qwave::ErrorCode::Io, std::string("cannot open ") + path);
  return os;
}

void close_out(std::ofstream& os, const char* path) {
  os.close();
  if (!os) throw qwave::Error(qwave::ErrorCode::Io, std::string("write failed: ") + path);
}

qw_shock_kind to_c(qwave::ShockKind k) {
  switch (k) {
    case qwave::ShockKind::FastShock: return QW_SHOCK_FAST;
    case qwave::ShockKind::SlowShock: return QW_SHOCK_SLOW;
    case qwave::ShockKind::Undercompressive: return QW_SHOCK_UNDERCOMPRESSIVE;
    case qwave::ShockKind::Overcompressive: return QW_SHOCK_OVERCOMPRESSIVE;
    case qwave::ShockKind::Degenerate: return QW_SHOCK_DEGENERATE;
    case qwave::ShockKind::NonEvolutionary: return QW_SHOCK_NON_EVOLUTIONARY;
  }
  return QW_SHOCK_DEGENERATE;
}

}  // namespace

extern "C" {

const char* qw_version(void) { return "1.0.0"; }

const char* qw_status_string(qw_status status) {
  if (status == QW_OK) return "ok";
  if (status == QW_ERR_INTERNAL) return "internal error";
  if (status >= QW_ERR_INVALID_ARGUMENT && status <= QW_ERR_IO)
    return qwave::to_string(static_cast<qwave::ErrorCode>(status));
  return "unknown status";
}

const char* qw_last_error(void) { return g_last_error.c_str(); }

qw_status qw_flux(qw_state u, qw_state* out) {
  return guarded([&] {
    require(out, "out is null");
    *out = C(qwave::flux(S(u)));
  });
}

qw_status qw_characteristic_speeds(qw_state u, double* slow, double* fast) {
  return guarded([&] {
    require(slow && fast, "out is null");
    auto c = qwave::characteristic_speeds(S(u));
    *slow = c.c1;
    *fast = c.c2;
  });
}

qw_status qw_hugoniot(qw_state u_plus, qw_branch branch, qw_hugoniot_branch* out) {
  return guarded([&] {
    require(out, "out is null");
    require(branch >= QW_BRANCH_HORIZONTAL && branch <= QW_BRANCH_ANTIDIAGONAL, "unknown branch");
    const auto b = qwave::hugoniot_branches(S(u_plus))[static_cast<size_t>(branch)];
    *out = {C(b.point), C(b.direction), b.speed_slope, b.speed_offset};
  });
}

qw_status qw_rh_residual(qw_state u_minus, qw_state u_plus, double W, double* out) {
  return guarded([&] {
    require(out, "out is null");
    *out = qwave::rh_residual({S(u_minus), S(u_plus), W});
  });
}

qw_status qw_shock_speed(qw_state u_minus, qw_state u_plus, double* W) {
  return guarded([&] {
    require(W, "out is null");
    *W = qwave::shock_speed(S(u_minus), S(u_plus));
  });
}

qw_status qw_classify_shock(qw_state u_minus, qw_state u_plus, double W, qw_shock_kind* out) {
  return guarded([&] {
    require(out, "out is null");
    *out = to_c(qwave::lax_classify({S(u_minus), S(u_plus), W}).kind);
  });
}

qw_status qw_structure_exists(qw_state u_minus, qw_state u_plus, double W, qw_viscosity mu, qw_verdict* out) {
  return guarded([&] {
    require(out, "out is null");
    auto v = qwave::structure_exists({S(u_minus), S(u_plus), W}, V(mu));
    *out = static_cast<qw_verdict>(v.verdict);
  });
}

qw_status qw_overcompressive_structure_exists(qw_state u_minus, qw_state u_plus, double W, qw_viscosity mu,
                                               int* exists) {
  return guarded([&] {
    require(exists, "out is null");
    *exists = qwave::overcompressive_structure_exists({S(u_minus), S(u_plus), W}, V(mu)) ? 1 : 0;
  });
}

qw_status qw_undercompressive_speed(qw_state u_plus, qw_viscosity mu, double* W) {
  return guarded([&] {
    require(W, "out is null");
    *W = qwave::undercompressive_speed(S(u_plus), V(mu));
  });
}

qw_status qw_undercompressive_energy_gap(qw_state u_plus, qw_viscosity mu, double* gap) {
  return guarded([&] {
    require(gap, "out is null");
    *gap = qwave::undercompressive_energy_gap(S(u_plus), V(mu));
  });
}

qw_status qw_energy(qw_state u, qw_state u_plus, double W, double* Z) {
  return guarded([&] {
    require(Z, "out is null");
    *Z = qwave::energy_Z(S(u), S(u_plus), W);
  });
}

qw_status qw_key_points_of(qw_state u_plus, qw_viscosity mu, qw_key_points* out) {
  return guarded([&] {
    require(out, "out is null");
    auto k = qwave::key_points(S(u_plus), V(mu));
    qw_key_points r{};
    r.A = C(k.A);
    r.B = C(k.B);
    r.C = C(k.C);
    r.H = C(k.H);
    auto opt = [](const std::optional<qwave::State>& s, qw_state& dst, int& flag) {
      flag = s.has_value();
      if (s) dst = C(*s);
    };
    opt(k.D, r.D, r.has_D);
    opt(k.E, r.E, r.has_E);
    opt(k.F, r.F, r.has_F);
    opt(k.G, r.G, r.has_G);
    *out = r;
  });
}

const char* qw_shock_kind_name(qw_shock_kind kind) {
  static const qwave::ShockKind map[] = {qwave::ShockKind::FastShock,       qwave::ShockKind::SlowShock,
                                         qwave::ShockKind::Undercompressive, qwave::ShockKind::Overcompressive,
                                         qwave::ShockKind::Degenerate,      qwave::ShockKind::NonEvolutionary};
  if (kind < QW_SHOCK_FAST || kind > QW_SHOCK_NON_EVOLUTIONARY) return "unknown";
  return qwave::to_string(map[kind]);
}

qw_status qw_profile_find(qw_state u_minus, qw_state u_plus, double W, qw_viscosity mu, qw_profile** out) {
  return guarded([&] {
    require(out, "out is null");
    *out = nullptr;
    auto search = qwave::find_heteroclinic(S(u_minus), S(u_plus), W, V(mu));
    if (!search.found()) throw qwave::Error(qwave::ErrorCode::NotFound, "no heteroclinic orbit: " + search.reason);
    *out = new qw_profile{std::move(*search.profile), search.family};
  });
}

void qw_profile_free(qw_profile* p) { delete p; }

qw_status qw_profile_size(const qw_profile* p, size_t* n) {
  return guarded([&] {
    require(p && n, "null argument");
    *n = p->profile.trajectory.samples.size();
  });
}

qw_status qw_profile_sample(const qw_profile* p, size_t i, double* xi, qw_state* u) {
  return guarded([&] {
    require(p && xi && u, "null argument");
    const auto& s = p->profile.trajectory.samples;
    require(i < s.size(), "sample index out of range");
    *xi = s[i].xi;
    *u = C(s[i].u);
  });
}

qw_status qw_profile_eval(const qw_profile* p, double xi, qw_state* u) {
  return guarded([&] {
    require(p && u, "null argument");
    *u = C(p->profile.at(xi));
  });
}

qw_status qw_profile_is_family(const qw_profile* p, int* family) {
  return guarded([&] {
    require(p && family, "null argument");
    *family = p->family ? 1 : 0;
  });
}

qw_status qw_profile_write_csv(const qw_profile* p, const char* path) {
  return guarded([&] {
    require(p, "profile is null");
    auto os = open_out(path);
    qwave::write_profile_csv(os, p->profile);
    close_out(os, path);
  });
}

qw_status qw_measure_connection(qw_state u_plus, qw_viscosity mu, double* W_star, double* line_deviation) {
  return guarded([&] {
    require(W_star, "out is null");
    auto m = qwave::verify_connection(S(u_plus), V(mu));
    *W_star = m.W_star;
    if (line_deviation) *line_deviation = m.max_line_deviation;
  });
}

qw_status qw_riemann_solve(qw_state left, qw_state right, qw_viscosity mu, qw_riemann** out) {
  return guarded([&] {
    require(out, "out is null");
    *out = nullptr;
    *out = new qw_riemann{qwave::solve_riemann(S(left), S(right), V(mu))};
  });
}

void qw_riemann_free(qw_riemann* r) { delete r; }

qw_status qw_riemann_region(const qw_riemann* r, qw_region* region, int* on_boundary) {
  return guarded([&] {
    require(r && region, "null argument");
    *region = static_cast<qw_region>(r->solution.region);
    if (on_boundary) *on_boundary = r->solution.on_boundary ? 1 : 0;
  });
}

qw_status qw_riemann_wave_count(const qw_riemann* r, size_t* n) {
  return guarded([&] {
    require(r && n, "null argument");
    *n = r->solution.waves.size();
  });
}

qw_status qw_riemann_wave(const qw_riemann* r, size_t i, qw_wave* out) {
  return guarded([&] {
    require(r && out, "null argument");
    require(i < r->solution.waves.size(), "wave index out of range");
    const auto& w = r->solution.waves[i];
    *out = {static_cast<qw_wave_kind>(w.kind), C(w.left), C(w.right), w.theta_min, w.theta_max};
  });
}

qw_status qw_riemann_sample(const qw_riemann* r, double theta, qw_state* out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = C(qwave::sample_solution(r->solution, theta));
  });
}

qw_status qw_riemann_json(const qw_riemann* r, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    require(r, "solution is null");
    copy_out(qwave::to_json(r->solution), buf, cap, needed);
  });
}

qw_status qw_riemann_validate(const qw_riemann* r, qw_viscosity mu, size_t* violations) {
  return guarded([&] {
    require(r && violations, "null argument");
    auto report = qwave::validate_solution(r->solution, V(mu));
    *violations = report.size();
  });
}

const char* qw_wave_kind_name(qw_wave_kind kind) {
  if (kind < QW_WAVE_FAST_SHOCK || kind > QW_WAVE_SPECIAL_RAREFACTION) return "unknown";
  return qwave::to_string(static_cast<qwave::WaveKind>(kind));
}

const char* qw_region_name(qw_region region) {
  if (region < QW_REGION_1 || region > QW_REGION_DEGENERATE) return "unknown";
  return qwave::to_string(static_cast<qwave::Region>(region));
}

const char* qw_region_pattern(qw_region region) {
  if (region < QW_REGION_1 || region > QW_REGION_DEGENERATE) return "";
  return qwave::pattern_of(static_cast<qwave::Region>(region));
}

qw_status qw_region_map(qw_state right, qw_viscosity mu, double u1_min, double u1_max, double u2_min, double u2_max,
                        int resolution, qw_region* labels) {
  return guarded([&] {
    require(labels, "labels is null");
    require(resolution > 0, "resolution must be positive");
    require(u1_max > u1_min && u2_max > u2_min, "empty box");
    auto map = qwave::region_map(S(right), V(mu), {u1_min, u1_max, u2_min, u2_max}, resolution);
    for (size_t i = 0; i < map.labels.size(); ++i) labels[i] = static_cast<qw_region>(map.labels[i]);
  });
}

qw_status qw_resolved_dx(qw_viscosity mu, double max_abs_speed, double* dx) {
  return guarded([&] {
    require(dx, "out is null");
    require(max_abs_speed >= 0.0, "max_abs_speed must be non-negative");
    *dx = qwave::resolved_dx(V(mu), max_abs_speed);
  });
}

qw_scheme qw_scheme_default(void) {
  qwave::SchemeSettings s;
  return {s.safety, s.frame_speed};
}

qw_status qw_field_riemann(qw_state left, qw_state right, double x_min, double x_max, int cells, double width,
                           qw_field** out) {
  return guarded([&] {
    require(out, "out is null");
    *out = nullptr;
    qwave::Grid1D grid(x_min, x_max, cells);
    *out = new qw_field{qwave::riemann_ic(S(left), S(right), grid, width), {}};
  });
}

qw_status qw_field_from_values(double x_min, double x_max, int cells, const qw_state* values, qw_field** out) {
  return guarded([&] {
    require(out && values, "null argument");
    *out = nullptr;
    qwave::Grid1D grid(x_min, x_max, cells);
    qwave::Field f{grid, {}, 0.0};
    f.values.reserve(static_cast<size_t>(cells));
    for (int i = 0; i < cells; ++i) f.values.push_back(S(values[i]));
    *out = new qw_field{std::move(f), {}};
  });
}

void qw_field_free(qw_field* f) { delete f; }

qw_status qw_field_size(const qw_field* f, size_t* n) {
  return guarded([&] {
    require(f && n, "null argument");
    *n = f->field.values.size();
  });
}

qw_status qw_field_get(const qw_field* f, size_t i, double* x, qw_state* u) {
  return guarded([&] {
    require(f && u, "null argument");
    require(i < f->field.values.size(), "cell index out of range");
    if (x) *x = f->field.grid.x(static_cast<int>(i));
    *u = C(f->field.values[i]);
  });
}

qw_status qw_field_time(const qw_field* f, double* t) {
  return guarded([&] {
    require(f && t, "null argument");
    *t = f->field.time;
  });
}

qw_status qw_field_evolve(const qw_field* f, qw_viscosity mu, double t_end, const qw_scheme* scheme, qw_field** out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = nullptr;
    qwave::SchemeSettings s;
    if (scheme) {
      require(scheme->safety > 0.0 && scheme->safety <= 1.0, "safety must lie in (0, 1]");
      s.safety = scheme->safety;
      s.frame_speed = scheme->frame_speed;
    }
    const qwave::Viscosity visc = V(mu);
    qwave::EvolveReport report;
    auto result = qwave::evolve(f->field, visc, t_end, s, &report);
    auto meta = qwave::run_metadata_json(result, visc, s, report);
    *out = new qw_field{std::move(result), std::move(meta)};
  });
}

qw_status qw_field_write_csv(const qw_field* f, const char* path) {
  return guarded([&] {
    require(f, "field is null");
    auto os = open_out(path);
    qwave::write_field_csv(os, f->field);
    close_out(os, path);
  });
}

qw_status qw_field_metadata(const qw_field* f, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    require(f, "field is null");
    copy_out(f->metadata.empty() ? std::string("{}") : f->metadata, buf, cap, needed);
  });
}

qw_status qw_compare_to_riemann(qw_state left, qw_state right, qw_viscosity mu, double t, double* l1_error) {
  return guarded([&] {
    require(l1_error, "out is null");
    const qwave::Viscosity visc = V(mu);
    auto sol = qwave::solve_riemann(S(left), S(right), visc);
    auto setup = qwave::riemann_setup(sol, visc, t);
    qwave::SchemeSettings s;
    s.frame_speed = setup.frame_speed;
    *l1_error = qwave::compare_to_riemann(S(left), S(right), visc, t, setup.grid, s).l1_error;
  });
}

qw_status qw_validate(const char* suite, uint64_t seed, int* passed, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    require(suite && passed, "null argument");
    auto results = qwave::run_suite(suite, seed);
    std::ostringstream os;
    bool all = true;
    for (const auto& r : results) {
      all = all && r.passed;
      os << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.name << " (" << r.seconds << " s)\n";
      for (const auto& d : r.details) os << "  " << d << "\n";
    }
    *passed = all ? 1 : 0;
    copy_out(os.str(), buf, cap, needed);
  });
}

size_t qw_suite_count(void) { return qwave::suite_names().size(); }

const char* qw_suite_name(size_t i) {
  const auto& names = qwave::suite_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

}  // extern "C"
