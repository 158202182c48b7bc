// qwave command-line front end. Talks to the library through the C API only.
//
//   qwave locus    --uplus 2,3 --mu 1,0.5
//   qwave profile  --uminus 6,-1 --uplus 2,3 --mu 1,0.5
//   qwave riemann  --left 5,2 --right 2,3 --mu 1,2
//   qwave evolve   --left 5,2 --right 2,3 --mu 0.01,0.02 --time 1
//   qwave regions  --right 2,3 --mu 1,0.5 --box -10,14,-9,9 --res 400
//   qwave validate tiling
//
// Exit status: 0 success, 1 computation failure, 2 bad flags.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwave.h"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(qw_status s, const char* what) {
  if (s != QW_OK) {
    std::string msg = std::string(what) + ": " + qw_status_string(s);
    if (*qw_last_error()) msg += " (" + std::string(qw_last_error()) + ")";
    // Bad numbers that slipped past the flag checks are still flag errors.
    if (s == QW_ERR_INVALID_ARGUMENT) throw UsageError(msg);
    throw ComputeError(msg);
  }
}

std::vector<double> parse_list(const std::string& text, std::size_t count, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0' || !std::isfinite(v))
      throw UsageError(std::string(flag) + ": '" + item + "' is not a finite number");
    out.push_back(v);
  }
  if (out.size() != count)
    throw UsageError(std::string(flag) + ": expected " + std::to_string(count) + " comma-separated values");
  return out;
}

qw_state parse_state(const std::string& text, const char* flag) {
  auto v = parse_list(text, 2, flag);
  return {v[0], v[1]};
}

qw_viscosity parse_mu(const std::string& text) {
  auto v = parse_list(text, 2, "--mu");
  if (v[0] <= 0.0 || v[1] <= 0.0) throw UsageError("--mu: components must be positive");
  return {v[0], v[1]};
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json state_json(const qw_state& u) { return json::array({u.u1, u.u2}); }

struct Output {
  fs::path dir;
  std::string format;

  fs::path path(const std::string& name) const {
    fs::create_directories(dir);
    return dir / (name + "." + (format == "json" ? "json" : "csv"));
  }

  void write(const fs::path& p, const std::string& content) const {
    std::ofstream os(p, std::ios::binary);
    os << content;
    if (!os) throw ComputeError("cannot write " + p.string());
    std::cout << "wrote " << p.string() << "\n";
  }
};

std::string default_output_dir() {
  const char* env = std::getenv("QWAVE_OUTPUT_DIR");
  return env && *env ? env : ".";
}

// ---------------------------------------------------------------------------

const char* locus_label(qw_shock_kind k) {
  switch (k) {
    case QW_SHOCK_FAST: return "fast";
    case QW_SHOCK_SLOW: return "slow";
    case QW_SHOCK_UNDERCOMPRESSIVE: return "undercompressive";
    case QW_SHOCK_OVERCOMPRESSIVE: return "overcompressive";
    case QW_SHOCK_DEGENERATE: return "degenerate";
    case QW_SHOCK_NON_EVOLUTIONARY: return "nonevolutionary";
  }
  return "unknown";
}

const char* verdict_label(qw_verdict v) {
  switch (v) {
    case QW_VERDICT_YES: return "yes";
    case QW_VERDICT_NO: return "no";
    case QW_VERDICT_BOUNDARY: return "boundary";
  }
  return "unknown";
}

struct LocusPoint {
  const char* branch;
  qw_state u;
  double W;
  const char* kind;
  const char* structure;
};

struct Segment {
  const char* branch;
  const char* kind;
  double u1_from;
  double u1_to;
};

void cmd_locus(const std::string& uplus_s, const std::string& mu_s, int samples, const std::string& range_s,
               const Output& out) {
  const qw_state up = parse_state(uplus_s, "--uplus");
  const qw_viscosity mu = parse_mu(mu_s);
  if (samples < 2) throw UsageError("--samples must be at least 2");

  qw_key_points kp;
  check(qw_key_points_of(up, mu, &kp), "key points");

  std::vector<std::pair<std::string, qw_state>> keys{{"A", kp.A}, {"B", kp.B}, {"C", kp.C}};
  if (kp.has_D) keys.emplace_back("D", kp.D);
  if (kp.has_E) keys.emplace_back("E", kp.E);
  if (kp.has_F) keys.emplace_back("F", kp.F);
  if (kp.has_G) keys.emplace_back("G", kp.G);
  keys.emplace_back("H", kp.H);

  double lo, hi;
  if (!range_s.empty()) {
    auto r = parse_list(range_s, 2, "--range");
    lo = r[0];
    hi = r[1];
    if (!(hi > lo)) throw UsageError("--range: empty interval");
  } else {
    lo = hi = up.u1;
    for (const auto& [name, p] : keys) {
      lo = std::min(lo, p.u1);
      hi = std::max(hi, p.u1);
    }
    const double pad = 0.25 * (hi - lo) + 1.0;
    lo -= pad;
    hi += pad;
  }

  static const char* names[] = {"horizontal", "diagonal", "antidiagonal"};
  std::vector<LocusPoint> points;
  std::vector<Segment> segments;
  for (int b = 0; b < 3; ++b) {
    qw_hugoniot_branch br;
    check(qw_hugoniot(up, static_cast<qw_branch>(b), &br), "hugoniot branch");
    for (int i = 0; i < samples; ++i) {
      const double u1 = lo + (hi - lo) * i / (samples - 1);
      const qw_state u{u1, br.point.u2 + (u1 - br.point.u1) * br.direction.u2 / br.direction.u1};
      if (u.u1 == up.u1 && u.u2 == up.u2) continue;
      const double W = br.speed_slope * u1 + br.speed_offset;
      qw_shock_kind kind;
      check(qw_classify_shock(u, up, W, &kind), "classification");
      const char* structure = "-";
      if (kind == QW_SHOCK_FAST || kind == QW_SHOCK_SLOW) {
        qw_verdict v;
        check(qw_structure_exists(u, up, W, mu, &v), "structure");
        structure = verdict_label(v);
      } else if (kind == QW_SHOCK_OVERCOMPRESSIVE) {
        int exists = 0;
        check(qw_overcompressive_structure_exists(u, up, W, mu, &exists), "structure");
        structure = exists ? "yes" : "no";
      }
      points.push_back({names[b], u, W, locus_label(kind), structure});
      if (!segments.empty() && segments.back().branch == names[b] && segments.back().kind == points.back().kind)
        segments.back().u1_to = u1;
      else
        segments.push_back({names[b], points.back().kind, u1, u1});
    }
  }

  if (out.format == "json") {
    json doc{{"u_plus", state_json(up)}, {"mu", json::array({mu.mu1, mu.mu2})}};
    for (const auto& [name, p] : keys) doc["key_points"][name] = state_json(p);
    for (const auto& s : segments)
      doc["segments"].push_back({{"branch", s.branch}, {"kind", s.kind}, {"u1_from", s.u1_from}, {"u1_to", s.u1_to}});
    for (const auto& p : points)
      doc["points"].push_back(
          {{"branch", p.branch}, {"u", state_json(p.u)}, {"W", p.W}, {"kind", p.kind}, {"structure", p.structure}});
    out.write(out.path("locus"), doc.dump(2) + "\n");
    return;
  }

  std::ostringstream pts, seg, key;
  pts << "branch,u1,u2,W,kind,structure\n";
  for (const auto& p : points)
    pts << p.branch << ',' << num(p.u.u1) << ',' << num(p.u.u2) << ',' << num(p.W) << ',' << p.kind << ','
        << p.structure << '\n';
  seg << "branch,kind,u1_from,u1_to\n";
  for (const auto& s : segments) seg << s.branch << ',' << s.kind << ',' << num(s.u1_from) << ',' << num(s.u1_to) << '\n';
  key << "point,u1,u2\n";
  for (const auto& [name, p] : keys) key << name << ',' << num(p.u1) << ',' << num(p.u2) << '\n';
  out.write(out.path("locus"), pts.str());
  out.write(out.path("locus_segments"), seg.str());
  out.write(out.path("locus_keypoints"), key.str());
}

// ---------------------------------------------------------------------------

void cmd_profile(const std::string& um_s, const std::string& up_s, const std::string& mu_s, double speed,
                 const Output& out) {
  const qw_state um = parse_state(um_s, "--uminus");
  const qw_state up = parse_state(up_s, "--uplus");
  const qw_viscosity mu = parse_mu(mu_s);
  double W = speed;
  if (std::isnan(W)) check(qw_shock_speed(um, up, &W), "shock speed");

  qw_profile* p = nullptr;
  check(qw_profile_find(um, up, W, mu, &p), "profile search");
  std::unique_ptr<qw_profile, decltype(&qw_profile_free)> guard(p, qw_profile_free);
  int family = 0;
  size_t n = 0;
  check(qw_profile_is_family(p, &family), "profile");
  check(qw_profile_size(p, &n), "profile");
  std::cout << "profile " << n << " samples, W = " << num(W) << (family ? " (one member of a family)" : "") << "\n";

  if (out.format == "json") {
    json doc{{"u_minus", state_json(um)}, {"u_plus", state_json(up)}, {"W", W},
             {"mu", json::array({mu.mu1, mu.mu2})}, {"family", family != 0}};
    doc["samples"] = json::array();
    for (size_t i = 0; i < n; ++i) {
      double xi;
      qw_state u;
      check(qw_profile_sample(p, i, &xi, &u), "profile");
      doc["samples"].push_back(json::array({xi, u.u1, u.u2}));
    }
    out.write(out.path("profile"), doc.dump(2) + "\n");
  } else {
    const auto path = out.path("profile");
    check(qw_profile_write_csv(p, path.string().c_str()), "write profile");
    std::cout << "wrote " << path.string() << "\n";
  }
}

// ---------------------------------------------------------------------------

std::string json_of(const qw_riemann* r) {
  size_t needed = 0;
  check(qw_riemann_json(r, nullptr, 0, &needed), "solution json");
  std::string s(needed + 1, '\0');
  check(qw_riemann_json(r, s.data(), s.size(), &needed), "solution json");
  s.resize(needed);
  return s;
}

void cmd_riemann(const std::string& l_s, const std::string& r_s, const std::string& mu_s, const std::string& theta_s,
                 int samples, const Output& out) {
  const qw_state uL = parse_state(l_s, "--left");
  const qw_state uR = parse_state(r_s, "--right");
  const qw_viscosity mu = parse_mu(mu_s);
  if (samples < 2) throw UsageError("--samples must be at least 2");

  qw_riemann* r = nullptr;
  check(qw_riemann_solve(uL, uR, mu, &r), "riemann solver");
  std::unique_ptr<qw_riemann, decltype(&qw_riemann_free)> guard(r, qw_riemann_free);

  qw_region region;
  int boundary = 0;
  size_t nw = 0;
  check(qw_riemann_region(r, &region, &boundary), "region");
  check(qw_riemann_wave_count(r, &nw), "waves");
  std::vector<qw_wave> waves(nw);
  for (size_t i = 0; i < nw; ++i) check(qw_riemann_wave(r, i, &waves[i]), "waves");

  std::cout << "region " << qw_region_name(region) << (boundary ? " (on a region boundary)" : "") << "\n";
  for (const auto& w : waves) {
    std::cout << "  " << qw_wave_kind_name(w.kind);
    if (w.theta_min == w.theta_max)
      std::cout << " W=" << num(w.theta_min);
    else
      std::cout << " theta=[" << num(w.theta_min) << ", " << num(w.theta_max) << "]";
    std::cout << "  (" << num(w.left.u1) << ", " << num(w.left.u2) << ") -> (" << num(w.right.u1) << ", "
              << num(w.right.u2) << ")\n";
  }

  if (out.format == "json") {
    out.write(out.path("riemann"), json_of(r) + "\n");
    return;
  }

  double lo, hi;
  if (!theta_s.empty()) {
    auto t = parse_list(theta_s, 2, "--theta");
    lo = t[0];
    hi = t[1];
    if (!(hi > lo)) throw UsageError("--theta: empty interval");
  } else {
    lo = waves.empty() ? -1.0 : waves.front().theta_min;
    hi = waves.empty() ? 1.0 : waves.back().theta_max;
    const double pad = 0.25 * (hi - lo) + 1.0;
    lo -= pad;
    hi += pad;
  }

  std::ostringstream wv, sm;
  wv << "kind,left_u1,left_u2,right_u1,right_u2,theta_min,theta_max\n";
  for (const auto& w : waves)
    wv << qw_wave_kind_name(w.kind) << ',' << num(w.left.u1) << ',' << num(w.left.u2) << ',' << num(w.right.u1)
       << ',' << num(w.right.u2) << ',' << num(w.theta_min) << ',' << num(w.theta_max) << '\n';
  sm << "theta,u1,u2\n";
  for (int i = 0; i < samples; ++i) {
    const double theta = lo + (hi - lo) * i / (samples - 1);
    qw_state u;
    check(qw_riemann_sample(r, theta, &u), "sampling");
    sm << num(theta) << ',' << num(u.u1) << ',' << num(u.u2) << '\n';
  }
  out.write(out.path("riemann_waves"), wv.str());
  out.write(out.path("riemann_sample"), sm.str());
}

// ---------------------------------------------------------------------------

struct EvolveFlags {
  std::string left, right, mu;
  double time = 1.0;
  std::string domain;
  int cells = 0;
  double width = 0.0;
  double frame = 0.0;
  double safety = 0.4;
  bool compare = false;
};

void cmd_evolve(const EvolveFlags& f, const Output& out) {
  const qw_state uL = parse_state(f.left, "--left");
  const qw_state uR = parse_state(f.right, "--right");
  const qw_viscosity mu = parse_mu(f.mu);
  if (!(f.time > 0.0) || !std::isfinite(f.time)) throw UsageError("--time must be positive");
  if (!(f.safety > 0.0 && f.safety <= 1.0)) throw UsageError("--safety must lie in (0, 1]");
  if (f.width < 0.0 || !std::isfinite(f.width)) throw UsageError("--width must be non-negative");

  double lo = -20.0, hi = 20.0;
  if (!f.domain.empty()) {
    auto d = parse_list(f.domain, 2, "--domain");
    lo = d[0];
    hi = d[1];
    if (!(hi > lo)) throw UsageError("--domain: empty interval");
  }
  int cells = f.cells;
  if (cells == 0) {
    // Every state of the exact solution bounds the speeds the evolution will see.
    std::vector<qw_state> states{uL, uR};
    qw_riemann* sol = nullptr;
    if (qw_riemann_solve(uL, uR, mu, &sol) == QW_OK) {
      std::size_t n = 0;
      qw_riemann_wave_count(sol, &n);
      for (std::size_t i = 0; i < n; ++i) {
        qw_wave w;
        if (qw_riemann_wave(sol, i, &w) == QW_OK) states.push_back(w.right);
      }
      qw_riemann_free(sol);
    }
    double cmax = 0.0, a, b, dx;
    for (const auto& u : states) {
      check(qw_characteristic_speeds(u, &a, &b), "speeds");
      cmax = std::max({cmax, std::abs(a - f.frame), std::abs(b - f.frame)});
    }
    check(qw_resolved_dx(mu, cmax, &dx), "grid spacing");
    cells = static_cast<int>(std::ceil((hi - lo) / dx));
  }
  if (cells < 16) throw UsageError("--cells must be at least 16");

  qw_field* f0 = nullptr;
  check(qw_field_riemann(uL, uR, lo, hi, cells, f.width, &f0), "initial data");
  std::unique_ptr<qw_field, decltype(&qw_field_free)> g0(f0, qw_field_free);
  qw_scheme scheme = qw_scheme_default();
  scheme.safety = f.safety;
  scheme.frame_speed = f.frame;
  qw_field* f1 = nullptr;
  check(qw_field_evolve(f0, mu, f.time, &scheme, &f1), "evolution");
  std::unique_ptr<qw_field, decltype(&qw_field_free)> g1(f1, qw_field_free);

  size_t needed = 0;
  check(qw_field_metadata(f1, nullptr, 0, &needed), "metadata");
  std::string meta(needed + 1, '\0');
  check(qw_field_metadata(f1, meta.data(), meta.size(), &needed), "metadata");
  meta.resize(needed);

  const auto meta_doc = json::parse(meta);
  std::cout << "evolved " << cells << " cells to t = " << num(f.time) << " in " << meta_doc["steps"] << " steps\n";
  for (const auto& w : meta_doc["warnings"]) std::cout << "warning: " << w.get<std::string>() << "\n";

  if (out.format == "json") {
    size_t n = 0;
    check(qw_field_size(f1, &n), "field");
    json doc{{"metadata", meta_doc}, {"x", json::array()}, {"u1", json::array()}, {"u2", json::array()}};
    for (size_t i = 0; i < n; ++i) {
      double x;
      qw_state u;
      check(qw_field_get(f1, i, &x, &u), "field");
      doc["x"].push_back(x);
      doc["u1"].push_back(u.u1);
      doc["u2"].push_back(u.u2);
    }
    out.write(out.path("evolve"), doc.dump(2) + "\n");
  } else {
    const auto path = out.path("evolve");
    check(qw_field_write_csv(f1, path.string().c_str()), "write field");
    std::cout << "wrote " << path.string() << "\n";
    fs::path side = out.dir / "evolve.meta.json";
    out.write(side, meta + "\n");
  }

  if (f.compare) {
    double l1 = 0.0;
    check(qw_compare_to_riemann(uL, uR, mu, f.time, &l1), "comparison");
    std::cout << "L1 distance to the exact Riemann solution: " << num(l1) << "\n";
  }
}

// ---------------------------------------------------------------------------

void cmd_regions(const std::string& r_s, const std::string& mu_s, const std::string& box_s, int res,
                 const Output& out) {
  const qw_state uR = parse_state(r_s, "--right");
  const qw_viscosity mu = parse_mu(mu_s);
  auto b = parse_list(box_s, 4, "--box");
  if (!(b[1] > b[0] && b[3] > b[2])) throw UsageError("--box: expected u1_min,u1_max,u2_min,u2_max");
  if (res < 1 || res > 4000) throw UsageError("--res must lie in [1, 4000]");

  std::vector<qw_region> labels(static_cast<size_t>(res) * res);
  check(qw_region_map(uR, mu, b[0], b[1], b[2], b[3], res, labels.data()), "region map");

  auto centre = [&](int i, int j) {
    return qw_state{b[0] + (i + 0.5) * (b[1] - b[0]) / res, b[2] + (j + 0.5) * (b[3] - b[2]) / res};
  };

  std::vector<int> counts(QW_REGION_DEGENERATE + 1, 0);
  for (auto l : labels) ++counts[l];
  for (int r = 0; r <= QW_REGION_DEGENERATE; ++r)
    if (counts[r]) std::cout << "  " << qw_region_name(static_cast<qw_region>(r)) << ": " << counts[r] << " cells\n";

  if (out.format == "json") {
    json doc{{"right", state_json(uR)},
             {"mu", json::array({mu.mu1, mu.mu2})},
             {"box", b},
             {"resolution", res},
             {"layout", "row-major, rows by increasing u2, cell centres"}};
    for (int r = 0; r <= QW_REGION_DEGENERATE; ++r)
      doc["patterns"][qw_region_name(static_cast<qw_region>(r))] = qw_region_pattern(static_cast<qw_region>(r));
    doc["labels"] = json::array();
    for (auto l : labels) doc["labels"].push_back(qw_region_name(l));
    out.write(out.path("regions"), doc.dump() + "\n");
    return;
  }
  std::ostringstream os;
  os << "u1,u2,region\n";
  for (int j = 0; j < res; ++j)
    for (int i = 0; i < res; ++i) {
      const auto c = centre(i, j);
      os << num(c.u1) << ',' << num(c.u2) << ',' << qw_region_name(labels[static_cast<size_t>(j) * res + i]) << '\n';
    }
  out.write(out.path("regions"), os.str());
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& suite, std::uint64_t seed) {
  bool known = suite == "all";
  for (size_t i = 0; i < qw_suite_count(); ++i) known = known || suite == qw_suite_name(i);
  if (!known) throw UsageError("unknown suite '" + suite + "'");

  int passed = 0;
  size_t needed = 0;
  std::string report(1 << 20, '\0');
  check(qw_validate(suite.c_str(), seed, &passed, report.data(), report.size(), &needed), "validation");
  report.resize(std::min(needed, report.size() - 1));
  std::cout << report;
  return passed ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qwave: waves of a quadratic-flux 2x2 system and its viscous regularization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qw_version());

  std::string out_dir = default_output_dir();
  std::string format = "csv";
  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", out_dir, "Output directory (default $QWAVE_OUTPUT_DIR or .)");
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };

  std::string uplus, uminus, left, right, mu, range, theta, box;
  int samples = 801, res = 400;
  double speed = std::nan("");

  auto* locus = app.add_subcommand("locus", "Hugoniot locus with per-point classification and key points");
  locus->add_option("--uplus", uplus, "State ahead of the shock, u1,u2")->required();
  locus->add_option("--mu", mu, "Viscosities mu1,mu2")->required();
  locus->add_option("--samples", samples, "Points per branch");
  locus->add_option("--range", range, "u1 range lo,hi (default spans the key points)");
  add_common(locus);

  auto* profile = app.add_subcommand("profile", "Traveling-wave profile of a shock");
  profile->add_option("--uminus", uminus, "State behind the shock, u1,u2")->required();
  profile->add_option("--uplus", uplus, "State ahead of the shock, u1,u2")->required();
  profile->add_option("--mu", mu, "Viscosities mu1,mu2")->required();
  profile->add_option("--speed", speed, "Shock speed (default from the jump conditions)");
  add_common(profile);

  auto* riemann = app.add_subcommand("riemann", "Exact Riemann solution");
  riemann->add_option("--left", left, "Left state u1,u2")->required();
  riemann->add_option("--right", right, "Right state u1,u2")->required();
  riemann->add_option("--mu", mu, "Viscosities mu1,mu2")->required();
  riemann->add_option("--theta", theta, "Sampling range of x/t, lo,hi");
  riemann->add_option("--samples", samples, "Number of samples");
  add_common(riemann);

  EvolveFlags ev;
  auto* evolve = app.add_subcommand("evolve", "Viscous evolution of Riemann data");
  evolve->add_option("--left", ev.left, "Left state u1,u2")->required();
  evolve->add_option("--right", ev.right, "Right state u1,u2")->required();
  evolve->add_option("--mu", ev.mu, "Viscosities mu1,mu2")->required();
  evolve->add_option("--time", ev.time, "Final time");
  evolve->add_option("--domain", ev.domain, "Interval x_min,x_max (default -20,20)");
  evolve->add_option("--cells", ev.cells, "Number of cells (default resolves the viscous scale)");
  evolve->add_option("--width", ev.width, "tanh smoothing width of the initial step");
  evolve->add_option("--frame", ev.frame, "Speed of the computational frame");
  evolve->add_option("--safety", ev.safety, "Fraction of the explicit time-step limit");
  evolve->add_flag("--compare", ev.compare, "Also report the L1 distance to the exact Riemann solution");
  add_common(evolve);

  auto* regions = app.add_subcommand("regions", "Region map of left states for a fixed right state");
  regions->add_option("--right", right, "Right state u1,u2")->required();
  regions->add_option("--mu", mu, "Viscosities mu1,mu2")->required();
  regions->add_option("--box", box, "u1_min,u1_max,u2_min,u2_max")->required();
  regions->add_option("--res", res, "Cells per side");
  add_common(regions);

  std::string suite = "all";
  std::uint64_t seed = 20240611;
  auto* validate = app.add_subcommand("validate", "Run a self-check suite");
  validate->add_option("suite", suite, "Suite name or 'all'");
  validate->add_option("--seed", seed, "Random seed of sampled suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const Output out{fs::path(out_dir), format};
  try {
    if (*locus) cmd_locus(uplus, mu, samples, range, out);
    if (*profile) cmd_profile(uminus, uplus, mu, speed, out);
    if (*riemann) cmd_riemann(left, right, mu, theta, samples, out);
    if (*evolve) cmd_evolve(ev, out);
    if (*regions) cmd_regions(right, mu, box, res, out);
    if (*validate) return cmd_validate(suite, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
