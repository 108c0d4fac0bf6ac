#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "kottler/errors.hpp"
#include "kottler/geometry.hpp"
#include "kottler/identities.hpp"
#include "kottler/models.hpp"
#include "kottler/profile.hpp"
#include "kottler/pseudoradial.hpp"
#include "kottler/report.hpp"
#include "kottler/shooting.hpp"
#include "kottler/suite.hpp"

namespace kottler::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

class InvalidInput : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IoFailure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string out_dir = ".";
  std::string config;
  double tolerance_scale = 1.0;
  unsigned threads = 1;
  bool seedless = false;
};

struct ModelOptions {
  double mass = 0.0;
  int genus = 2;
  double r_max = 50.0;
  std::size_t points = 512;
  double comparison_mass = nan;  // NaN: the mass clamped to [m_crit, 0]
  std::string out = "model";
  bool gnuplot = false;
};

struct ShootOptions {
  double k = 1.0;
  int genus = 2;
  double s_max = 5.0;
  double tol = 1e-12;
  double ds_out = 0.01;
  std::string out = "shot";
  bool gnuplot = false;
};

struct SweepOptions {
  std::string kind = "mass";
  double mass_min = critical_mass;
  double mass_max = 0.0;
  int mass_count = 5;
  double m0_min = critical_mass;
  double m0_max = 0.0;
  int m0_count = 5;
  int genus = 2;
  double r_hi = 5.0;
  double k_min = 1.0;
  double k_max = 1.0;
  int k_count = 1;
  int genus_min = 2;
  int genus_max = 5;
  double s_max = 7.5;
  std::string out = "sweep";
};

struct VerifyOptions {
  std::vector<std::string> only;
  std::string out = "verify_all";
};

struct Options {
  GlobalOptions global;
  ModelOptions model;
  ShootOptions shoot;
  SweepOptions sweep;
  VerifyOptions verify;
};

// Pending output files, written only once a command has fully succeeded
// (or, for verify-all, once the suite has finished).
using Outputs = std::vector<std::pair<fs::path, std::string>>;

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Csv {
 public:
  explicit Csv(const std::vector<std::string>& header) : columns_(header.size()) { row(header); }

  void row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) throw std::logic_error("csv row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << cells[i];
    os_ << '\n';
  }

  void row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(number(v));
    row(cells);
  }

  std::string str() const { return os_.str(); }

 private:
  std::size_t columns_;
  std::ostringstream os_;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_all(const Outputs& files) {
  for (const auto& [path, content] : files) {
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    fs::path partial = path;
    partial += ".partial";
    {
      std::ofstream os(partial, std::ios::binary | std::ios::trunc);
      if (!os) throw IoFailure("cannot open " + partial.string() + " for writing");
      os << content;
      os.close();
      if (!os) throw IoFailure("write to " + partial.string() + " failed");
    }
    fs::rename(partial, path, ec);
    if (ec) throw IoFailure("cannot rename " + partial.string() + ": " + ec.message());
  }
}

fs::path output_path(const GlobalOptions& g, const std::string& stem, const std::string& ext) {
  return fs::path(g.out_dir) / (stem + ext);
}

std::vector<double> range(const std::string& name, double lo, double hi, int count) {
  if (count < 1 || !(lo <= hi)) {
    throw InvalidInput("empty range for " + name + ": [" + number(lo) + ", " + number(hi) +
                       "] with " + std::to_string(count) + " points");
  }
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    v[static_cast<std::size_t>(i)] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  }
  if (count > 1) v.back() = hi;
  return v;
}

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex lock;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> guard(lock);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

json horizon_json(const KottlerModel& model) {
  const auto& h = model.horizon();
  return {{"kappa", sign(model.kappa())},
          {"mass", model.mass()},
          {"genus", model.genus()},
          {"radius", h.radius},
          {"surface_gravity", h.surface_gravity},
          {"degenerate", h.degenerate},
          {"area", h.area ? json(*h.area) : json(nullptr)}};
}

// ---------------------------------------------------------------- config

class ConfigScope {
 public:
  ConfigScope(const json& obj, std::string scope) : obj_(obj), scope_(std::move(scope)) {
    if (!obj_.is_object()) throw InvalidInput("config section '" + scope_ + "' must be an object");
  }

  template <class T>
  void operator()(const std::string& key, T& dst) {
    seen_.insert(key);
    if (!obj_.contains(key)) return;
    try {
      dst = obj_.at(key).get<T>();
    } catch (const json::exception&) {
      throw InvalidInput("config key '" + scope_ + key + "' has the wrong type");
    }
  }

  void section(const std::string& key) { seen_.insert(key); }

  void finish() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!seen_.count(key)) throw InvalidInput("unknown config key '" + scope_ + key + "'");
    }
  }

 private:
  const json& obj_;
  std::string scope_;
  std::set<std::string> seen_;
};

void apply_config(const json& cfg, Options& o) {
  ConfigScope top(cfg, "");
  top("out_dir", o.global.out_dir);
  top("tolerance_scale", o.global.tolerance_scale);
  top("threads", o.global.threads);
  top("seedless", o.global.seedless);
  for (const char* s : {"model", "shoot", "sweep", "verify_all"}) top.section(s);
  top.finish();
  if (cfg.contains("model")) {
    ConfigScope c(cfg.at("model"), "model.");
    auto& m = o.model;
    c("mass", m.mass);
    c("genus", m.genus);
    c("r_max", m.r_max);
    c("points", m.points);
    c("comparison_mass", m.comparison_mass);
    c("out", m.out);
    c("gnuplot", m.gnuplot);
    c.finish();
  }
  if (cfg.contains("shoot")) {
    ConfigScope c(cfg.at("shoot"), "shoot.");
    auto& s = o.shoot;
    c("k", s.k);
    c("genus", s.genus);
    c("s_max", s.s_max);
    c("tol", s.tol);
    c("ds_out", s.ds_out);
    c("out", s.out);
    c("gnuplot", s.gnuplot);
    c.finish();
  }
  if (cfg.contains("sweep")) {
    ConfigScope c(cfg.at("sweep"), "sweep.");
    auto& s = o.sweep;
    c("kind", s.kind);
    c("mass_min", s.mass_min);
    c("mass_max", s.mass_max);
    c("mass_count", s.mass_count);
    c("m0_min", s.m0_min);
    c("m0_max", s.m0_max);
    c("m0_count", s.m0_count);
    c("genus", s.genus);
    c("r_hi", s.r_hi);
    c("k_min", s.k_min);
    c("k_max", s.k_max);
    c("k_count", s.k_count);
    c("genus_min", s.genus_min);
    c("genus_max", s.genus_max);
    c("s_max", s.s_max);
    c("out", s.out);
    c.finish();
  }
  if (cfg.contains("verify_all")) {
    ConfigScope c(cfg.at("verify_all"), "verify_all.");
    c("only", o.verify.only);
    c("out", o.verify.out);
    c.finish();
  }
}

// The config file must be known before flags are parsed so that flag values
// override it.
std::string find_config(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw InvalidInput("--config requires a path");
      return args[i + 1];
    }
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return {};
}

json load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoFailure("cannot read config file " + path);
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    throw InvalidInput("config file " + path + " is not valid JSON: " + e.what());
  }
}

// ---------------------------------------------------------------- model

std::string model_gnuplot(const std::string& csv) {
  return "set datafile separator ','\n"
         "set key autotitle columnhead\n"
         "set xlabel 'r'\n"
         "plot '" + csv + "' using 1:2 with lines, '' using 1:4 with lines, '' using 1:6 with lines\n";
}

Outputs cmd_model(const GlobalOptions& g, const ModelOptions& o, std::ostream& out) {
  const auto model = KottlerModel::hyperbolic(o.mass, o.genus);
  const auto& h = model.horizon();
  if (!(o.r_max > h.radius)) {
    throw InvalidInput("--r-max must exceed the horizon radius " + number(h.radius));
  }
  const double m0 =
      std::isnan(o.comparison_mass) ? std::clamp(o.mass, critical_mass, 0.0) : o.comparison_mass;
  const PseudoRadialMap map(m0);
  const auto profile = kottler_area_profile(model, h.radius, o.r_max, o.points);
  const std::size_t n = profile.size();

  std::vector<double> scalar(n, nan), radial(n, nan), tangential(n, nan);
  const auto R = scalar_curvature(profile);
  for (std::size_t j = 0; j < R.index.size(); ++j) scalar[R.index[j]] = R.value[j];
  const auto st = static_residual_samples(profile);
  for (std::size_t j = 0; j < st.index.size(); ++j) {
    radial[st.index[j]] = st.radial[j];
    tangential[st.index[j]] = st.tangential[j];
  }

  Csv csv({"r", "u", "f", "W", "psi", "W0", "R_scalar", "static_residual_1", "static_residual_2"});
  double max_curvature = 0.0, max_static = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = profile.rho[i];
    const double u = profile.u[i];
    csv.row({r, u, model.metric_coefficient(r), profile.du[i] * profile.du[i],
             static_cast<double>(map.evaluate(u)), static_cast<double>(map.model_gradient(u)),
             scalar[i], radial[i], tangential[i]});
    if (!std::isnan(scalar[i])) max_curvature = std::max(max_curvature, std::abs(scalar[i] + 6.0));
    if (!std::isnan(radial[i])) {
      max_static = std::max({max_static, std::abs(radial[i]), std::abs(tangential[i])});
    }
  }

  json meta{{"command", "model"},
            {"horizon", horizon_json(model)},
            {"comparison_mass", m0},
            {"r_max", o.r_max},
            {"points", o.points},
            {"max_abs_R_plus_6", json_number(max_curvature)},
            {"max_abs_static_residual", json_number(max_static)}};

  Outputs files{{output_path(g, o.out, ".csv"), csv.str()}, {output_path(g, o.out, ".json"), dump(meta)}};
  if (o.gnuplot) files.emplace_back(output_path(g, o.out, ".gp"), model_gnuplot(o.out + ".csv"));
  out << "model m=" << number(o.mass) << " genus=" << o.genus << ": r_m=" << number(h.radius)
      << " k=" << number(h.surface_gravity) << (h.degenerate ? " (degenerate)" : "") << ", " << n
      << " samples\n";
  return files;
}

// ---------------------------------------------------------------- shoot

Outputs cmd_shoot(const GlobalOptions& g, const ShootOptions& o, std::ostream& out) {
  const auto seed = seed_from_surface_gravity(o.k, o.genus);
  ShotOptions so;
  so.ds_out = o.ds_out;
  const auto shot = integrate(seed, o.s_max, o.tol, so);
  const bool degenerate = shot.diagnostics.degenerate;

  const double oracle_mass = mass_from_surface_gravity(o.k);
  const auto model = KottlerModel::hyperbolic(oracle_mass, o.genus);
  const auto& p = shot.profile;

  Csv csv({"s", "u", "du", "rho", "drho", "lambda", "inferred_mass", "u_oracle", "rho_oracle"});
  double err_u = 0.0, err_rho = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    // Degenerate runs are compared in the null parameter, lambda = rho - r_h on Kottler.
    const double rho_oracle = degenerate ? model.horizon().radius + shot.null_parameter[i]
                                         : kottler_radius_at_arclength(model, p.grid[i]);
    const double u_oracle = model.potential(rho_oracle);
    err_u = std::max(err_u, std::abs(p.u[i] - u_oracle));
    err_rho = std::max(err_rho, std::abs(p.rho[i] - rho_oracle));
    csv.row({p.grid[i], p.u[i], p.du[i], p.rho[i], p.drho[i], shot.null_parameter[i],
             shot.inferred_mass[i], u_oracle, rho_oracle});
  }

  const auto& d = shot.diagnostics;
  json meta{{"command", "shoot"},
            {"seed",
             {{"kappa", sign(seed.kappa)},
              {"radius", seed.radius},
              {"surface_gravity", seed.surface_gravity},
              {"genus", seed.genus}}},
            {"s_max", o.s_max},
            {"tol", o.tol},
            {"degenerate", degenerate},
            {"inferred_mass", json_number(shot.mass)},
            {"oracle_mass", oracle_mass},
            {"mass_error", json_number(std::abs(shot.mass - oracle_mass))},
            {"sup_error_u", json_number(err_u)},
            {"sup_error_rho", json_number(err_rho)},
            {"diagnostics",
             {{"accepted_steps", d.accepted_steps},
              {"rejected_steps", d.rejected_steps},
              {"rhs_evaluations", d.rhs_evaluations},
              {"max_constraint", json_number(d.max_constraint)},
              {"mass_drift", json_number(d.mass_drift)},
              {"mass_consistent", d.mass_consistent},
              {"start_offset", d.start_offset}}}};
  try {
    const auto ci = conformal_infinity(shot);
    meta["conformal_infinity"] = {{"scale", ci.scale}, {"kappa_hat", ci.kappa_hat}};
  } catch (const TailTooShort& e) {
    meta["conformal_infinity"] = nullptr;
    meta["conformal_infinity_note"] = e.what();
  }

  Outputs files{{output_path(g, o.out, ".csv"), csv.str()}, {output_path(g, o.out, ".json"), dump(meta)}};
  if (o.gnuplot) {
    files.emplace_back(output_path(g, o.out, ".gp"),
                       "set datafile separator ','\nset key autotitle columnhead\nset xlabel 's'\n"
                       "plot '" + o.out + ".csv' using 1:2 with lines, '' using 1:4 with lines\n");
  }
  out << "shoot k=" << number(o.k) << (degenerate ? " (degenerate)" : "")
      << ": inferred mass " << number(shot.mass) << ", oracle " << number(oracle_mass)
      << ", sup error u " << number(err_u) << ", drift " << number(d.mass_drift) << "\n";
  return files;
}

// ---------------------------------------------------------------- sweep

Outputs sweep_masses(const GlobalOptions& g, const SweepOptions& o, std::ostream& out) {
  const auto masses = range("mass", o.mass_min, o.mass_max, o.mass_count);
  const auto m0s = range("comparison mass", o.m0_min, o.m0_max, o.m0_count);
  for (double m0 : m0s) {
    if (!(m0 >= critical_mass && m0 <= 0.0)) {
      throw InvalidInput("comparison masses must lie in [-1/(3 sqrt 3), 0]");
    }
  }
  for (double m : masses) KottlerModel::hyperbolic(m, o.genus);
  const std::size_t n = masses.size() * m0s.size();
  std::vector<std::vector<double>> rows(n);
  std::vector<bool> passed(n);
  parallel_for(n, g.threads, [&](std::size_t i) {
    const double m = masses[i / m0s.size()];
    const double m0 = m0s[i % m0s.size()];
    const auto model = KottlerModel::hyperbolic(m, o.genus);
    const double rm = model.horizon().radius;
    if (!(o.r_hi > rm)) throw InvalidInput("--r-hi must exceed every horizon radius");
    const auto annulus = kottler_area_profile(model, rm, o.r_hi, 64);
    auto div = divergence_identity_check(AnnulusSpec{annulus, rm * (1.0 + 1e-6), o.r_hi, m0});
    div.tolerance *= g.tolerance_scale;
    div.decide();
    const auto wide = kottler_area_profile(model, rm, std::max(50.0, o.r_hi), 1024);
    const auto grad = gradient_comparison(wide, m0, 1e-8 * g.tolerance_scale);
    rows[i] = {m, m0, static_cast<double>(o.genus), div.lhs, div.rhs, div.residual, grad.lhs};
    passed[i] = div.passed;
  });
  Csv csv({"mass", "comparison_mass", "genus", "divergence_lhs", "divergence_rhs",
           "divergence_residual", "divergence_passed", "sup_w_minus_w0"});
  std::size_t failures = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = rows[i];
    csv.row({number(r[0]), number(r[1]), number(r[2]), number(r[3]), number(r[4]), number(r[5]),
             passed[i] ? "1" : "0", number(r[6])});
    failures += passed[i] ? 0 : 1;
  }
  json meta{{"command", "sweep"}, {"kind", "mass"}, {"rows", n}, {"divergence_failures", failures}};
  out << "sweep mass x comparison mass: " << n << " rows, " << failures
      << " divergence checks outside tolerance\n";
  return {{output_path(g, o.out, ".csv"), csv.str()}, {output_path(g, o.out, ".json"), dump(meta)}};
}

Outputs sweep_genus(const GlobalOptions& g, const SweepOptions& o, std::ostream& out) {
  const auto ks = range("k", o.k_min, o.k_max, o.k_count);
  if (o.genus_min < 2 || o.genus_min > o.genus_max) {
    throw InvalidInput("empty genus range [" + std::to_string(o.genus_min) + ", " +
                       std::to_string(o.genus_max) + "] (genus must be >= 2)");
  }
  for (double k : ks) mass_from_surface_gravity(k);
  const std::size_t ng = static_cast<std::size_t>(o.genus_max - o.genus_min + 1);
  const std::size_t n = ks.size() * ng;
  std::vector<std::vector<double>> rows(n);
  parallel_for(n, g.threads, [&](std::size_t i) {
    const double k = ks[i / ng];
    const int genus = o.genus_min + static_cast<int>(i % ng);
    const double m = mass_from_surface_gravity(k);
    const double area = model_horizon_area(m, genus);
    const auto bound = area_bound_check(area, genus, m);
    const auto shot = integrate(seed_from_surface_gravity(k, genus), o.s_max, 1e-12);
    const double c = conformal_infinity(shot).scale;
    const double boundary = 4.0 * std::numbers::pi * (genus - 1) * c * c;
    const auto mono = mono_check(boundary, genus);
    rows[i] = {k, static_cast<double>(genus), m, area, bound.residual, boundary, mono.residual,
               mono.passed ? 1.0 : 0.0};
  });
  Csv csv({"k", "genus", "mass", "horizon_area", "area_bound_margin", "boundary_area",
           "mono_margin", "mono_passed"});
  for (const auto& r : rows) {
    csv.row({number(r[0]), std::to_string(static_cast<int>(r[1])), number(r[2]), number(r[3]),
             number(r[4]), number(r[5]), number(r[6]), r[7] != 0.0 ? "1" : "0"});
  }
  json meta{{"command", "sweep"}, {"kind", "genus"}, {"rows", n}};
  out << "sweep k x genus: " << n << " rows\n";
  return {{output_path(g, o.out, ".csv"), csv.str()}, {output_path(g, o.out, ".json"), dump(meta)}};
}

Outputs cmd_sweep(const GlobalOptions& g, const SweepOptions& o, std::ostream& out) {
  if (o.kind == "mass") return sweep_masses(g, o, out);
  if (o.kind == "genus") return sweep_genus(g, o, out);
  throw InvalidInput("--kind must be 'mass' or 'genus'");
}

// ---------------------------------------------------------------- verify-all

Outputs cmd_verify(const GlobalOptions& g, const VerifyOptions& o, std::ostream& out, bool& failed) {
  SuiteOptions so;
  so.tolerance_scale = g.tolerance_scale;
  so.only = o.only;
  so.threads = g.threads;
  const auto results = run_suite(so);

  json list = json::array();
  std::ostringstream table;
  char line[160];
  std::snprintf(line, sizeof line, "%-3s %-13s %-6s %7s %7s  %s\n", "id", "family", "status",
                "checks", "failed", "title");
  table << line;
  failed = false;
  for (const auto& c : results) {
    list.push_back(to_json(c));
    const auto bad = std::count_if(c.reports.begin(), c.reports.end(),
                                   [](const VerificationReport& r) { return !r.passed; });
    std::snprintf(line, sizeof line, "%-3d %-13s %-6s %7zu %7zu  %s\n", c.id, c.family.c_str(),
                  c.passed ? "PASS" : "FAIL", c.reports.size(), static_cast<std::size_t>(bad),
                  c.title.c_str());
    table << line;
    for (const auto& r : c.reports) {
      if (!r.passed) table << "      failed: " << r.name << " residual=" << number(r.residual) << "\n";
    }
    if (!c.error.empty()) table << "      error: " << c.error << "\n";
    failed = failed || !c.passed;
  }
  out << table.str();
  return {{output_path(g, o.out, ".json"), dump(list)}, {output_path(g, o.out, ".txt"), table.str()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    const std::string config = find_config(args);
    if (!config.empty()) apply_config(load_config(config), o);
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  }

  CLI::App app{"Numerical laboratory for static Kottler vacua with cosmological constant -3",
               "kottler-lab"};
  app.require_subcommand(1);
  app.fallthrough();
  auto& g = o.global;
  app.add_option("--out-dir", g.out_dir, "Directory for output files")->capture_default_str();
  app.add_option("--config", g.config, "JSON config file (flags override it)");
  app.add_option("--tolerance-scale", g.tolerance_scale, "Multiplier for verification tolerances")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for sweeps and the suite")
      ->capture_default_str();
  app.add_flag("--seedless", g.seedless, "Reserved; no random numbers are used, rejected if set");

  auto* model = app.add_subcommand("model", "Closed-form Kottler profile with diagnostics");
  auto& mo = o.model;
  model->add_option("--mass", mo.mass, "Mass parameter m (m >= -1/(3 sqrt 3))")->capture_default_str();
  model->add_option("--genus", mo.genus, "Genus of the cross-section (>= 2)")->capture_default_str();
  model->add_option("--r-max", mo.r_max, "Outer area radius")->capture_default_str();
  model->add_option("--points", mo.points, "Number of samples")->capture_default_str();
  model->add_option("--comparison-mass", mo.comparison_mass,
                    "Mass m0 of the comparison model for psi and W0 (default: m clamped to [m_crit, 0])");
  model->add_option("--out", mo.out, "Output file stem")->capture_default_str();
  model->add_flag("--gnuplot", mo.gnuplot, "Also write a gnuplot script");

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify->add_option("--only", o.verify.only, "Restrict to these criterion families");
  verify->add_option("--out", o.verify.out, "Output file stem")->capture_default_str();

  auto* shoot = app.add_subcommand("shoot", "Integrate the reduced system from a horizon seed");
  auto& so = o.shoot;
  shoot->add_option("--k", so.k, "Surface gravity in [0, 1]")->capture_default_str();
  shoot->add_option("--genus", so.genus, "Genus of the cross-section (>= 2)")->capture_default_str();
  shoot->add_option("--s-max", so.s_max, "Arclength to integrate to")->capture_default_str();
  shoot->add_option("--tol", so.tol, "Integrator tolerance (>= 1e-12)")->capture_default_str();
  shoot->add_option("--ds-out", so.ds_out, "Output spacing in arclength")->capture_default_str();
  shoot->add_option("--out", so.out, "Output file stem")->capture_default_str();
  shoot->add_flag("--gnuplot", so.gnuplot, "Also write a gnuplot script");

  auto* sweep = app.add_subcommand("sweep", "Parameter sweeps in long CSV format");
  auto& sw = o.sweep;
  sweep->add_option("--kind", sw.kind, "'mass' (mass x comparison mass) or 'genus' (k x genus)")
      ->capture_default_str();
  sweep->add_option("--mass-min", sw.mass_min)->capture_default_str();
  sweep->add_option("--mass-max", sw.mass_max)->capture_default_str();
  sweep->add_option("--mass-count", sw.mass_count)->capture_default_str();
  sweep->add_option("--m0-min", sw.m0_min)->capture_default_str();
  sweep->add_option("--m0-max", sw.m0_max)->capture_default_str();
  sweep->add_option("--m0-count", sw.m0_count)->capture_default_str();
  sweep->add_option("--genus", sw.genus, "Genus for mass sweeps")->capture_default_str();
  sweep->add_option("--r-hi", sw.r_hi, "Outer radius of the divergence annulus")->capture_default_str();
  sweep->add_option("--k-min", sw.k_min)->capture_default_str();
  sweep->add_option("--k-max", sw.k_max)->capture_default_str();
  sweep->add_option("--k-count", sw.k_count)->capture_default_str();
  sweep->add_option("--genus-min", sw.genus_min)->capture_default_str();
  sweep->add_option("--genus-max", sw.genus_max)->capture_default_str();
  sweep->add_option("--s-max", sw.s_max, "Shot length for genus sweeps")->capture_default_str();
  sweep->add_option("--out", sw.out, "Output file stem")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_invalid;
  }

  if (g.seedless) {
    err << "error: --seedless is reserved; no random number generator is used anywhere\n";
    return exit_invalid;
  }
  if (!(g.tolerance_scale > 0.0) || !std::isfinite(g.tolerance_scale)) {
    err << "error: --tolerance-scale must be positive and finite\n";
    return exit_invalid;
  }
  if (g.threads < 1) {
    err << "error: --threads must be >= 1\n";
    return exit_invalid;
  }

  bool verification_failed = false;
  try {
    Outputs files;
    if (model->parsed()) files = cmd_model(g, mo, out);
    if (shoot->parsed()) files = cmd_shoot(g, so, out);
    if (sweep->parsed()) files = cmd_sweep(g, sw, out);
    if (verify->parsed()) files = cmd_verify(g, o.verify, out, verification_failed);
    write_all(files);
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const MassOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const GridTooCoarse& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_integrator;
  }
  return verification_failed ? exit_verification_failed : exit_ok;
}

}  // namespace kottler::cli
