#include "commands.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "kepler/conic.hpp"
#include "kepler/error.hpp"
#include "kepler/io.hpp"
#include "kepler/orbit.hpp"
#include "kepler/shell.hpp"
#include "kepler/simulator.hpp"

namespace kepler::cli {

namespace {

constexpr double kRadiansPerDegree = std::numbers::pi / 180.0;

// geometry-check and shell-check pass/fail thresholds.
constexpr double kGeometryTolerance = 1e-9;
constexpr double kShellTolerance = 1e-6;
constexpr double kShellToleranceMinDistance = 1.5;  // in shell radii

// kepler3 acceptance window.
constexpr double kKepler3SlopeTolerance = 0.005;
constexpr double kKepler3PeriodTolerance = 1e-3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Launch and integration parameters, from flags and/or a JSON config file.
struct Scenario {
  std::optional<double> m;
  std::optional<double> r0;
  std::optional<double> v0;
  std::optional<double> alpha0;  // degrees
  std::optional<double> dt;
  std::optional<std::size_t> steps;
  std::optional<std::size_t> decimate;
  std::optional<std::string> out;
  std::string config;

  template <typename T>
  static void fill(std::optional<T>& field, const nlohmann::json& j, const char* key) {
    if (field || !j.contains(key)) return;
    try {
      field = j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("config key '") + key + "': " + e.what());
    }
  }

  /// Flags win over config-file values.
  void merge_config() {
    if (config.empty()) return;
    std::ifstream in(config);
    if (!in) throw UsageError("cannot open config file " + config);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("config file " + config + ": " + e.what());
    }
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    static const std::vector<std::string> kKeys{"m", "r0", "v0", "alpha0", "dt", "steps", "decimate", "out"};
    for (const auto& [key, value] : j.items()) {
      if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
        throw UsageError("unknown config key '" + key + "'");
      }
    }
    fill(m, j, "m");
    fill(r0, j, "r0");
    fill(v0, j, "v0");
    fill(alpha0, j, "alpha0");
    fill(dt, j, "dt");
    fill(steps, j, "steps");
    fill(decimate, j, "decimate");
    fill(out, j, "out");
  }

  template <typename T>
  static const T& require(const std::optional<T>& field, const char* name) {
    if (!field) throw UsageError(std::string("missing required value --") + name);
    return *field;
  }

  OrbitState launch_state() const {
    const double alpha = require(alpha0, "alpha0");
    if (!(alpha >= 0.0 && alpha <= 180.0)) throw UsageError("--alpha0 must be in degrees within (0, 180)");
    return OrbitState::from_launch(require(r0, "r0"), require(v0, "v0"), alpha * kRadiansPerDegree);
  }

  CentralField field() const { return CentralField(require(m, "m")); }

  SimConfig sim_config() const {
    SimConfig cfg;
    cfg.dt = require(dt, "dt");
    cfg.steps = require(steps, "steps");
    cfg.decimate = decimate.value_or(1);
    return cfg;
  }
};

void add_launch_options(CLI::App* cmd, Scenario& s) {
  cmd->add_option("--m", s.m, "field strength m in a = m / r^2");
  cmd->add_option("--r0", s.r0, "initial distance from the attractor");
  cmd->add_option("--v0", s.v0, "initial speed");
  cmd->add_option("--alpha0", s.alpha0, "launch angle from the outward radial line, degrees");
  cmd->add_option("--config", s.config, "JSON scenario file with the same keys as the flags");
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

int classify(const Scenario& s, std::ostream& out) {
  print_json(out, to_json(solve_orbit(s.launch_state(), s.field())));
  return kSuccess;
}

int simulate(const Scenario& s, std::ostream& out) {
  const std::string& path = Scenario::require(s.out, "out");
  const Trajectory trajectory = integrate(s.launch_state(), s.field(), s.sim_config());
  const DiagnosticsReport report = diagnostics(trajectory);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  write_trajectory_csv(file, trajectory);
  print_json(out, to_json(report));
  return kSuccess;
}

int kepler3(double m, std::size_t count, double x_min, double x_max, std::ostream& out) {
  const Kepler3Result result = run_kepler3(m, count, x_min, x_max);
  out << "X,T_formula,T_simulated,rel_error\n";
  bool ok = std::abs(result.slope - 1.5) <= kKepler3SlopeTolerance;
  for (const auto& row : result.rows) {
    out << format_g17(row.semi_major) << ',' << format_g17(row.period_formula) << ','
        << format_g17(row.period_simulated) << ',' << format_g17(row.rel_error) << '\n';
    ok = ok && row.rel_error <= kKepler3PeriodTolerance;
  }
  out << "# slope " << format_g17(result.slope) << '\n';
  return ok ? kSuccess : kCheckFailed;
}

int shell(double a, double mass, double g, double d, std::size_t rings, std::ostream& out) {
  const ShellCheck check = shell_check(ShellSpec(a, mass, g), d, RingDecomposition{rings});
  print_json(out, to_json(check));
  const bool applies = d >= kShellToleranceMinDistance * a;
  return (!applies || check.rel_error <= kShellTolerance) ? kSuccess : kCheckFailed;
}

int moon(std::ostream& out) {
  const MoonCheck mc = moon_check();
  const nlohmann::json j{
      {"R_moon", MoonCheck::kMoonOrbitRadius},
      {"T_moon", MoonCheck::kMoonPeriod},
      {"g_surface", MoonCheck::kSurfaceGravity},
      {"R_earth", MoonCheck::kEarthRadius},
      {"v", mc.speed},
      {"a", mc.accel},
      {"a_two_digits", mc.accel_two_digits},
      {"earth_ratio", mc.earth_product},
      {"moon_ratio", mc.moon_product},
      {"moon_ratio_unrounded", mc.moon_product_unrounded},
      {"checks",
       {{"v", mc.speed_ok},
        {"a", mc.accel_ok},
        {"earth_ratio", mc.earth_product_ok},
        {"moon_ratio", mc.moon_product_ok},
        {"ratios_agree", mc.products_agree}}},
      {"pass", mc.passed()},
  };
  print_json(out, j);
  return mc.passed() ? kSuccess : kCheckFailed;
}

int geometry(double e, double ell, std::size_t samples, std::ostream& out) {
  const ResidualReport report = geometry_residuals(ConicShape(e, ell), samples);
  print_json(out, to_json(report));
  return report.max_residual() <= kGeometryTolerance ? kSuccess : kCheckFailed;
}

bool within(double value, double reference, double rel) { return std::abs(value - reference) <= rel * std::abs(reference); }

}  // namespace

double round_to_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  const double magnitude = std::floor(std::log10(std::abs(value)));
  const double scale = std::pow(10.0, static_cast<double>(digits - 1) - magnitude);
  return std::round(value * scale) / scale;
}

MoonCheck moon_check() {
  MoonCheck mc;
  mc.speed = 2.0 * std::numbers::pi * MoonCheck::kMoonOrbitRadius / MoonCheck::kMoonPeriod;
  mc.accel = centripetal_accel(mc.speed, MoonCheck::kMoonOrbitRadius);
  mc.accel_two_digits = round_to_significant(mc.accel, 2);
  mc.earth_product = MoonCheck::kSurfaceGravity * MoonCheck::kEarthRadius * MoonCheck::kEarthRadius;
  mc.moon_product = mc.accel_two_digits * MoonCheck::kMoonOrbitRadius * MoonCheck::kMoonOrbitRadius;
  mc.moon_product_unrounded = mc.accel * MoonCheck::kMoonOrbitRadius * MoonCheck::kMoonOrbitRadius;

  mc.speed_ok = within(mc.speed, MoonCheck::kQuotedSpeed, 0.01);
  mc.accel_ok = within(mc.accel, MoonCheck::kQuotedAccel, 0.03);
  mc.earth_product_ok = within(mc.earth_product, MoonCheck::kQuotedEarthProduct, 0.01);
  mc.moon_product_ok = within(mc.moon_product, MoonCheck::kQuotedMoonProduct, 0.01);
  mc.products_agree = within(mc.moon_product, mc.earth_product, 0.01);
  return mc;
}

Kepler3Result run_kepler3(double m, std::size_t count, double x_min, double x_max) {
  if (count < 2) throw Error(ErrorKind::Argument, "kepler3 needs at least two orbits to fit a slope");
  if (!(x_min > 0.0 && x_max > x_min)) throw Error(ErrorKind::Argument, "need 0 < xmin < xmax");
  const CentralField field(m);

  auto simulate_one = [field, m](double x) {
    // r0 = X with v0^2 = m / X puts the launch on the minor-axis vertex; alpha0 = 60 deg gives e = 0.5.
    const OrbitState launch = OrbitState::from_launch(x, std::sqrt(m / x), std::numbers::pi / 3.0);
    const ConservedPair pair = conserved_from_state(launch, field);
    const double formula = period(pair, field);
    SimConfig cfg;
    cfg.dt = 1e-5 * formula;
    cfg.steps = static_cast<std::size_t>(std::ceil(2.2 * formula / cfg.dt));
    const Trajectory trajectory = integrate(launch, field, cfg);
    const DiagnosticsReport report = diagnostics(trajectory);
    if (!report.observed_period) throw Error(ErrorKind::NotApplicable, "no two periapsis passages observed");
    const double x_solved = *solve_orbit(pair, field).semi_major;
    return Kepler3Row{x_solved, formula, *report.observed_period,
                      std::abs(*report.observed_period - formula) / formula};
  };

  std::vector<std::future<Kepler3Row>> jobs;
  jobs.reserve(count);
  const double ratio = std::log(x_max / x_min);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = x_min * std::exp(ratio * static_cast<double>(i) / static_cast<double>(count - 1));
    jobs.push_back(std::async(std::launch::async, simulate_one, x));
  }

  Kepler3Result result;
  for (auto& job : jobs) result.rows.push_back(job.get());

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& row : result.rows) {
    mean_x += std::log(row.semi_major);
    mean_y += std::log(row.period_simulated);
  }
  mean_x /= static_cast<double>(count);
  mean_y /= static_cast<double>(count);
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& row : result.rows) {
    const double dx = std::log(row.semi_major) - mean_x;
    sxy += dx * (std::log(row.period_simulated) - mean_y);
    sxx += dx * dx;
  }
  result.slope = sxy / sxx;
  return result;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-body orbit toolkit: closed-form solutions, impulse-polygon simulation, geometric checks"};
  app.name("kepler");
  app.require_subcommand(1);

  Scenario scenario;
  auto* classify_cmd = app.add_subcommand("classify", "print the closed-form orbit for a launch state as JSON");
  add_launch_options(classify_cmd, scenario);

  auto* simulate_cmd = app.add_subcommand("simulate", "integrate a launch, write trajectory CSV, print diagnostics JSON");
  add_launch_options(simulate_cmd, scenario);
  simulate_cmd->add_option("--dt", scenario.dt, "time step");
  simulate_cmd->add_option("--steps", scenario.steps, "number of steps");
  simulate_cmd->add_option("--decimate", scenario.decimate, "store every k-th sample");
  simulate_cmd->add_option("--out", scenario.out, "trajectory CSV path");

  double k3_m = 1.0;
  std::size_t k3_count = 6;
  double k3_xmin = 0.5;
  double k3_xmax = 16.0;
  auto* kepler3_cmd = app.add_subcommand("kepler3", "fit period against semi-major axis over simulated orbits");
  kepler3_cmd->add_option("--m", k3_m, "field strength")->required();
  kepler3_cmd->add_option("--count", k3_count, "number of orbits")->required();
  kepler3_cmd->add_option("--xmin", k3_xmin, "smallest semi-major axis")->capture_default_str();
  kepler3_cmd->add_option("--xmax", k3_xmax, "largest semi-major axis")->capture_default_str();

  double shell_a = 0.0;
  double shell_mass = 0.0;
  double shell_g = 0.0;
  double shell_d = 0.0;
  std::size_t shell_rings = 10'000;
  auto* shell_cmd = app.add_subcommand("shell-check", "ring-quadrature shell attraction against g M / d^2");
  shell_cmd->add_option("--a", shell_a, "shell radius")->required();
  shell_cmd->add_option("--mass", shell_mass, "shell mass")->required();
  shell_cmd->add_option("--g", shell_g, "gravitational constant")->required();
  shell_cmd->add_option("--d", shell_d, "distance of the field point from the centre")->required();
  shell_cmd->add_option("--rings", shell_rings, "number of rings")->capture_default_str();

  auto* moon_cmd = app.add_subcommand("moon-check", "earth-moon inverse-square regression in SI units");

  double geo_e = 0.0;
  double geo_ell = 0.0;
  std::size_t geo_samples = 100;
  auto* geometry_cmd = app.add_subcommand("geometry-check", "focal, reflection and directrix residuals of a conic");
  geometry_cmd->add_option("--e", geo_e, "eccentricity")->required();
  geometry_cmd->add_option("--ell", geo_ell, "semi-latus rectum")->required();
  geometry_cmd->add_option("--samples", geo_samples, "number of sample points")->capture_default_str();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("kepler");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(storage.size());
  for (const auto& a : storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*classify_cmd || *simulate_cmd) scenario.merge_config();
    if (*classify_cmd) return classify(scenario, out);
    if (*simulate_cmd) return simulate(scenario, out);
    if (*kepler3_cmd) return kepler3(k3_m, k3_count, k3_xmin, k3_xmax, out);
    if (*shell_cmd) return shell(shell_a, shell_mass, shell_g, shell_d, shell_rings, out);
    if (*moon_cmd) return moon(out);
    if (*geometry_cmd) return geometry(geo_e, geo_ell, geo_samples, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << to_string(e.kind()) << " error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Argument ? kUsage : kNumeric;
  }
  return kUsage;
}

}  // namespace kepler::cli
