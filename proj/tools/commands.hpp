// Subcommands of the `kepler` tool, callable in-process.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace kepler::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kNumeric = 3,
};

/// argv without the program name, e.g. {"classify", "--m", "1", ...}.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Earth-moon inverse-square regression with SI constants.
struct MoonCheck {
  static constexpr double kMoonOrbitRadius = 3.85e8;    // m
  static constexpr double kMoonPeriod = 2'358'720.0;    // s (27.3 days)
  static constexpr double kSurfaceGravity = 9.8;        // m/s^2
  static constexpr double kEarthRadius = 6.367e6;       // m

  static constexpr double kQuotedSpeed = 1025.0;
  static constexpr double kQuotedAccel = 0.0027;
  static constexpr double kQuotedEarthProduct = 3.97e14;
  static constexpr double kQuotedMoonProduct = 4.00e14;

  double speed = 0.0;              // circumference / period
  double accel = 0.0;              // v^2 / R
  double accel_two_digits = 0.0;   // accel rounded to two significant figures
  double earth_product = 0.0;      // g R_earth^2
  double moon_product = 0.0;       // accel_two_digits R_moon^2
  double moon_product_unrounded = 0.0;

  bool speed_ok = false;           // within 1%
  bool accel_ok = false;           // within 3%
  bool earth_product_ok = false;   // within 1%
  bool moon_product_ok = false;    // within 1%
  bool products_agree = false;     // within 1% of each other

  bool passed() const { return speed_ok && accel_ok && earth_product_ok && moon_product_ok && products_agree; }
};

MoonCheck moon_check();

struct Kepler3Row {
  double semi_major = 0.0;
  double period_formula = 0.0;
  double period_simulated = 0.0;
  double rel_error = 0.0;
};

struct Kepler3Result {
  std::vector<Kepler3Row> rows;
  double slope = 0.0;  // least-squares slope of log T_simulated against log X
};

/// `count` similar e = 0.5 orbits with semi-major axes spaced geometrically over
/// [x_min, x_max], each integrated at dt = 1e-5 T for 2.2 periods. Scenarios run
/// concurrently; rows come back in order of X.
Kepler3Result run_kepler3(double m, std::size_t count, double x_min = 0.5, double x_max = 16.0);

double round_to_significant(double value, int digits);

}  // namespace kepler::cli
