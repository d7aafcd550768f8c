#include "kepler/io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

namespace kepler {

namespace {

nlohmann::json nullable(const std::optional<double>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

std::string_view focal_property(ConicClass c) {
  switch (c) {
    case ConicClass::Ellipse:
      return "focal_sum";
    case ConicClass::Hyperbola:
      return "focal_difference";
    default:
      return "directrix_equidistance";
  }
}

}  // namespace

nlohmann::json to_json(const OrbitSolution& solution) {
  return {
      {"class", to_string(solution.conic_class)},
      {"e", solution.shape.eccentricity()},
      {"ell", solution.shape.semi_latus_rectum()},
      {"aO", nullable(solution.focal_distance)},
      {"periapsis", solution.periapsis},
      {"apoapsis", nullable(solution.apoapsis)},
      {"semi_major", nullable(solution.semi_major)},
      {"semi_minor", nullable(solution.semi_minor)},
      {"period", nullable(solution.period)},
      {"C", solution.conserved.vis_viva},
      {"Q", solution.conserved.areal},
      {"m", solution.field_strength},
  };
}

nlohmann::json to_json(const DiagnosticsReport& report) {
  return {
      {"max_swept_area_deviation", report.max_swept_area_deviation},
      {"Q_drift", report.q_drift},
      {"C_drift", report.c_drift},
      {"csc2_max_residual", report.csc2_max_residual},
      {"observed_periapsis", nullable(report.observed_periapsis)},
      {"observed_apoapsis", nullable(report.observed_apoapsis)},
      {"observed_period", nullable(report.observed_period)},
  };
}

nlohmann::json to_json(const ResidualReport& report) {
  return {
      {"class", to_string(report.conic_class)},
      {"samples", report.samples},
      {"focal_property", focal_property(report.conic_class)},
      {"focal_residual", report.focal_residual},
      {"reflection_residual", report.reflection_residual},
      {"right_angle_residual", report.right_angle_residual},
      {"right_angle_not_applicable", report.right_angle_not_applicable},
  };
}

nlohmann::json to_json(const ShellCheck& check) {
  return {
      {"a", check.radius},         {"M", check.mass},         {"g", check.g},
      {"d", check.distance},       {"n_rings", check.rings},  {"computed", check.computed},
      {"exact", check.exact},      {"rel_error", check.rel_error},
      {"near_surface", check.near_surface},
  };
}

std::string format_g17(double value) {
  std::array<char, 32> buffer{};
  const int n = std::snprintf(buffer.data(), buffer.size(), "%.17g", value);
  return std::string(buffer.data(), static_cast<std::size_t>(n));
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
  constexpr double kDegrees = 180.0 / std::numbers::pi;
  out << kTrajectoryCsvHeader << '\n';
  for (const auto& s : trajectory.samples()) {
    const OrbitState state = s.state();
    const std::array<double, 8> row{
        s.t,
        s.position.x,
        s.position.y,
        s.velocity.x,
        s.velocity.y,
        state.radius(),
        state.speed(),
        state.launch_angle() * kDegrees,
    };
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out << ',';
      out << format_g17(row[i]);
    }
    out << '\n';
  }
}

}  // namespace kepler
