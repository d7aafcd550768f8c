#include "kepler/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kepler/error.hpp"

namespace kepler {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

OrbitState kick_drift(const OrbitState& state, const CentralField& field, double dt, double collision_radius,
                      std::size_t step_index) {
  const double r = norm(state.position);
  if (!(r >= collision_radius)) {
    std::ostringstream os;
    os << "collision with the attractor at step " << step_index << " (r = " << r << ")";
    throw CollisionError(step_index, r, os.str());
  }
  const double impulse = field.strength() * dt / (r * r * r);
  const PlanarVector velocity = state.velocity - impulse * state.position;
  return {state.position + velocity * dt, velocity};
}

double csc2_of_state(const OrbitState& state) {
  const double h = cross(state.position, state.velocity);
  return dot(state.position, state.position) * dot(state.velocity, state.velocity) / (h * h);
}

}  // namespace

void SimConfig::validate() const {
  if (!std::isfinite(dt) || !(dt > 0.0)) fail(ErrorKind::Argument, "dt must be finite and positive");
  if (steps < 1) fail(ErrorKind::Argument, "steps must be at least 1");
  if (steps > max_steps) {
    std::ostringstream os;
    os << "steps = " << steps << " exceeds the cap of " << max_steps;
    fail(ErrorKind::Argument, os.str());
  }
  if (decimate < 1) fail(ErrorKind::Argument, "decimation factor must be at least 1");
  if (!(collision_radius >= 0.0)) fail(ErrorKind::Argument, "collision radius must be non-negative");
}

Trajectory::Trajectory(std::vector<TrajectorySample> samples, CentralField field, SimConfig config)
    : samples_(std::move(samples)), field_(field), config_(config) {}

OrbitState step(const OrbitState& state, const CentralField& field, double dt, double collision_radius) {
  return kick_drift(state, field, dt, collision_radius, 0);
}

Trajectory integrate(const OrbitState& state, const CentralField& field, const SimConfig& config) {
  config.validate();
  state.validate();

  std::vector<TrajectorySample> samples;
  samples.reserve(config.steps / config.decimate + 1);
  samples.push_back({0.0, state.position, state.velocity});

  OrbitState current = state;
  for (std::size_t k = 1; k <= config.steps; ++k) {
    current = kick_drift(current, field, config.dt, config.collision_radius, k);
    if (k % config.decimate == 0) {
      samples.push_back({static_cast<double>(k) * config.dt, current.position, current.velocity});
    }
  }
  return Trajectory(std::move(samples), field, config);
}

std::vector<double> swept_areas(const Trajectory& trajectory) {
  if (trajectory.config().decimate != 1) {
    fail(ErrorKind::NotApplicable, "swept areas are only exact per elementary step; trajectory is decimated");
  }
  if (trajectory.size() < 2) fail(ErrorKind::Argument, "swept areas need at least two samples");
  const auto samples = trajectory.samples();
  std::vector<double> areas;
  areas.reserve(samples.size() - 1);
  const double dt = trajectory.config().dt;
  // The chord x_{k+1} - x_k is the drift segment v_{k+1} dt. Differencing the
  // stored vertices instead would cancel ~4 digits at |x| / |chord| ~ 1e4.
  for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
    const PlanarVector chord = samples[k + 1].velocity * dt;
    areas.push_back(0.5 * std::abs(cross(samples[k].position, chord)));
  }
  return areas;
}

ApsisEvents detect_apsides(const Trajectory& trajectory) {
  ApsisEvents events;
  const auto samples = trajectory.samples();
  if (samples.size() < 3) return events;
  const double spacing = trajectory.sample_spacing();

  std::vector<double> radius(samples.size());
  std::transform(samples.begin(), samples.end(), radius.begin(),
                 [](const TrajectorySample& s) { return norm(s.position); });

  for (std::size_t k = 1; k + 1 < radius.size(); ++k) {
    const double before = radius[k] - radius[k - 1];
    const double after = radius[k + 1] - radius[k];
    const bool minimum = before < 0.0 && after >= 0.0;
    const bool maximum = before > 0.0 && after <= 0.0;
    if (!minimum && !maximum) continue;

    Extremum ext{samples[k].t, radius[k]};
    const double curvature = radius[k - 1] - 2.0 * radius[k] + radius[k + 1];
    if (curvature != 0.0) {
      const double slope = radius[k + 1] - radius[k - 1];
      const double offset = -slope / (2.0 * curvature);
      if (std::abs(offset) <= 1.0) {
        ext.t += offset * spacing;
        ext.r -= slope * slope / (8.0 * curvature);
      }
    }
    (minimum ? events.periapses : events.apoapses).push_back(ext);
  }
  return events;
}

double max_vis_viva_drift(const Trajectory& trajectory) {
  const CentralField& field = trajectory.field();
  const ConservedPair initial = conserved_from_state(trajectory.front().state(), field);
  double scale = std::abs(initial.vis_viva);
  const double potential = 2.0 * field.strength() / trajectory.front().state().radius();
  if (scale <= kParabolaTolerance * potential) scale = potential;
  double drift = 0.0;
  for (const auto& s : trajectory.samples()) {
    const double c = conserved_from_state(s.state(), field).vis_viva;
    drift = std::max(drift, std::abs(c - initial.vis_viva) / scale);
  }
  return drift;
}

DiagnosticsReport diagnostics(const Trajectory& trajectory) {
  if (trajectory.size() < 10) fail(ErrorKind::Argument, "diagnostics need at least 10 samples");
  const CentralField& field = trajectory.field();
  const OrbitState launch = trajectory.front().state();
  const ConservedPair initial = conserved_from_state(launch, field);
  // Same cut as solve_orbit: sin(180 deg) is 1.2e-16, not 0.
  if (std::abs(cross(launch.position, launch.velocity)) <= 1e-12 * launch.radius() * launch.speed()) {
    fail(ErrorKind::Degenerate, "radial launch: areal constant is zero");
  }

  DiagnosticsReport report;
  report.c_drift = max_vis_viva_drift(trajectory);
  for (const auto& s : trajectory.samples()) {
    const OrbitState state = s.state();
    const ConservedPair pair = conserved_from_state(state, field);
    report.q_drift = std::max(report.q_drift, std::abs(pair.areal - initial.areal) / initial.areal);
    const double predicted = csc2_predicted_unchecked(initial, field, state.radius());
    report.csc2_max_residual = std::max(report.csc2_max_residual, std::abs(csc2_of_state(state) - predicted));
  }

  if (trajectory.config().decimate == 1) {
    const std::vector<double> areas = swept_areas(trajectory);
    const double reference = areas.front();
    for (double a : areas) {
      report.max_swept_area_deviation = std::max(report.max_swept_area_deviation, std::abs(a - reference) / reference);
    }
  }

  const ApsisEvents events = detect_apsides(trajectory);
  report.periapsis_passages = events.periapses.size();
  report.apoapsis_passages = events.apoapses.size();
  if (!events.periapses.empty()) {
    report.observed_periapsis =
        std::min_element(events.periapses.begin(), events.periapses.end(),
                         [](const Extremum& a, const Extremum& b) { return a.r < b.r; })
            ->r;
  }
  if (!events.apoapses.empty()) {
    report.observed_apoapsis =
        std::max_element(events.apoapses.begin(), events.apoapses.end(),
                         [](const Extremum& a, const Extremum& b) { return a.r < b.r; })
            ->r;
  }
  if (events.periapses.size() >= 2) {
    const double span = events.periapses.back().t - events.periapses.front().t;
    report.observed_period = span / static_cast<double>(events.periapses.size() - 1);
  }
  return report;
}

double uniform_accel_displacement(double accel, double duration) {
  if (!(duration >= 0.0)) fail(ErrorKind::Domain, "duration must be non-negative");
  return 0.5 * accel * duration * duration;
}

double uniform_accel_displacement_sum(double accel, double duration, std::size_t panels) {
  if (!(duration >= 0.0)) fail(ErrorKind::Domain, "duration must be non-negative");
  if (panels == 0) fail(ErrorKind::Argument, "need at least one panel");
  const double width = duration / static_cast<double>(panels);
  double distance = 0.0;
  for (std::size_t k = 1; k <= panels; ++k) {
    distance += accel * (static_cast<double>(k) * width) * width;
  }
  return distance;
}

}  // namespace kepler
