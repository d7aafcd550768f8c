// Impulse-polygon integration of motion about a fixed attractor.
//
// Each step applies an instantaneous velocity impulse toward the attractor,
// sized by the acceleration at the current vertex, then drifts in a straight
// line for dt:
//
//     v' = v + a(x) dt,    x' = x + v' dt.
//
// Every impulse is parallel to the focal radius, so cross(x, v) is preserved
// exactly and consecutive drift triangles sweep identical areas.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kepler/orbit.hpp"
#include "kepler/vector.hpp"

namespace kepler {

struct SimConfig {
  double dt = 1e-4;
  std::size_t steps = 1;
  /// Record every k-th sample. Anything above 1 disables swept_areas.
  std::size_t decimate = 1;
  std::size_t max_steps = 100'000'000;
  double collision_radius = 1e-9;

  void validate() const;
};

/// velocity is the drift velocity that carried the body into position; at t = 0
/// it is the launch velocity.
struct TrajectorySample {
  double t = 0.0;
  PlanarVector position;
  PlanarVector velocity;

  OrbitState state() const { return {position, velocity}; }
};

class Trajectory {
 public:
  Trajectory(std::vector<TrajectorySample> samples, CentralField field, SimConfig config);

  std::span<const TrajectorySample> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  const TrajectorySample& operator[](std::size_t i) const { return samples_[i]; }
  const TrajectorySample& front() const { return samples_.front(); }
  const TrajectorySample& back() const { return samples_.back(); }
  const CentralField& field() const noexcept { return field_; }
  const SimConfig& config() const noexcept { return config_; }
  /// Time between consecutive stored samples.
  double sample_spacing() const noexcept { return config_.dt * static_cast<double>(config_.decimate); }

 private:
  std::vector<TrajectorySample> samples_;
  CentralField field_;
  SimConfig config_;
};

/// One kick-then-drift step. Throws CollisionError if r < collision_radius.
OrbitState step(const OrbitState& state, const CentralField& field, double dt, double collision_radius = 1e-9);

/// Runs config.steps steps from state; sample k sits at t = k dt.
Trajectory integrate(const OrbitState& state, const CentralField& field, const SimConfig& config);

/// Per-step triangle areas 1/2 |cross(x_k, x_{k+1} - x_k)|, with the chord taken as the
/// drift segment v_{k+1} dt. Needs an undecimated trajectory.
std::vector<double> swept_areas(const Trajectory& trajectory);

struct DiagnosticsReport {
  double max_swept_area_deviation = 0.0;  // relative to the first area; 0 if decimated
  double q_drift = 0.0;                   // relative
  double c_drift = 0.0;                   // relative
  double csc2_max_residual = 0.0;
  std::optional<double> observed_periapsis;
  std::optional<double> observed_apoapsis;
  std::optional<double> observed_period;
  std::size_t periapsis_passages = 0;
  std::size_t apoapsis_passages = 0;
};

struct Extremum {
  double t = 0.0;
  double r = 0.0;
};

struct ApsisEvents {
  std::vector<Extremum> periapses;
  std::vector<Extremum> apoapses;
};

/// Sign changes of the discrete radial rate, refined by a parabola through the
/// three samples around each turning point.
ApsisEvents detect_apsides(const Trajectory& trajectory);

DiagnosticsReport diagnostics(const Trajectory& trajectory);

/// Relative drift of C over the trajectory. Uses 2m/r0 as the scale when C0 = 0.
double max_vis_viva_drift(const Trajectory& trajectory);

/// Distance covered from rest under constant acceleration: a T^2 / 2.
double uniform_accel_displacement(double accel, double duration);

/// Same distance built from `panels` equal intervals, each travelled at the
/// speed reached by its end: sum a (k T/N)(T/N) = a T^2 (N + 1) / (2N).
double uniform_accel_displacement_sum(double accel, double duration, std::size_t panels);

}  // namespace kepler
