// Orbit determination under an inverse-square central acceleration m / r^2.
//
// Everything follows from two conserved quantities of the launch state:
//   C = v^2 - 2m/r           (vis-viva constant)
//   Q = r^2 v^2 sin^2(alpha) (areal constant, the squared cross product)
// The conic then has e = sqrt(QC + m^2) / m and semi-latus rectum ell = Q / m.
#pragma once

#include <optional>

#include "kepler/conic.hpp"
#include "kepler/vector.hpp"

namespace kepler {

/// |QC + m^2| <= kCircleTolerance * m^2 is classified as a circle.
inline constexpr double kCircleTolerance = 1e-12;
/// |C| <= kParabolaTolerance * m^2 / Q is classified as a parabola.
inline constexpr double kParabolaTolerance = 1e-12;

/// Position and velocity of the orbiting body; the attractor is at the origin.
struct OrbitState {
  PlanarVector position;
  PlanarVector velocity;

  /// Body on the +x axis at distance r, moving at speed v, alpha radians
  /// counterclockwise from the outward radial direction.
  static OrbitState from_launch(double r, double v, double alpha);

  double radius() const { return norm(position); }
  double speed() const { return norm(velocity); }
  /// Angle in [0, pi] between the outward radial ray and the velocity.
  double launch_angle() const;

  /// Throws Domain unless components are finite and r, v > 0.
  void validate() const;
};

/// Inverse-square field a(r) = m / r^2 directed at the origin.
class CentralField {
 public:
  explicit CentralField(double strength);

  double strength() const noexcept { return m_; }
  double magnitude_at(double r) const { return m_ / (r * r); }
  PlanarVector acceleration_at(const PlanarVector& position) const;

 private:
  double m_;
};

struct ConservedPair {
  double vis_viva = 0.0;  // C
  double areal = 0.0;     // Q

  /// Area swept per unit time, sqrt(Q) / 2.
  double sweep_rate() const;
  /// Time per unit swept area, the proportionality constant in T = k A.
  double area_constant() const { return 1.0 / sweep_rate(); }
};

struct Apsides {
  double periapsis = 0.0;
  std::optional<double> apoapsis;  // closed orbits only
};

struct OrbitSolution {
  ConicClass conic_class;
  ConicShape shape;
  std::optional<double> focal_distance;
  double periapsis;
  std::optional<double> apoapsis;
  std::optional<double> semi_major;
  std::optional<double> semi_minor;
  std::optional<double> period;
  ConservedPair conserved;
  double field_strength;
};

ConservedPair conserved_from_state(const OrbitState& state, const CentralField& field);

/// Throws Inconsistent if QC + m^2 is negative beyond tolerance, Degenerate if Q == 0.
ConicClass classify_orbit(const ConservedPair& pair, const CentralField& field);

/// Closed-form elements. Radial launches throw Degenerate.
OrbitSolution solve_orbit(const OrbitState& state, const CentralField& field);
OrbitSolution solve_orbit(const ConservedPair& pair, const CentralField& field);

/// Radii where csc^2(alpha) = 1. Uses the cancellation-free root Q / (m + sqrt(m^2 + CQ)).
Apsides apsides(const ConservedPair& pair, const CentralField& field);

/// 2 pi m / (-C)^{3/2}; throws Unbounded for C >= 0.
double period(const ConservedPair& pair, const CentralField& field);

/// (C/Q) r^2 + (2m/Q) r, restricted to the apsidal range.
double csc2_predicted(const ConservedPair& pair, const CentralField& field, double r);

/// Same polynomial without the range check, for comparing against noisy trajectories.
double csc2_predicted_unchecked(const ConservedPair& pair, const CentralField& field, double r);

double speed_at_radius(const ConservedPair& pair, const CentralField& field, double r);

/// m (1/r2 - 1/r1): area under a(r) = m/r^2 between the radii. Moving from r1
/// to r2 changes v^2 by twice this.
double energy_area(const CentralField& field, double r1, double r2);
double speed_squared_change(const CentralField& field, double r1, double r2);

/// Midpoint-rule sum of m/r^2 over [r2, r1] with the given panel count.
double energy_area_midpoint(const CentralField& field, double r1, double r2, std::size_t panels);

/// v^2 / R for uniform circular motion.
double centripetal_accel(double v, double radius);

}  // namespace kepler
