#include "kepler/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kepler/error.hpp"

namespace kepler {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

// Relative slack for range checks against computed apsides.
constexpr double kRangeSlack = 1e-9;

void require_positive_radius(double r, const char* what) {
  if (!std::isfinite(r) || !(r > 0.0)) {
    std::ostringstream os;
    os << what << " must be finite and positive, got " << r;
    fail(ErrorKind::Domain, os.str());
  }
}

void require_areal(const ConservedPair& pair) {
  if (!(pair.areal > 0.0)) {
    fail(ErrorKind::Degenerate, "Q = 0: radial launch gives rectilinear motion, not a conic");
  }
}

}  // namespace

OrbitState OrbitState::from_launch(double r, double v, double alpha) {
  OrbitState state{{r, 0.0}, {v * std::cos(alpha), v * std::sin(alpha)}};
  state.validate();
  return state;
}

double OrbitState::launch_angle() const {
  return std::atan2(std::abs(cross(position, velocity)), dot(position, velocity));
}

void OrbitState::validate() const {
  if (!is_finite(position) || !is_finite(velocity)) fail(ErrorKind::Domain, "state has non-finite components");
  if (!(radius() > 0.0)) fail(ErrorKind::Domain, "body sits on the attractor (r = 0)");
  if (!(speed() > 0.0)) fail(ErrorKind::Domain, "state has zero speed");
}

CentralField::CentralField(double strength) : m_(strength) {
  if (!std::isfinite(m_) || !(m_ > 0.0)) {
    std::ostringstream os;
    os << "field strength m must be finite and positive, got " << m_;
    fail(ErrorKind::Domain, os.str());
  }
}

PlanarVector CentralField::acceleration_at(const PlanarVector& position) const {
  const double r = norm(position);
  return position * (-m_ / (r * r * r));
}

double ConservedPair::sweep_rate() const { return std::sqrt(areal) / 2.0; }

ConservedPair conserved_from_state(const OrbitState& state, const CentralField& field) {
  state.validate();
  const double r = state.radius();
  const double h = cross(state.position, state.velocity);
  return {dot(state.velocity, state.velocity) - 2.0 * field.strength() / r, h * h};
}

ConicClass classify_orbit(const ConservedPair& pair, const CentralField& field) {
  require_areal(pair);
  const double m = field.strength();
  const double m2 = m * m;
  const double discriminant = pair.areal * pair.vis_viva + m2;
  if (discriminant < -kCircleTolerance * m2) {
    std::ostringstream os;
    os << "QC + m^2 = " << discriminant << " < 0; no real state has these constants";
    fail(ErrorKind::Inconsistent, os.str());
  }
  if (std::abs(discriminant) <= kCircleTolerance * m2) return ConicClass::Circle;
  if (std::abs(pair.vis_viva) <= kParabolaTolerance * m2 / pair.areal) return ConicClass::Parabola;
  return pair.vis_viva < 0.0 ? ConicClass::Ellipse : ConicClass::Hyperbola;
}

Apsides apsides(const ConservedPair& pair, const CentralField& field) {
  const ConicClass cls = classify_orbit(pair, field);
  const double m = field.strength();
  const double root = std::sqrt(std::max(0.0, pair.areal * pair.vis_viva + m * m));
  Apsides out{pair.areal / (m + root), std::nullopt};
  switch (cls) {
    case ConicClass::Circle:
      out.apoapsis = out.periapsis;
      break;
    case ConicClass::Ellipse:
      out.apoapsis = (m + root) / -pair.vis_viva;
      break;
    default:
      break;
  }
  return out;
}

double period(const ConservedPair& pair, const CentralField& field) {
  const ConicClass cls = classify_orbit(pair, field);
  if (cls == ConicClass::Parabola || cls == ConicClass::Hyperbola) {
    std::ostringstream os;
    os << "C = " << pair.vis_viva << " >= 0: open orbit has no period";
    fail(ErrorKind::Unbounded, os.str());
  }
  return 2.0 * std::numbers::pi * field.strength() / std::pow(-pair.vis_viva, 1.5);
}

OrbitSolution solve_orbit(const ConservedPair& pair, const CentralField& field) {
  const ConicClass cls = classify_orbit(pair, field);
  const double m = field.strength();
  const double q = pair.areal;
  const double c = pair.vis_viva;
  const double discriminant = std::max(0.0, q * c + m * m);

  double e = std::sqrt(discriminant) / m;
  if (cls == ConicClass::Circle) e = 0.0;
  if (cls == ConicClass::Parabola) e = 1.0;

  const Apsides ap = apsides(pair, field);
  OrbitSolution sol{
      cls,           ConicShape(e, q / m), std::nullopt, ap.periapsis, ap.apoapsis, std::nullopt,
      std::nullopt,  std::nullopt,         pair,         m,
  };
  if (e > 0.0) sol.focal_distance = q / std::sqrt(discriminant);
  if (cls == ConicClass::Circle || cls == ConicClass::Ellipse) {
    sol.semi_major = m / -c;
    sol.semi_minor = std::sqrt(q / -c);
    sol.period = period(pair, field);
  }
  return sol;
}

OrbitSolution solve_orbit(const OrbitState& state, const CentralField& field) {
  state.validate();
  const double h = cross(state.position, state.velocity);
  if (std::abs(h) <= 1e-12 * state.radius() * state.speed()) {
    fail(ErrorKind::Degenerate, "launch angle is 0 or 180 degrees; radial motion is not a conic orbit");
  }
  return solve_orbit(conserved_from_state(state, field), field);
}

double csc2_predicted_unchecked(const ConservedPair& pair, const CentralField& field, double r) {
  return (pair.vis_viva / pair.areal) * r * r + (2.0 * field.strength() / pair.areal) * r;
}

double csc2_predicted(const ConservedPair& pair, const CentralField& field, double r) {
  require_positive_radius(r, "radius");
  const Apsides ap = apsides(pair, field);
  const bool below = r < ap.periapsis * (1.0 - kRangeSlack);
  const bool above = ap.apoapsis && r > *ap.apoapsis * (1.0 + kRangeSlack);
  if (below || above) {
    std::ostringstream os;
    os << "radius " << r << " outside the apsidal range [" << ap.periapsis << ", ";
    if (ap.apoapsis) {
      os << *ap.apoapsis;
    } else {
      os << "inf";
    }
    os << "]";
    fail(ErrorKind::Domain, os.str());
  }
  return csc2_predicted_unchecked(pair, field, r);
}

double speed_at_radius(const ConservedPair& pair, const CentralField& field, double r) {
  require_positive_radius(r, "radius");
  const double potential = 2.0 * field.strength() / r;
  const double v2 = pair.vis_viva + potential;
  if (v2 < -kRangeSlack * potential) {
    std::ostringstream os;
    os << "radius " << r << " is beyond the turning point for C = " << pair.vis_viva;
    fail(ErrorKind::Unreachable, os.str());
  }
  return std::sqrt(std::max(0.0, v2));
}

double energy_area(const CentralField& field, double r1, double r2) {
  require_positive_radius(r1, "r1");
  require_positive_radius(r2, "r2");
  return field.strength() * (1.0 / r2 - 1.0 / r1);
}

double speed_squared_change(const CentralField& field, double r1, double r2) {
  return 2.0 * energy_area(field, r1, r2);
}

double energy_area_midpoint(const CentralField& field, double r1, double r2, std::size_t panels) {
  require_positive_radius(r1, "r1");
  require_positive_radius(r2, "r2");
  if (panels == 0) fail(ErrorKind::Argument, "quadrature needs at least one panel");
  const double width = (r1 - r2) / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    sum += field.magnitude_at(r2 + (static_cast<double>(i) + 0.5) * width);
  }
  return sum * width;
}

double centripetal_accel(double v, double radius) {
  require_positive_radius(radius, "radius");
  if (!std::isfinite(v) || v < 0.0) fail(ErrorKind::Domain, "speed must be finite and non-negative");
  return v * v / radius;
}

}  // namespace kepler
