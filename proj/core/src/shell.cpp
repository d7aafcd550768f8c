#include "kepler/shell.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kepler/error.hpp"

namespace kepler {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

void require_positive(double value, const char* what) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    std::ostringstream os;
    os << what << " must be finite and positive, got " << value;
    fail(ErrorKind::Domain, os.str());
  }
}

void require_outside(double radius, double distance) {
  if (!std::isfinite(distance) || !(distance > radius)) {
    std::ostringstream os;
    os << "field point at d = " << distance << " is not outside radius " << radius
       << "; only exterior points are supported";
    fail(ErrorKind::Domain, os.str());
  }
}

double thin_ring_area(double radius, double theta, double width) {
  return 2.0 * std::numbers::pi * (radius * std::sin(theta)) * width;
}

}  // namespace

ShellSpec::ShellSpec(double radius, double mass, double g) : radius_(radius), mass_(mass), g_(g) {
  require_positive(radius_, "shell radius");
  require_positive(mass_, "shell mass");
  require_positive(g_, "g");
}

double ShellSpec::surface_density() const {
  return mass_ / (4.0 * std::numbers::pi * radius_ * radius_);
}

double ring_area(double radius, double theta, double width) {
  require_positive(radius, "radius");
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) fail(ErrorKind::Domain, "polar angle must lie in [0, pi]");
  if (!(width > 0.0)) fail(ErrorKind::Domain, "ring width must be positive");
  if (width >= radius) fail(ErrorKind::Domain, "thin-ring approximation needs width much smaller than radius");
  return thin_ring_area(radius, theta, width);
}

double shell_accel(const ShellSpec& shell, double distance, RingDecomposition rings) {
  require_outside(shell.radius(), distance);
  if (rings.rings < 1) fail(ErrorKind::Argument, "need at least one ring");

  const double a = shell.radius();
  const double d = distance;
  const double step = std::numbers::pi / static_cast<double>(rings.rings);
  const double width = a * step;
  const double density = shell.g() * shell.surface_density();

  // Only the component along the axis survives: each ring is symmetric about it.
  double total = 0.0;
  for (std::size_t i = 0; i < rings.rings; ++i) {
    const double theta = (static_cast<double>(i) + 0.5) * step;
    const double c = std::cos(theta);
    const double s2 = d * d + a * a - 2.0 * a * d * c;
    const double s = std::sqrt(s2);
    total += density * thin_ring_area(a, theta, width) / s2 * ((d - a * c) / s);
  }
  return total;
}

double sphere_accel(double radius, double mass, double g, double distance, std::size_t shells,
                    RingDecomposition rings) {
  require_positive(radius, "sphere radius");
  require_positive(mass, "sphere mass");
  require_positive(g, "g");
  require_outside(radius, distance);
  if (shells < 1) fail(ErrorKind::Argument, "need at least one shell");

  const double thickness = radius / static_cast<double>(shells);
  const double volume = radius * radius * radius;
  double total = 0.0;
  for (std::size_t i = 0; i < shells; ++i) {
    const double inner = static_cast<double>(i) * thickness;
    const double outer = static_cast<double>(i + 1) * thickness;
    const double fraction = (outer * outer * outer - inner * inner * inner) / volume;
    const ShellSpec shell(0.5 * (inner + outer), mass * fraction, g);
    total += shell_accel(shell, distance, rings);
  }
  return total;
}

double point_mass_accel(double gm, double distance) {
  require_positive(gm, "gM");
  require_positive(distance, "distance");
  return gm / (distance * distance);
}

ShellCheck shell_check(const ShellSpec& shell, double distance, RingDecomposition rings) {
  ShellCheck out;
  out.radius = shell.radius();
  out.mass = shell.mass();
  out.g = shell.g();
  out.distance = distance;
  out.rings = rings.rings;
  out.computed = shell_accel(shell, distance, rings);
  out.exact = point_mass_accel(shell.g() * shell.mass(), distance);
  out.rel_error = std::abs(out.computed - out.exact) / out.exact;
  out.near_surface = distance < 1.1 * shell.radius();
  return out;
}

}  // namespace kepler
