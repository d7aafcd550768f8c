#include "kepler/conic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kepler/error.hpp"

namespace kepler {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Fraction of the open-branch half-width that sample_points covers. Keeps the
// farthest samples at a few tens of ell instead of running out to the asymptote.
constexpr double kBranchCoverage = 0.9;

// Slack on csc^2 >= 1 before a radius is declared off the conic.
constexpr double kCsc2Slack = 1e-9;

[[noreturn]] void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace

std::string_view to_string(ConicClass c) noexcept {
  switch (c) {
    case ConicClass::Circle:
      return "circle";
    case ConicClass::Ellipse:
      return "ellipse";
    case ConicClass::Parabola:
      return "parabola";
    case ConicClass::Hyperbola:
      return "hyperbola";
  }
  return "unknown";
}

ConicClass classify_eccentricity(double e) {
  if (!std::isfinite(e) || e < 0.0) {
    std::ostringstream os;
    os << "eccentricity must be finite and non-negative, got " << e;
    fail(ErrorKind::Domain, os.str());
  }
  if (e == 0.0) return ConicClass::Circle;
  if (e < 1.0) return ConicClass::Ellipse;
  if (e == 1.0) return ConicClass::Parabola;
  return ConicClass::Hyperbola;
}

ConicShape::ConicShape(double eccentricity, double semi_latus_rectum)
    : e_(eccentricity), ell_(semi_latus_rectum) {
  classify_eccentricity(e_);
  if (!std::isfinite(ell_) || ell_ <= 0.0) {
    std::ostringstream os;
    os << "semi-latus rectum must be finite and positive, got " << ell_;
    fail(ErrorKind::Domain, os.str());
  }
}

ConicShape ConicShape::from_focal(double eccentricity, double focal_distance) {
  if (!(eccentricity > 0.0)) fail(ErrorKind::Domain, "focal form needs e > 0; a circle has no directrix");
  if (!std::isfinite(focal_distance) || focal_distance <= 0.0) {
    fail(ErrorKind::Domain, "focus-directrix distance must be finite and positive");
  }
  return ConicShape(eccentricity, eccentricity * focal_distance);
}

std::optional<double> ConicShape::focal_distance() const {
  if (e_ == 0.0) return std::nullopt;
  return ell_ / e_;
}

std::optional<double> ConicShape::apoapsis() const {
  if (e_ >= 1.0) return std::nullopt;
  return ell_ / (1.0 - e_);
}

double radius_at_angle(const ConicShape& shape, double theta) {
  const double denominator = 1.0 - shape.eccentricity() * std::sin(theta);
  if (!(denominator > 0.0)) {
    std::ostringstream os;
    os << "no point of the " << to_string(shape.conic_class()) << " at theta = " << theta
       << " rad (1 - e sin(theta) = " << denominator << ")";
    fail(ErrorKind::NoSuchPoint, os.str());
  }
  return shape.semi_latus_rectum() / denominator;
}

double csc2_alpha(const ConicShape& shape, double r) {
  const double e = shape.eccentricity();
  const double ell = shape.semi_latus_rectum();
  const double value = ((e * e - 1.0) / (ell * ell)) * r * r + (2.0 / ell) * r;
  if (!(r > 0.0) || !(value >= 1.0 - kCsc2Slack)) {
    std::ostringstream os;
    os << "radius " << r << " is off the conic; valid range is [" << shape.periapsis() << ", ";
    if (auto apo = shape.apoapsis()) {
      os << *apo;
    } else {
      os << "inf";
    }
    os << "]";
    fail(ErrorKind::Domain, os.str());
  }
  return value;
}

EllipseAxes axes_from_focal(double e, double focal_distance) {
  if (!(e > 0.0 && e < 1.0)) {
    std::ostringstream os;
    os << "axes need an ellipse (0 < e < 1), got e = " << e;
    fail(ErrorKind::NotAnEllipse, os.str());
  }
  if (!std::isfinite(focal_distance) || focal_distance <= 0.0) {
    fail(ErrorKind::Domain, "focus-directrix distance must be finite and positive");
  }
  // Extended precision so X and Y each carry a single rounding; near e = 0 the
  // inverse map amplifies input error by roughly 1/e^2.
  const long double le = e;
  const long double ell = static_cast<long double>(focal_distance) * le;
  const long double one_minus_e2 = (1.0L - le) * (1.0L + le);
  return {static_cast<double>(ell / one_minus_e2), static_cast<double>(ell / std::sqrt(one_minus_e2))};
}

FocalParameters focal_from_axes(const EllipseAxes& axes) {
  const double x = axes.semi_major;
  const double y = axes.semi_minor;
  if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0)) {
    fail(ErrorKind::Domain, "ellipse axes must be finite and positive");
  }
  if (x < y) {
    std::ostringstream os;
    os << "semi-major " << x << " is shorter than semi-minor " << y << "; arguments swapped?";
    fail(ErrorKind::Argument, os.str());
  }
  if (x == y) return {0.0, std::nullopt};
  const long double lx = x;
  const long double ly = y;
  const long double focal_half = std::sqrt((lx - ly) * (lx + ly));
  return {static_cast<double>(focal_half / lx), static_cast<double>(ly * ly / focal_half)};
}

double ellipse_area(double e, double focal_distance) {
  if (e >= 1.0) fail(ErrorKind::Unbounded, "an open conic encloses no finite area");
  if (!(e > 0.0)) fail(ErrorKind::NotAnEllipse, "focal area form needs 0 < e < 1");
  if (!std::isfinite(focal_distance) || focal_distance <= 0.0) {
    fail(ErrorKind::Domain, "focus-directrix distance must be finite and positive");
  }
  const double one_minus_e2 = (1.0 - e) * (1.0 + e);
  return std::numbers::pi * focal_distance * focal_distance * e * e / std::pow(one_minus_e2, 1.5);
}

PlanarVector point_at_angle(const ConicShape& shape, double theta) {
  return from_polar(radius_at_angle(shape, theta), theta);
}

PlanarVector tangent_at_angle(const ConicShape& shape, double theta) {
  const double r = radius_at_angle(shape, theta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double dr = r * r * shape.eccentricity() * c / shape.semi_latus_rectum();
  return {dr * c - r * s, dr * s + r * c};
}

std::optional<PlanarVector> second_focus(const ConicShape& shape) {
  const double e = shape.eccentricity();
  const double ell = shape.semi_latus_rectum();
  switch (shape.conic_class()) {
    case ConicClass::Ellipse:
      return PlanarVector{0.0, 2.0 * e * ell / ((1.0 - e) * (1.0 + e))};
    case ConicClass::Hyperbola:
      return PlanarVector{0.0, -2.0 * e * ell / ((e - 1.0) * (e + 1.0))};
    default:
      return std::nullopt;
  }
}

std::vector<ConicSample> sample_points(const ConicShape& shape, std::size_t n) {
  if (n < 3) fail(ErrorKind::Argument, "sample_points needs at least 3 points");
  std::vector<ConicSample> out;
  out.reserve(n);
  const double e = shape.eccentricity();
  if (e < 1.0) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double theta = -kHalfPi + step * static_cast<double>(i);
      out.push_back({theta, point_at_angle(shape, theta)});
    }
    return out;
  }
  // Branch is 1 - e sin(theta) > 0, i.e. symmetric about -90 deg out to asin(1/e).
  const double half_width = (std::asin(1.0 / e) + kHalfPi) * kBranchCoverage;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    const double theta = -kHalfPi + s * half_width;
    out.push_back({theta, point_at_angle(shape, theta)});
  }
  return out;
}

double ResidualReport::max_residual() const {
  return std::max({focal_residual, reflection_residual, right_angle_residual});
}

ResidualReport geometry_residuals(const ConicShape& shape, std::size_t n) {
  if (!(shape.eccentricity() > 0.0)) {
    fail(ErrorKind::Domain, "geometry residuals need e > 0; a circle has no directrix");
  }
  if (n < 10) fail(ErrorKind::Argument, "geometry residuals need at least 10 samples");

  const double e = shape.eccentricity();
  const double ell = shape.semi_latus_rectum();
  const double focal_distance = *shape.focal_distance();
  const ConicClass cls = shape.conic_class();
  const std::optional<PlanarVector> other_focus = second_focus(shape);
  // Focal-sum / focal-difference constant: twice the semi-major axis.
  const double major = 2.0 * ell / std::abs((1.0 - e) * (1.0 + e));
  // The parabola's second focus is at infinity along +y.
  const PlanarVector axis_direction{0.0, 1.0};

  ResidualReport report;
  report.conic_class = cls;
  report.samples = n;

  for (const auto& [theta, p] : sample_points(shape, n)) {
    const double r = norm(p);
    const PlanarVector tangent = tangent_at_angle(shape, theta);
    const PlanarVector t_hat = unit(tangent);
    const PlanarVector to_focus = unit(-p);

    double focal = 0.0;
    double reflection = 0.0;
    switch (cls) {
      case ConicClass::Ellipse: {
        const PlanarVector to_other = *other_focus - p;
        focal = (r + norm(to_other)) / major - 1.0;
        reflection = dot(t_hat, to_focus) + dot(t_hat, unit(to_other));
        break;
      }
      case ConicClass::Hyperbola: {
        const PlanarVector to_other = *other_focus - p;
        focal = (norm(to_other) - r) / major - 1.0;
        reflection = dot(t_hat, to_focus) - dot(t_hat, unit(to_other));
        break;
      }
      case ConicClass::Parabola:
      case ConicClass::Circle:
        focal = (r - (p.y + focal_distance)) / ell;
        reflection = dot(t_hat, to_focus) + dot(t_hat, axis_direction);
        break;
    }
    report.focal_residual = std::max(report.focal_residual, std::abs(focal));
    report.reflection_residual = std::max(report.reflection_residual, std::abs(reflection));

    if (std::abs(t_hat.y) < 1e-12) {
      ++report.right_angle_not_applicable;
      continue;
    }
    const double along = (-focal_distance - p.y) / tangent.y;
    const PlanarVector on_directrix = p + along * tangent;
    const double right = dot(unit(p), unit(on_directrix));
    report.right_angle_residual = std::max(report.right_angle_residual, std::abs(right));
  }
  return report;
}

}  // namespace kepler
