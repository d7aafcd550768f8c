// Conics in focus-directrix form.
//
// Frame: the focus sits at the origin and the directrix is the horizontal
// line y = -aO, where aO = ell / e is the focus-directrix distance. The polar
// angle theta is measured from +x with sin(theta) growing away from the
// directrix, so theta = -90 deg points at the periapsis and the standard true
// anomaly is f = theta + 90 deg. In this frame
//
//     r(theta) = ell / (1 - e sin(theta)).
#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "kepler/vector.hpp"

namespace kepler {

/// Ordered by increasing eccentricity.
enum class ConicClass { Circle, Ellipse, Parabola, Hyperbola };

std::string_view to_string(ConicClass c) noexcept;

/// Circle for e == 0, ellipse for e < 1, parabola for e == 1, hyperbola otherwise.
ConicClass classify_eccentricity(double e);

/// Eccentricity plus semi-latus rectum. Stays finite for circles, unlike (e, aO).
class ConicShape {
 public:
  ConicShape(double eccentricity, double semi_latus_rectum);

  /// Builds from (e, aO); requires e > 0.
  static ConicShape from_focal(double eccentricity, double focal_distance);

  double eccentricity() const noexcept { return e_; }
  double semi_latus_rectum() const noexcept { return ell_; }
  ConicClass conic_class() const { return classify_eccentricity(e_); }

  /// aO; empty for a circle, which has no directrix.
  std::optional<double> focal_distance() const;

  double periapsis() const noexcept { return ell_ / (1.0 + e_); }
  /// Empty for open conics.
  std::optional<double> apoapsis() const;

 private:
  double e_;
  double ell_;
};

struct EllipseAxes {
  double semi_major = 0.0;
  double semi_minor = 0.0;
};

/// Polar form r = ell / (1 - e sin(theta)); throws NoSuchPoint past an open branch.
double radius_at_angle(const ConicShape& shape, double theta);

/// csc^2 of the angle between the focal radius and the tangent at distance r:
///   ((e^2 - 1) / ell^2) r^2 + (2 / ell) r.
/// Throws Domain when r lies outside [periapsis, apoapsis].
double csc2_alpha(const ConicShape& shape, double r);

EllipseAxes axes_from_focal(double e, double focal_distance);

struct FocalParameters {
  double eccentricity = 0.0;
  std::optional<double> focal_distance;  // empty for a circle
};

FocalParameters focal_from_axes(const EllipseAxes& axes);

/// pi aO^2 e^2 / (1 - e^2)^{3/2}.
double ellipse_area(double e, double focal_distance);

/// Point on the conic at polar angle theta, focus at the origin.
PlanarVector point_at_angle(const ConicShape& shape, double theta);

/// d(point)/d(theta), from the derivative of the polar form.
PlanarVector tangent_at_angle(const ConicShape& shape, double theta);

/// The focus that is not at the origin. Empty for circles and parabolas.
std::optional<PlanarVector> second_focus(const ConicShape& shape);

struct ConicSample {
  double theta = 0.0;
  PlanarVector point;
};

/// n points on the conic; open conics are sampled on the branch around the focus.
std::vector<ConicSample> sample_points(const ConicShape& shape, std::size_t n);

struct ResidualReport {
  ConicClass conic_class = ConicClass::Ellipse;
  std::size_t samples = 0;
  /// Relative residual of focal-sum (ellipse), focal-difference (hyperbola) or
  /// focus-directrix equidistance (parabola).
  double focal_residual = 0.0;
  /// Cosine mismatch between incoming and outgoing focal rays about the tangent.
  double reflection_residual = 0.0;
  /// |cos| of the angle at the focus between the point and where its tangent meets the directrix.
  double right_angle_residual = 0.0;
  /// Samples whose tangent is parallel to the directrix (apsis line).
  std::size_t right_angle_not_applicable = 0;

  double max_residual() const;
};

ResidualReport geometry_residuals(const ConicShape& shape, std::size_t n);

}  // namespace kepler
