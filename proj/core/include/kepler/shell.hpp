// Ring-decomposition quadrature for the attraction of thin spherical shells
// and solid spheres on an exterior point.
#pragma once

#include <cstddef>

namespace kepler {

/// Uniform thin shell of radius a and mass M under a pairwise law g m / s^2.
class ShellSpec {
 public:
  ShellSpec(double radius, double mass, double g);

  double radius() const noexcept { return radius_; }
  double mass() const noexcept { return mass_; }
  double g() const noexcept { return g_; }
  double surface_density() const;

 private:
  double radius_;
  double mass_;
  double g_;
};

/// Uniform partition of the polar angle [0, pi] into thin rings.
struct RingDecomposition {
  std::size_t rings = 10'000;
};

/// 2 pi x w with x = a sin(theta): area of a thin ring of width w on a sphere of radius a.
double ring_area(double radius, double theta, double width);

/// Axial acceleration at distance d > a from the centre, by midpoint rule over rings.
double shell_accel(const ShellSpec& shell, double distance, RingDecomposition rings = {});

/// Solid ball split into equal-thickness shells, each weighted by its exact volume fraction.
double sphere_accel(double radius, double mass, double g, double distance, std::size_t shells,
                    RingDecomposition rings = {});

/// g M / d^2.
double point_mass_accel(double gm, double distance);

struct ShellCheck {
  double radius = 0.0;
  double mass = 0.0;
  double g = 0.0;
  double distance = 0.0;
  std::size_t rings = 0;
  double computed = 0.0;
  double exact = 0.0;
  double rel_error = 0.0;
  /// d < 1.1 a: the integrand is sharply peaked and stated tolerances do not apply.
  bool near_surface = false;
};

ShellCheck shell_check(const ShellSpec& shell, double distance, RingDecomposition rings);

}  // namespace kepler
