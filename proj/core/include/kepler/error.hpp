#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kepler {

enum class ErrorKind {
  Domain,          // argument outside the operation's mathematical domain
  NoSuchPoint,     // polar angle beyond an open branch
  NotAnEllipse,    // ellipse-only formula applied to e outside (0, 1)
  Degenerate,      // radial launch, rectilinear motion
  Unbounded,       // bound-orbit quantity requested for an open orbit
  Inconsistent,    // conserved pair violates QC + m^2 >= 0
  Unreachable,     // radius not reachable at the given energy
  Collision,       // simulated body entered the collision radius
  NotApplicable,   // diagnostic not defined for this input
  Argument,        // malformed count or configuration
};

constexpr const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::NoSuchPoint: return "no-such-point";
    case ErrorKind::NotAnEllipse: return "not-an-ellipse";
    case ErrorKind::Degenerate: return "degenerate-orbit";
    case ErrorKind::Unbounded: return "unbounded-orbit";
    case ErrorKind::Inconsistent: return "inconsistent-input";
    case ErrorKind::Unreachable: return "unreachable-radius";
    case ErrorKind::Collision: return "collision";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::Argument: return "argument";
  }
  return "unknown";
}

/// Base for every error raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class CollisionError : public Error {
 public:
  CollisionError(std::size_t step_index, double radius, const std::string& what)
      : Error(ErrorKind::Collision, what), step_index_(step_index), radius_(radius) {}

  std::size_t step_index() const noexcept { return step_index_; }
  double radius() const noexcept { return radius_; }

 private:
  std::size_t step_index_;
  double radius_;
};

}  // namespace kepler
