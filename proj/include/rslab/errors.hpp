#pragma once

#include <stdexcept>
#include <string>

namespace rslab {

// Base of every error the library throws. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a configured size limit (generation index, degree cap).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A grid sample of |f| vanished (to working precision) during log quadrature.
class SingularSampleError : public Error {
 public:
  SingularSampleError(const std::string& what, double angle)
      : Error(what), angle_(angle) {}
  double angle() const noexcept { return angle_; }

 private:
  double angle_;
};

// Argument-principle contour passes too close to a zero.
class ContourError : public Error {
 public:
  ContourError(const std::string& what, double arc_begin, double arc_end)
      : Error(what), arc_begin_(arc_begin), arc_end_(arc_end) {}
  double arc_begin() const noexcept { return arc_begin_; }
  double arc_end() const noexcept { return arc_end_; }

 private:
  double arc_begin_;
  double arc_end_;
};

}  // namespace rslab
