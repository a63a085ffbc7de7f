#pragma once

#include <stdexcept>
#include <string>

namespace threeterm {

// Base of every error thrown by the library. The CLI maps the concrete
// subclasses onto exit codes.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (point outside
// the disk, radius not in (0,1), ...).
class domain_error : public error {
 public:
  using error::error;
};

// Input is degenerate for the requested operation: coincident points,
// horocycles on a common ray, vanishing denominators, zero tuple entries.
class degenerate_error : public error {
 public:
  using error::error;
};

// A four-circle configuration that violates ordering or disjointness.
class configuration_error : public error {
 public:
  using error::error;
};

// Input that should lie on the quadric but does not.
class precondition_error : public error {
 public:
  precondition_error(const std::string& what, double residual)
      : error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Two on-quadric tuples whose cross-ratio invariants differ, so no torus
// element maps one onto the other.
class not_same_orbit_error : public error {
 public:
  using error::error;
};

class index_error : public error {
 public:
  using error::error;
};

}  // namespace threeterm
