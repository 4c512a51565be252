#pragma once

#include <stdexcept>
#include <string>

namespace qrtrap {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside the admissible set (degenerate trapezoid, modulus out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A finite-difference stencil crossed a region boundary of the piecewise map.
class StencilStraddlesSeam : public Error {
 public:
  using Error::Error;
};

// |f_z| <= |f_zbar|: the map is not orientation preserving at the sample.
class DegenerateJacobian : public Error {
 public:
  using Error::Error;
};

}  // namespace qrtrap
