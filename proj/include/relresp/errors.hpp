#pragma once

#include <stdexcept>
#include <string>

namespace relresp {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class KinematicFault {
  non_positive_wavevector,
  negative_frequency,
  on_light_cone,
  pair_threshold,
};

class KinematicError : public Error {
 public:
  KinematicError(KinematicFault fault, const std::string& what)
      : Error(what), fault_(fault) {}
  KinematicFault fault() const noexcept { return fault_; }

 private:
  KinematicFault fault_;
};

// A T=0 logarithm is evaluated where its argument vanishes (x_F on a window edge).
class SubregionBoundaryError : public Error {
 public:
  using Error::Error;
};

// Violated internal identity, e.g. the two eps_L assembly paths disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace relresp
