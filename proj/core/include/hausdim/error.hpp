#pragma once

#include <stdexcept>
#include <string>

namespace hausdim {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller passed an argument outside the documented domain.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A problem or run configuration is inconsistent (bad mesh size, radius too
/// small for the tail estimate, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A point could not be located in the mesh. Upstream this means some map
/// sent a node outside the meshed domain.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// The bracket matrices could not be assembled (interpolation correction
/// reached 1, negative entry, empty row).
class AssemblyError : public Error {
 public:
  using Error::Error;
};

/// The solver could not certify a bracket at the requested resolution.
class CertificationError : public Error {
 public:
  CertificationError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}

  [[nodiscard]] double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

}  // namespace hausdim
