#pragma once

#include <stdexcept>
#include <string>

namespace heatident {

/// A time march produced non-finite values or an algorithmic bound was hit.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// The least-squares update direction vanished (zero sensitivity).
class NonIdentifiableError : public std::runtime_error {
 public:
  explicit NonIdentifiableError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace heatident
