#pragma once

#include <cstdint>
#include <random>

namespace heatident {

/// Counter-based seed mixing (splitmix64 finalizer over base ^ golden*index)
/// so per-sample streams are independent of execution order.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index);

/**
 * Deterministic stream of standard normal draws.
 *
 * Uniforms come from mt19937_64 (bit-exact per the C++ standard) and are
 * transformed with the Marsaglia polar method, so the sequence is a pure
 * function of the seed. Identical seeds give identical draws everywhere.
 */
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  double uniform_symmetric();  // in (-1, 1)

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace heatident
