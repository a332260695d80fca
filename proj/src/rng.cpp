#include "heatident/rng.hpp"

#include <cmath>

namespace heatident {

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
  std::uint64_t z = base_seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

double GaussianStream::uniform_symmetric() {
  // 53-bit mantissa in [0, 1), mapped to (-1, 1)
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double x = 0.0;
  double y = 0.0;
  double r2 = 0.0;
  do {
    x = uniform_symmetric();
    y = uniform_symmetric();
    r2 = x * x + y * y;
  } while (r2 >= 1.0 || r2 == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(r2) / r2);
  spare_ = y * factor;
  has_spare_ = true;
  return x * factor;
}

}  // namespace heatident
