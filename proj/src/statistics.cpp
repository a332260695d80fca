#include "heatident/statistics.hpp"

#include <cmath>
#include <stdexcept>

namespace heatident {

SummaryStatistics summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("cannot summarize an empty sample");
  double mean = 0.0;
  double m2 = 0.0;
  int n = 0;
  for (double v : values) {
    ++n;
    const double delta = v - mean;
    mean += delta / n;
    m2 += delta * (v - mean);
  }
  return {mean, std::sqrt(m2 / n), n};
}

}  // namespace heatident
