#pragma once

#include <span>

namespace heatident {

/// Population statistics: std uses the 1/N normalization.
struct SummaryStatistics {
  double mean = 0.0;
  double std = 0.0;
  int n = 0;
};

/// Welford one-pass mean/std. Throws on empty input.
SummaryStatistics summarize(std::span<const double> values);

}  // namespace heatident
