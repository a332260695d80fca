#pragma once

#include <vector>

namespace heatident {

enum class ForcingKind { Constant, PresetLeft, PresetRight, SumOfTerms };

/// One additive component of an ambient-temperature signal.
struct ForcingTerm {
  enum class Shape { Sine, Tanh };
  Shape shape = Shape::Sine;
  double amplitude_K = 0.0;
  /// Sine period, or tanh time constant, in seconds. Must be positive.
  double timescale_s = 1.0;
};

/**
 * Ambient temperature signal T_inf(t), defined for every t >= 0.
 *
 * The two `preset_*` signals are the built-in case-study forcings: the left
 * face sees two superposed sines (20 h and 2 h periods, 10 K amplitude each)
 * around 20 C, the right face a 20 K tanh ramp (4 h time constant) minus a
 * 10 K sine (4 h period) around 20 C.
 */
class ForcingSignal {
 public:
  ForcingSignal() = default;

  static ForcingSignal constant(double baseline_K);
  static ForcingSignal preset_left();
  static ForcingSignal preset_right();
  static ForcingSignal sum_of_terms(double baseline_K, std::vector<ForcingTerm> terms);

  /// Evaluate at t seconds (t >= 0). Kelvin.
  double operator()(double t_s) const;

  ForcingKind kind() const { return kind_; }
  double baseline_K() const { return baseline_K_; }
  const std::vector<ForcingTerm>& terms() const { return terms_; }

 private:
  ForcingSignal(ForcingKind kind, double baseline_K, std::vector<ForcingTerm> terms);

  ForcingKind kind_ = ForcingKind::Constant;
  double baseline_K_ = 293.15;
  std::vector<ForcingTerm> terms_;
};

}  // namespace heatident
