#include "heatident/forcing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "heatident/units.hpp"

namespace heatident {

namespace {
constexpr double kHour = 3600.0;
}

ForcingSignal::ForcingSignal(ForcingKind kind, double baseline_K, std::vector<ForcingTerm> terms)
    : kind_(kind), baseline_K_(baseline_K), terms_(std::move(terms)) {
  for (const ForcingTerm& term : terms_) {
    if (!(term.timescale_s > 0.0)) {
      throw std::invalid_argument("forcing term timescale must be positive");
    }
  }
}

ForcingSignal ForcingSignal::constant(double baseline_K) {
  return ForcingSignal(ForcingKind::Constant, baseline_K, {});
}

ForcingSignal ForcingSignal::preset_left() {
  return ForcingSignal(ForcingKind::PresetLeft, celsius_to_kelvin(20.0),
                       {{ForcingTerm::Shape::Sine, 10.0, 20.0 * kHour},
                        {ForcingTerm::Shape::Sine, 10.0, 2.0 * kHour}});
}

ForcingSignal ForcingSignal::preset_right() {
  return ForcingSignal(ForcingKind::PresetRight, celsius_to_kelvin(20.0),
                       {{ForcingTerm::Shape::Tanh, 20.0, 4.0 * kHour},
                        {ForcingTerm::Shape::Sine, -10.0, 4.0 * kHour}});
}

ForcingSignal ForcingSignal::sum_of_terms(double baseline_K, std::vector<ForcingTerm> terms) {
  return ForcingSignal(ForcingKind::SumOfTerms, baseline_K, std::move(terms));
}

double ForcingSignal::operator()(double t_s) const {
  double value = baseline_K_;
  for (const ForcingTerm& term : terms_) {
    switch (term.shape) {
      case ForcingTerm::Shape::Sine:
        value += term.amplitude_K * std::sin(2.0 * std::numbers::pi * t_s / term.timescale_s);
        break;
      case ForcingTerm::Shape::Tanh:
        value += term.amplitude_K * std::tanh(t_s / term.timescale_s);
        break;
    }
  }
  return value;
}

}  // namespace heatident
