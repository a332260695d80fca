#pragma once

namespace heatident {

inline constexpr double kCelsiusOffsetK = 273.15;

constexpr double celsius_to_kelvin(double degrees_c) { return degrees_c + kCelsiusOffsetK; }
constexpr double kelvin_to_celsius(double kelvin) { return kelvin - kCelsiusOffsetK; }

}  // namespace heatident
