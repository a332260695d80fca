#pragma once

#include <array>
#include <string>

namespace heatident {

/**
 * Thermophysical properties of one wall layer.
 *
 * `c` is the volumetric heat capacity in J/(m^3 K) and `k` the thermal
 * conductivity in W/(m K). Catalogue entries use MJ/(m^3 K) at the file
 * boundary; internally everything is plain SI.
 */
struct Material {
  int id = 0;
  double c = 0.0;  ///< volumetric heat capacity, J/(m^3 K)
  double k = 0.0;  ///< thermal conductivity, W/(m K)
  std::string name;

  /// Throws std::invalid_argument unless c > 0 and k > 0.
  void validate() const;
};

/// The five built-in materials used by the case-study presets.
const std::array<Material, 5>& material_catalogue();

/// Catalogue lookup; throws std::invalid_argument for unknown ids.
Material material_by_id(int id);

}  // namespace heatident
