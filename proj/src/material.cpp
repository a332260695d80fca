#include "heatident/material.hpp"

#include <stdexcept>
#include <string>

namespace heatident {

void Material::validate() const {
  if (!(c > 0.0)) {
    throw std::invalid_argument("material " + std::to_string(id) +
                                ": volumetric heat capacity must be positive");
  }
  if (!(k > 0.0)) {
    throw std::invalid_argument("material " + std::to_string(id) +
                                ": thermal conductivity must be positive");
  }
}

const std::array<Material, 5>& material_catalogue() {
  static const std::array<Material, 5> catalogue = {{
      {1, 5.0e4, 0.05, "insulation"},
      {2, 5.0e5, 0.5, "wood"},
      {3, 1.5e6, 1.0, "brick"},
      {4, 2.0e6, 1.5, "concrete"},
      {5, 2.5e6, 2.5, "stone"},
  }};
  return catalogue;
}

Material material_by_id(int id) {
  for (const Material& m : material_catalogue()) {
    if (m.id == id) return m;
  }
  throw std::invalid_argument("unknown material id " + std::to_string(id));
}

}  // namespace heatident
