#include "heatident/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace heatident {

int level_count_for(double tf, double dt) {
  if (!(tf > 0.0) || !(dt > 0.0)) {
    throw std::invalid_argument("horizon and time step must be positive");
  }
  const double steps = tf / dt;
  // snap to an exact multiple before rounding up
  return static_cast<int>(std::ceil(steps - 1e-9)) + 1;
}

UniformGrid UniformGrid::for_horizon(int node_count, double dt_star, double tf_star) {
  UniformGrid grid;
  grid.node_count = node_count;
  grid.dx_star = 1.0 / (node_count - 1);
  grid.dt_star = dt_star;
  grid.level_count = level_count_for(tf_star, dt_star);
  grid.validate();
  return grid;
}

void UniformGrid::validate() const {
  if (node_count < 5) {
    throw std::invalid_argument("grid needs at least 5 nodes for the boundary stencils");
  }
  if (!(dt_star > 0.0) || !(dx_star > 0.0)) {
    throw std::invalid_argument("grid steps must be positive");
  }
  const double expected_dx = 1.0 / (node_count - 1);
  if (std::abs(dx_star - expected_dx) > 1e-12 * expected_dx) {
    throw std::invalid_argument("dx* must equal 1/(node_count - 1)");
  }
  if (level_count < 2) {
    throw std::invalid_argument("grid needs at least two time levels");
  }
}

SchemeCoefficients df_coefficients(const DimensionlessProblem& dp, const UniformGrid& grid) {
  SchemeCoefficients coeffs;
  coeffs.lambda =
      2.0 * dp.Fo * (dp.k_star / dp.c_star) * grid.dt_star / (grid.dx_star * grid.dx_star);
  return coeffs;
}

}  // namespace heatident
