#pragma once

#include "heatident/trace.hpp"

namespace heatident {

/// One interior DF update from the three stencil values
/// u_{j+1}^n (east), u_{j-1}^n (west) and u_j^{n-1} (center_prev).
inline double df_step(double lambda, double u_east, double u_west, double u_center_prev) {
  return (lambda * u_east + lambda * u_west + (1.0 - lambda) * u_center_prev) / (1.0 + lambda);
}

/// Batch interior update; boundary entries of `out` are left untouched.
void df_step_interior(double lambda, const Eigen::VectorXd& level_n,
                      const Eigen::VectorXd& level_nm1, Eigen::VectorXd& out);

/// Solves the two one-sided second-order Robin closures for the boundary
/// nodes of a freshly updated level. Interior entries must already hold the
/// new values; u_inf_* are the ambient values at the same level.
void apply_df_boundaries(const DimensionlessProblem& dp, const UniformGrid& grid,
                         Eigen::VectorXd& level, double u_inf_left, double u_inf_right);

/**
 * Full DF march over the grid's horizon.
 *
 * The three-level scheme is bootstrapped by substituting the initial field
 * for the missing pre-initial level on the first step; boundaries are closed
 * after each interior update. Throws SolverError if the march produces
 * non-finite values.
 */
FieldTrace solve_df(const DimensionlessProblem& dp, const UniformGrid& grid);

}  // namespace heatident
