#include "heatident/dufort_frankel.hpp"

#include <cassert>
#include <string>

#include "heatident/errors.hpp"

namespace heatident {

void df_step_interior(double lambda, const Eigen::VectorXd& level_n,
                      const Eigen::VectorXd& level_nm1, Eigen::VectorXd& out) {
  const auto n = level_n.size();
  assert(level_nm1.size() == n && out.size() == n);
  const double inv = 1.0 / (1.0 + lambda);
  out.segment(1, n - 2) =
      inv * (lambda * (level_n.segment(2, n - 2) + level_n.segment(0, n - 2)) +
             (1.0 - lambda) * level_nm1.segment(1, n - 2));
}

void apply_df_boundaries(const DimensionlessProblem& dp, const UniformGrid& grid,
                         Eigen::VectorXd& level, double u_inf_left, double u_inf_right) {
  const auto n = level.size();
  const double a = dp.k_star / (2.0 * grid.dx_star);
  const double denom_left = 3.0 * a + dp.Bi * dp.hL_star;
  const double denom_right = 3.0 * a + dp.Bi * dp.hR_star;
  // cannot vanish for k*, dx* > 0 and h* >= 0
  assert(denom_left > 0.0 && denom_right > 0.0);

  level(0) = (a * (4.0 * level(1) - level(2)) + dp.Bi * dp.hL_star * u_inf_left) / denom_left;
  level(n - 1) =
      (a * (4.0 * level(n - 2) - level(n - 3)) + dp.Bi * dp.hR_star * u_inf_right) / denom_right;
}

FieldTrace solve_df(const DimensionlessProblem& dp, const UniformGrid& grid) {
  grid.validate();
  const double lambda = df_coefficients(dp, grid).lambda;
  const int nodes = grid.node_count;
  const int levels = grid.level_count;

  FieldTrace trace;
  trace.grid = grid;
  trace.L_m = dp.L_m;
  trace.scales = dp.scales;
  trace.times_star =
      Eigen::VectorXd::LinSpaced(levels, 0.0, grid.dt_star * static_cast<double>(levels - 1));
  trace.values.resize(nodes, levels);
  trace.values.col(0).setConstant(dp.u0);

  Eigen::VectorXd prev = trace.values.col(0);  // level n-1 (bootstrap: equals level 0)
  Eigen::VectorXd curr = prev;                 // level n
  Eigen::VectorXd next(nodes);

  for (int level = 1; level < levels; ++level) {
    const double t_star = grid.dt_star * level;
    df_step_interior(lambda, curr, prev, next);
    apply_df_boundaries(dp, grid, next, dp.u_inf_L(t_star), dp.u_inf_R(t_star));
    if (!next.allFinite()) {
      throw SolverError("field march diverged at level " + std::to_string(level) +
                        " (lambda = " + std::to_string(lambda) + ")");
    }
    trace.values.col(level) = next;
    prev.swap(curr);
    curr.swap(next);
  }
  return trace;
}

}  // namespace heatident
