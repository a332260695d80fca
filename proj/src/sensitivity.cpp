#include "heatident/sensitivity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "heatident/errors.hpp"

namespace heatident {

const char* to_string(ParameterKind param) {
  switch (param) {
    case ParameterKind::HeatCapacity: return "c";
    case ParameterKind::Conductivity: return "k";
    case ParameterKind::SurfaceCoefficientLeft: return "hL";
  }
  return "?";
}

const char* to_string(ModelKind model) {
  switch (model) {
    case ModelKind::DuFortFrankel: return "df";
    case ModelKind::LumpedRc: return "rc";
  }
  return "?";
}

namespace {

void check_forward_grid(const UniformGrid& grid, const FieldTrace& forward) {
  if (forward.grid.node_count != grid.node_count ||
      forward.grid.level_count != grid.level_count ||
      std::abs(forward.grid.dt_star - grid.dt_star) > 1e-15) {
    throw std::invalid_argument("forward trace was solved on a different grid");
  }
  if (forward.values.rows() != grid.node_count || forward.values.cols() != grid.level_count) {
    throw std::invalid_argument("forward trace is incomplete");
  }
}

}  // namespace

SensitivityTrace solve_sensitivity_df(const DimensionlessProblem& dp, const UniformGrid& grid,
                                      ParameterKind param, const FieldTrace& forward,
                                      int sensor_node) {
  grid.validate();
  check_forward_grid(grid, forward);
  const int nodes = grid.node_count;
  const int levels = grid.level_count;
  if (sensor_node < 0 || sensor_node >= nodes) {
    throw std::invalid_argument("sensor node outside the grid");
  }

  const double lambda = df_coefficients(dp, grid).lambda;
  // dependence of the update coefficient on the parameter under study
  double dlambda = 0.0;
  if (param == ParameterKind::HeatCapacity) dlambda = -lambda / dp.c_star;
  if (param == ParameterKind::Conductivity) dlambda = lambda / dp.k_star;

  const double inv = 1.0 / (1.0 + lambda);
  const double a = dp.k_star / (2.0 * grid.dx_star);
  const double denom_left = 3.0 * a + dp.Bi * dp.hL_star;
  const double denom_right = 3.0 * a + dp.Bi * dp.hR_star;
  const double inv_2dx = 1.0 / (2.0 * grid.dx_star);

  SensitivityTrace trace;
  trace.model = ModelKind::DuFortFrankel;
  trace.param = param;
  trace.times_s = Eigen::VectorXd::LinSpaced(
      levels, 0.0, grid.dt_star * dp.scales.t_ref_s * static_cast<double>(levels - 1));
  trace.values.setZero(levels);

  Eigen::VectorXd theta_prev = Eigen::VectorXd::Zero(nodes);
  Eigen::VectorXd theta_curr = theta_prev;
  Eigen::VectorXd next(nodes);

  for (int level = 1; level < levels; ++level) {
    // the first forward step substituted level 0 for the missing pre-initial
    // level; its derivative does the same
    const auto u_n = forward.values.col(level - 1);
    const auto u_nm1 = forward.values.col(level >= 2 ? level - 2 : 0);
    const auto u_np1 = forward.values.col(level);

    next.segment(1, nodes - 2) =
        inv * (lambda * (theta_curr.segment(2, nodes - 2) + theta_curr.segment(0, nodes - 2)) +
               (1.0 - lambda) * theta_prev.segment(1, nodes - 2) +
               dlambda * (u_n.segment(2, nodes - 2) + u_n.segment(0, nodes - 2) -
                          u_nm1.segment(1, nodes - 2) - u_np1.segment(1, nodes - 2)));

    // differentiated boundary closures, written at the new level
    double rhs_left = a * (4.0 * next(1) - next(2));
    double rhs_right = a * (4.0 * next(nodes - 2) - next(nodes - 3));
    if (param == ParameterKind::Conductivity) {
      rhs_left += inv_2dx * (-u_np1(2) + 4.0 * u_np1(1) - 3.0 * u_np1(0));
      rhs_right -=
          inv_2dx * (3.0 * u_np1(nodes - 1) - 4.0 * u_np1(nodes - 2) + u_np1(nodes - 3));
    } else if (param == ParameterKind::SurfaceCoefficientLeft) {
      const double t_star = grid.dt_star * level;
      rhs_left -= dp.Bi * (u_np1(0) - dp.u_inf_L(t_star));
    }
    next(0) = rhs_left / denom_left;
    next(nodes - 1) = rhs_right / denom_right;

    if (!next.allFinite()) {
      throw SolverError("sensitivity march diverged at level " + std::to_string(level));
    }
    trace.values(level) = next(sensor_node);
    theta_prev.swap(theta_curr);
    theta_curr.swap(next);
  }
  return trace;
}

SensitivityTrace solve_sensitivity_rc(const WallProblem& problem, const RcDiscretization& disc,
                                      ParameterKind param, const NodeTrace& forward) {
  const int levels = static_cast<int>(forward.times_s.size());
  if (levels < 2) throw std::invalid_argument("forward trace too short");
  if (disc.dt_s > rc_stability_limit(problem.material, disc.ell_m) * (1.0 + 1e-12)) {
    throw std::invalid_argument("lumped-model step exceeds the stability limit");
  }

  const double k = problem.material.k;
  const double c = problem.material.c;
  const double ell = disc.ell_m;
  const double beta = k * disc.dt_s / (c * ell * ell);

  const RcSystemMatrices sys = rc_system_matrices(problem, disc);
  const Eigen::PartialPivLU<Eigen::Matrix3d> lu(sys.A);

  Eigen::Matrix3d dA = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d dB = Eigen::Matrix3d::Zero();
  bool forced_by_ambient = false;
  switch (param) {
    case ParameterKind::HeatCapacity:
      dB.row(1) << -beta / c, 2.0 * beta / c, -beta / c;
      break;
    case ParameterKind::Conductivity:
      dA(0, 0) = 1.0 / ell;
      dA(0, 1) = -1.0 / ell;
      dA(2, 1) = -1.0 / ell;
      dA(2, 2) = 1.0 / ell;
      dB.row(1) << beta / k, -2.0 * beta / k, beta / k;
      break;
    case ParameterKind::SurfaceCoefficientLeft:
      dA(0, 0) = 1.0;
      forced_by_ambient = true;
      break;
  }

  SensitivityTrace trace;
  trace.model = ModelKind::LumpedRc;
  trace.param = param;
  trace.times_s = forward.times_s;
  trace.values.setZero(levels);

  Eigen::Vector3d sens = Eigen::Vector3d::Zero();
  for (int level = 1; level < levels; ++level) {
    const Eigen::Vector3d state_n(forward.T1_K(level - 1), forward.T2_K(level - 1),
                                  forward.T3_K(level - 1));
    const Eigen::Vector3d state_np1(forward.T1_K(level), forward.T2_K(level),
                                    forward.T3_K(level));
    Eigen::Vector3d rhs = sys.B * sens + dB * state_n - dA * state_np1;
    if (forced_by_ambient) rhs(0) += problem.forcing_L(forward.times_s(level));
    sens = lu.solve(rhs);
    trace.values(level) = sens(1);
  }
  if (!trace.values.allFinite()) throw SolverError("lumped sensitivity march diverged");
  return trace;
}

Eigen::VectorXd sample_at_observation(const SensitivityTrace& trace,
                                      const ObservationSchedule& schedule) {
  const Eigen::VectorXi idx = matching_time_indices(trace.times_s, schedule.instants_s);
  Eigen::VectorXd out(idx.size());
  for (Eigen::Index k = 0; k < idx.size(); ++k) out(k) = trace.values(idx(k));
  return out;
}

}  // namespace heatident
