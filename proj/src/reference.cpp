#include "heatident/reference.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "heatident/errors.hpp"

namespace heatident {

namespace {

// Thomas algorithm with the forward-elimination coefficients computed once;
// the system matrix is constant across time steps.
class TridiagonalSolver {
 public:
  TridiagonalSolver(Eigen::VectorXd lower, const Eigen::VectorXd& diag, Eigen::VectorXd upper)
      : lower_(std::move(lower)), cprime_(diag.size()), inv_denom_(diag.size()) {
    const auto n = diag.size();
    inv_denom_(0) = 1.0 / diag(0);
    cprime_(0) = upper(0) * inv_denom_(0);
    for (Eigen::Index i = 1; i < n; ++i) {
      const double denom = diag(i) - lower_(i) * cprime_(i - 1);
      inv_denom_(i) = 1.0 / denom;
      cprime_(i) = (i + 1 < n ? upper(i) : 0.0) * inv_denom_(i);
    }
  }

  void solve_in_place(Eigen::VectorXd& rhs) const {
    const auto n = rhs.size();
    rhs(0) *= inv_denom_(0);
    for (Eigen::Index i = 1; i < n; ++i) {
      rhs(i) = (rhs(i) - lower_(i) * rhs(i - 1)) * inv_denom_(i);
    }
    for (Eigen::Index i = n - 2; i >= 0; --i) {
      rhs(i) -= cprime_(i) * rhs(i + 1);
    }
  }

 private:
  Eigen::VectorXd lower_;      // lower_(0) unused
  Eigen::VectorXd cprime_;
  Eigen::VectorXd inv_denom_;
};

// Crank-Nicolson march with centered ghost-node Robin closures; returns the
// dimensionless sensor values at the requested level indices.
Eigen::VectorXd cn_sensor_series(const DimensionlessProblem& dp, int intervals, double dt_star,
                                 int sensor_node, const std::vector<long>& obs_levels) {
  const int nodes = intervals + 1;
  const double dx = 1.0 / intervals;
  const double rate = dp.Fo * dp.k_star / (dp.c_star * dx * dx);
  const double s = 0.5 * dt_star * rate;
  const double ghost_left = 2.0 * dx * dp.Bi * dp.hL_star / dp.k_star;
  const double ghost_right = 2.0 * dx * dp.Bi * dp.hR_star / dp.k_star;

  Eigen::VectorXd lower = Eigen::VectorXd::Constant(nodes, -s);
  Eigen::VectorXd diag = Eigen::VectorXd::Constant(nodes, 1.0 + 2.0 * s);
  Eigen::VectorXd upper = Eigen::VectorXd::Constant(nodes, -s);
  diag(0) = 1.0 + s * (2.0 + ghost_left);
  upper(0) = -2.0 * s;
  diag(nodes - 1) = 1.0 + s * (2.0 + ghost_right);
  lower(nodes - 1) = -2.0 * s;
  const TridiagonalSolver solver(std::move(lower), diag, std::move(upper));

  Eigen::VectorXd u = Eigen::VectorXd::Constant(nodes, dp.u0);
  Eigen::VectorXd rhs(nodes);

  Eigen::VectorXd out(static_cast<Eigen::Index>(obs_levels.size()));
  std::size_t next_obs = 0;
  while (next_obs < obs_levels.size() && obs_levels[next_obs] == 0) {
    out(static_cast<Eigen::Index>(next_obs++)) = u(sensor_node);
  }
  const long last_level = obs_levels.empty() ? 0 : obs_levels.back();

  double uinfL_n = dp.u_inf_L(0.0);
  double uinfR_n = dp.u_inf_R(0.0);
  for (long level = 1; level <= last_level; ++level) {
    const double t_next = dt_star * static_cast<double>(level);
    const double uinfL_np1 = dp.u_inf_L(t_next);
    const double uinfR_np1 = dp.u_inf_R(t_next);

    rhs.segment(1, nodes - 2) =
        u.segment(1, nodes - 2) +
        s * (u.segment(0, nodes - 2) - 2.0 * u.segment(1, nodes - 2) + u.segment(2, nodes - 2));
    rhs(0) = u(0) + s * (2.0 * u(1) - (2.0 + ghost_left) * u(0)) +
             s * ghost_left * (uinfL_n + uinfL_np1);
    rhs(nodes - 1) = u(nodes - 1) + s * (2.0 * u(nodes - 2) - (2.0 + ghost_right) * u(nodes - 1)) +
                     s * ghost_right * (uinfR_n + uinfR_np1);

    solver.solve_in_place(rhs);
    u.swap(rhs);
    uinfL_n = uinfL_np1;
    uinfR_n = uinfR_np1;

    while (next_obs < obs_levels.size() && obs_levels[next_obs] == level) {
      out(static_cast<Eigen::Index>(next_obs++)) = u(sensor_node);
    }
  }
  if (!out.allFinite()) throw SolverError("reference march produced non-finite values");
  return out;
}

// Largest step <= dt_target that lands every instant exactly on the ladder.
double aligned_time_step(const Eigen::VectorXd& instants_star, double dt_target) {
  double min_gap = 0.0;
  double prev = 0.0;
  for (Eigen::Index k = 0; k < instants_star.size(); ++k) {
    const double gap = instants_star(k) - prev;
    if (gap > 0.0 && (min_gap == 0.0 || gap < min_gap)) min_gap = gap;
    prev = instants_star(k);
  }
  if (min_gap == 0.0) return dt_target;
  const double dt = min_gap / std::ceil(min_gap / dt_target - 1e-12);
  for (Eigen::Index k = 0; k < instants_star.size(); ++k) {
    const double ratio = instants_star(k) / dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-6) {
      throw std::invalid_argument(
          "observation instants do not share a common step; cannot build the reference grid");
    }
  }
  return dt;
}

}  // namespace

ReferenceTrace solve_reference(const DimensionlessProblem& dp, const ObservationSchedule& schedule,
                               const ReferenceOptions& options) {
  if (!(options.accuracy_target_K > 0.0)) {
    throw std::invalid_argument("reference accuracy target must be positive");
  }
  schedule.validate(dp.tf_star * dp.scales.t_ref_s);

  const Eigen::VectorXd instants_star = schedule.instants_s / dp.scales.t_ref_s;
  const double x_star = schedule.x_obs_m / dp.L_m;
  if (x_star < 0.0 || x_star > 1.0) throw std::invalid_argument("sensor position outside [0, L]");

  const int base_intervals = 100 * options.base_refinement;
  const double base_dt = aligned_time_step(instants_star, 1e-3 / options.base_refinement);

  ReferenceTrace trace;
  trace.times_s = schedule.instants_s;

  Eigen::VectorXd prev_values;
  for (int doubling = 0; doubling <= options.max_doublings; ++doubling) {
    const int intervals = base_intervals << doubling;
    const double dt = base_dt / static_cast<double>(1 << doubling);

    const double node_offset = x_star * intervals;
    const int sensor_node = static_cast<int>(std::llround(node_offset));
    if (std::abs(node_offset - sensor_node) > 1e-6) {
      throw std::invalid_argument("sensor position does not fall on the reference grid");
    }
    std::vector<long> obs_levels(static_cast<std::size_t>(instants_star.size()));
    for (Eigen::Index k = 0; k < instants_star.size(); ++k) {
      obs_levels[static_cast<std::size_t>(k)] = std::lround(instants_star(k) / dt);
    }

    Eigen::VectorXd values =
        cn_sensor_series(dp, intervals, dt, sensor_node, obs_levels) * dp.scales.T_ref_K;
    if (doubling > 0) {
      const double diff = (values - prev_values).cwiseAbs().maxCoeff();
      if (diff < options.accuracy_target_K) {
        trace.values_K = std::move(values);
        trace.accuracy_estimate_K = diff;
        return trace;
      }
    }
    prev_values = std::move(values);
  }
  throw SolverError("reference refinement did not reach " +
                    std::to_string(options.accuracy_target_K) + " K within " +
                    std::to_string(options.max_doublings) + " grid doublings");
}

}  // namespace heatident
