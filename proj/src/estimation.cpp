#include "heatident/estimation.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <stdexcept>

#include "heatident/errors.hpp"

namespace heatident {

void EstimationOptions::validate() const {
  if (!(eta1 > 0.0) || !(eta2 > 0.0)) throw std::invalid_argument("stopping thresholds must be positive");
  if (max_iterations < 1) throw std::invalid_argument("iteration cap must be at least 1");
  if (!(p_apr > 0.0)) throw std::invalid_argument("initial guess must be positive");
  if (!(floor_factor > 0.0)) throw std::invalid_argument("positivity floor must be positive");
  if (df_node_count < 5) throw std::invalid_argument("field grid needs at least 5 nodes");
  if (!(df_dt_star > 0.0) || !(rc_dt_s > 0.0)) throw std::invalid_argument("solver steps must be positive");
  scales.validate();
}

double cost(const Eigen::VectorXd& u_dir, const Eigen::VectorXd& u_obs) {
  if (u_dir.size() != u_obs.size() || u_dir.size() == 0) {
    throw std::invalid_argument("cost needs two series of equal, non-zero length");
  }
  return (u_dir - u_obs).squaredNorm() / static_cast<double>(u_dir.size());
}

double gauss_update(double p_m, const Eigen::VectorXd& u_dir, const Eigen::VectorXd& u_obs,
                    const Eigen::VectorXd& sensitivity) {
  if (u_dir.size() != u_obs.size() || u_dir.size() != sensitivity.size()) {
    throw std::invalid_argument("gauss update needs series of equal length");
  }
  const double denom = sensitivity.squaredNorm();
  if (denom == 0.0) {
    throw NonIdentifiableError("sensitivity is identically zero; the parameter direction is not identifiable");
  }
  return p_m + sensitivity.dot(u_obs - u_dir) / denom;
}

std::pair<double, double> convergence_criteria(double p_m, double p_m1, double res_norm_m,
                                               double res_norm_m1) {
  if (p_m == 0.0) throw std::invalid_argument("criteria undefined for a zero parameter");
  if (!(res_norm_m > 0.0)) throw std::invalid_argument("criteria undefined for a zero residual norm");
  const double gamma1 = std::abs(p_m1 - p_m) / std::abs(p_m);
  const double gamma2 = std::abs(res_norm_m1 - res_norm_m) / res_norm_m;
  return {gamma1, gamma2};
}

namespace {

// Shared shape of the two direct models inside the Gauss loop: solve at p,
// sample the sensor, and differentiate the latest solve.
class DirectModel {
 public:
  virtual ~DirectModel() = default;
  virtual Eigen::VectorXd solve_and_sample(double p) = 0;
  /// Sensor sensitivity in Kelvin per dimensional parameter unit, for the
  /// parameter value of the latest solve_and_sample call.
  virtual Eigen::VectorXd sensitivity_of_last() = 0;
};

class FieldModel final : public DirectModel {
 public:
  FieldModel(const WallProblem& problem, const ObservationSchedule& schedule,
             const EstimationOptions& opt)
      : problem_(problem), schedule_(schedule), opt_(opt) {
    switch (opt.param) {
      case ParameterKind::HeatCapacity: p_ref_ = opt.scales.c_ref; break;
      case ParameterKind::Conductivity: p_ref_ = opt.scales.k_ref; break;
      case ParameterKind::SurfaceCoefficientLeft: p_ref_ = opt.scales.h_ref; break;
    }
  }

  Eigen::VectorXd solve_and_sample(double p) override {
    WallProblem problem = problem_;
    apply_parameter(problem, opt_.param, p);
    dp_ = nondimensionalize(problem, opt_.scales);
    grid_ = UniformGrid::for_horizon(opt_.df_node_count, opt_.df_dt_star, dp_.tf_star);
    forward_ = solve_df(dp_, grid_);
    return sample_at_observation(forward_, schedule_);
  }

  Eigen::VectorXd sensitivity_of_last() override {
    const int node = sensor_node_index(forward_, schedule_.x_obs_m);
    const SensitivityTrace trace = solve_sensitivity_df(dp_, grid_, opt_.param, forward_, node);
    // chain rule: dimensionless field and parameter back to K per unit
    return (opt_.scales.T_ref_K / p_ref_) * sample_at_observation(trace, schedule_);
  }

  static void apply_parameter(WallProblem& problem, ParameterKind param, double p) {
    switch (param) {
      case ParameterKind::HeatCapacity: problem.material.c = p; break;
      case ParameterKind::Conductivity: problem.material.k = p; break;
      case ParameterKind::SurfaceCoefficientLeft: problem.hL = p; break;
    }
  }

 private:
  WallProblem problem_;
  ObservationSchedule schedule_;
  EstimationOptions opt_;
  double p_ref_ = 1.0;
  DimensionlessProblem dp_;
  UniformGrid grid_;
  FieldTrace forward_;
};

class LumpedModel final : public DirectModel {
 public:
  LumpedModel(const WallProblem& problem, const ObservationSchedule& schedule,
              const EstimationOptions& opt)
      : problem_(problem), schedule_(schedule), opt_(opt) {}

  Eigen::VectorXd solve_and_sample(double p) override {
    last_problem_ = problem_;
    FieldModel::apply_parameter(last_problem_, opt_.param, p);
    disc_ = RcDiscretization::for_problem(last_problem_, opt_.rc_dt_s);
    forward_ = solve_rc(last_problem_, disc_);
    return sample_at_observation(forward_, schedule_);
  }

  Eigen::VectorXd sensitivity_of_last() override {
    const SensitivityTrace trace =
        solve_sensitivity_rc(last_problem_, disc_, opt_.param, forward_);
    return sample_at_observation(trace, schedule_);
  }

 private:
  WallProblem problem_;
  ObservationSchedule schedule_;
  EstimationOptions opt_;
  WallProblem last_problem_;
  RcDiscretization disc_{};
  NodeTrace forward_;
};

}  // namespace

EstimationResult estimate(const WallProblem& problem, const ObservationSample& obs,
                          const EstimationOptions& options) {
  options.validate();
  problem.validate();
  obs.schedule.validate(problem.tf_s);
  if (obs.values_K.size() != obs.schedule.instants_s.size()) {
    throw std::invalid_argument("observation values do not match the schedule");
  }

  const auto start = std::chrono::steady_clock::now();

  std::unique_ptr<DirectModel> model;
  if (options.model == ModelKind::DuFortFrankel) {
    model = std::make_unique<FieldModel>(problem, obs.schedule, options);
  } else {
    model = std::make_unique<LumpedModel>(problem, obs.schedule, options);
  }

  EstimationResult result;
  result.p_apr = options.p_apr;
  result.p_real = obs.p_real;

  const double p_floor = options.floor_factor * options.p_apr;
  double p = options.p_apr;
  Eigen::VectorXd u_dir = model->solve_and_sample(p);
  double J = cost(u_dir, obs.values_K);

  int m = 0;
  while (m < options.max_iterations) {
    if (J == 0.0) {
      result.converged = true;  // exact fit, nothing left to move
      break;
    }
    const Eigen::VectorXd sensitivity = model->sensitivity_of_last();
    double p_next = gauss_update(p, u_dir, obs.values_K, sensitivity);
    p_next = std::max(p_next, p_floor);

    u_dir = model->solve_and_sample(p_next);
    const double J_next = cost(u_dir, obs.values_K);
    const auto [gamma1, gamma2] = convergence_criteria(p, p_next, J, J_next);

    ++m;
    result.history.push_back({m, p_next, J_next, gamma1, gamma2});
    p = p_next;
    J = J_next;
    if (gamma1 <= options.eta1 && gamma2 <= options.eta2) {
      result.converged = true;
      break;
    }
  }

  result.p_est = p;
  result.iterations = m;
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace heatident
