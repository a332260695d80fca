#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "heatident/observation.hpp"
#include "heatident/sensitivity.hpp"

namespace heatident {

struct EstimationOptions {
  ModelKind model = ModelKind::DuFortFrankel;
  ParameterKind param = ParameterKind::HeatCapacity;
  double p_apr = 0.0;  ///< initial guess, dimensional parameter units
  double eta1 = 1e-6;  ///< threshold on the relative parameter change
  double eta2 = 1e-6;  ///< threshold on the relative residual-norm change
  int max_iterations = 100;
  /// The iterate is projected onto [floor_factor * p_apr, inf) after each
  /// update; non-positive parameter values are unphysical.
  double floor_factor = 1e-3;
  int df_node_count = 101;
  double df_dt_star = 1e-3;
  double rc_dt_s = 3.6;
  ReferenceScales scales{};

  void validate() const;
};

struct IterationRecord {
  int m = 0;          ///< iteration index, starting at 1
  double p = 0.0;     ///< parameter after this update
  double J = 0.0;     ///< cost at p
  double gamma1 = 0.0;
  double gamma2 = 0.0;
};

struct EstimationResult {
  double p_est = 0.0;
  double p_apr = 0.0;
  int iterations = 0;  ///< N_m, number of updates performed
  bool converged = false;
  std::vector<IterationRecord> history;
  double wall_time_s = 0.0;
  /// Generating value copied from the observation sample (NaN when unknown).
  double p_real = std::numeric_limits<double>::quiet_NaN();
};

/// Mean squared mismatch over the observation instants.
double cost(const Eigen::VectorXd& u_dir, const Eigen::VectorXd& u_obs);

/// One least-squares step: p + sum S (obs - dir) / sum S^2. Throws
/// NonIdentifiableError when the sensitivity is identically zero.
double gauss_update(double p_m, const Eigen::VectorXd& u_dir, const Eigen::VectorXd& u_obs,
                    const Eigen::VectorXd& sensitivity);

/// (gamma1, gamma2): relative change of the parameter and of the residual
/// norm. Throws on zero denominators.
std::pair<double, double> convergence_criteria(double p_m, double p_m1, double res_norm_m,
                                               double res_norm_m1);

/**
 * Scalar parameter identification by the Gauss iteration.
 *
 * Alternates forward solve, sensitivity solve and least-squares update until
 * both stopping criteria fall below their thresholds or the iteration cap is
 * reached (converged = false in that case; the result is still returned).
 * The unknown parameter is handled in dimensional units; field-model
 * sensitivities are converted through the constant reference scales.
 */
EstimationResult estimate(const WallProblem& problem, const ObservationSample& obs,
                          const EstimationOptions& options);

}  // namespace heatident
