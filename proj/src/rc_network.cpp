#include "heatident/rc_network.hpp"

#include <stdexcept>
#include <string>

#include "heatident/errors.hpp"

namespace heatident {

RcDiscretization RcDiscretization::for_problem(const WallProblem& problem, double dt_s) {
  return {problem.L_m / 2.0, dt_s};
}

double rc_stability_limit(const Material& material, double ell_m) {
  material.validate();
  return 0.5 * ell_m * ell_m * material.c / material.k;
}

RcSystemMatrices rc_system_matrices(const WallProblem& problem, const RcDiscretization& disc) {
  problem.validate();
  const double k = problem.material.k;
  const double c = problem.material.c;
  const double ell = disc.ell_m;
  const double conductance = k / ell;
  const double beta = k * disc.dt_s / (c * ell * ell);

  RcSystemMatrices sys;
  sys.A << problem.hL + conductance, -conductance, 0.0,  //
      0.0, 1.0, 0.0,                                     //
      0.0, -conductance, problem.hR + conductance;
  sys.B << 0.0, 0.0, 0.0,             //
      beta, 1.0 - 2.0 * beta, beta,   //
      0.0, 0.0, 0.0;
  return sys;
}

Eigen::Vector3d rc_forcing(const WallProblem& problem, double t_s) {
  return {problem.hL * problem.forcing_L(t_s), 0.0, problem.hR * problem.forcing_R(t_s)};
}

NodeTrace solve_rc(const WallProblem& problem, const RcDiscretization& disc) {
  problem.validate();
  const double limit = rc_stability_limit(problem.material, disc.ell_m);
  if (disc.dt_s > limit * (1.0 + 1e-12)) {
    throw std::invalid_argument("lumped-model step " + std::to_string(disc.dt_s) +
                                " s exceeds the stability limit " + std::to_string(limit) + " s");
  }

  const RcSystemMatrices sys = rc_system_matrices(problem, disc);
  const Eigen::PartialPivLU<Eigen::Matrix3d> lu(sys.A);
  const int levels = level_count_for(problem.tf_s, disc.dt_s);

  NodeTrace trace;
  trace.times_s = Eigen::VectorXd::LinSpaced(levels, 0.0, disc.dt_s * (levels - 1));
  trace.T1_K.resize(levels);
  trace.T2_K.resize(levels);
  trace.T3_K.resize(levels);

  Eigen::Vector3d state(problem.T0_K, problem.T0_K, problem.T0_K);
  trace.T1_K(0) = state(0);
  trace.T2_K(0) = state(1);
  trace.T3_K(0) = state(2);

  for (int level = 1; level < levels; ++level) {
    const double t_next = disc.dt_s * level;
    state = lu.solve(sys.B * state + rc_forcing(problem, t_next));
    if (!state.allFinite()) {
      throw SolverError("lumped march diverged at level " + std::to_string(level));
    }
    trace.T1_K(level) = state(0);
    trace.T2_K(level) = state(1);
    trace.T3_K(level) = state(2);
  }
  return trace;
}

}  // namespace heatident
