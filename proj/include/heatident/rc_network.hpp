#pragma once

#include <Eigen/Dense>

#include "heatident/trace.hpp"

namespace heatident {

/// Time discretization of the lumped model. ell is the half thickness L/2.
struct RcDiscretization {
  double ell_m = 0.0;
  double dt_s = 0.0;

  static RcDiscretization for_problem(const WallProblem& problem, double dt_s);
};

/// Largest explicit-Euler step that keeps the interior update stable:
/// dt <= ell^2 c / (2 k).
double rc_stability_limit(const Material& material, double ell_m);

/// Coefficients of the one-step linear system A T^{n+1} = B T^n + Q(t^{n+1}).
/// A couples each face node to the interior through k/ell and the surface
/// coefficient; row 1 is the identity row carrying the explicit interior
/// update in B.
struct RcSystemMatrices {
  Eigen::Matrix3d A;
  Eigen::Matrix3d B;
};

RcSystemMatrices rc_system_matrices(const WallProblem& problem, const RcDiscretization& disc);

/// Q(t) = [hL Tinf_L(t), 0, hR Tinf_R(t)]^T.
Eigen::Vector3d rc_forcing(const WallProblem& problem, double t_s);

/**
 * Marches the three-node system over [0, tf].
 *
 * The interior node is advanced explicitly, then both face nodes are solved
 * from the algebraic boundary relations with the ambient signals evaluated
 * at the new time. Rejects steps above the stability limit.
 */
NodeTrace solve_rc(const WallProblem& problem, const RcDiscretization& disc);

}  // namespace heatident
