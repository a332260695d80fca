#pragma once

#include "heatident/problem.hpp"

namespace heatident {

/**
 * Uniform space-time mesh for the dimensionless field solvers.
 *
 * dx* = 1/(node_count - 1) spans x* in [0, 1]. The march stores
 * level_count time levels including the initial one, with
 * dt* (level_count - 1) covering the requested horizon.
 */
struct UniformGrid {
  double dx_star = 0.0;
  double dt_star = 0.0;
  int node_count = 0;   ///< N_x, >= 5 (one-sided boundary stencils need 3 nodes per side)
  int level_count = 0;  ///< N_t

  /// Builds a grid whose levels cover [0, tf*]. Snaps level_count down when
  /// tf* is an exact multiple of dt*.
  static UniformGrid for_horizon(int node_count, double dt_star, double tf_star);

  void validate() const;
};

/// Number of time levels (including t = 0) needed for dt (n-1) to reach tf.
int level_count_for(double tf, double dt);

/// The DF update coefficient lambda = 2 Fo (k*/c*) dt*/dx*^2.
struct SchemeCoefficients {
  double lambda = 0.0;
};

SchemeCoefficients df_coefficients(const DimensionlessProblem& dp, const UniformGrid& grid);

}  // namespace heatident
