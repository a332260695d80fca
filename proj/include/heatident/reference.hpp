#pragma once

#include "heatident/trace.hpp"

namespace heatident {

struct ReferenceOptions {
  /// Refinement stops once two successive grids agree to this bound (K) at
  /// every observation instant.
  double accuracy_target_K = 0.02;
  /// Starting mesh relative to the production field grid (101 nodes,
  /// dt* = 1e-3): both steps divided by this factor.
  int base_refinement = 4;
  /// Grid doublings attempted beyond the starting mesh before giving up.
  int max_doublings = 4;
};

/**
 * Observation-grade solution of the dimensionless field problem.
 *
 * Crank-Nicolson in time with centered ghost-node Robin closures, solved on
 * a mesh at least `base_refinement` times finer than the production grid and
 * re-solved on doubled meshes until two successive solutions differ by less
 * than the accuracy target at all observation instants. The final difference
 * is reported as accuracy_estimate_K. Throws SolverError when the doubling
 * budget is exhausted.
 */
ReferenceTrace solve_reference(const DimensionlessProblem& dp, const ObservationSchedule& schedule,
                               const ReferenceOptions& options = {});

}  // namespace heatident
