#pragma once

#include <cstdint>

#include "heatident/reference.hpp"
#include "heatident/rng.hpp"

namespace heatident {

/// One synthetic measurement series: reference solution plus i.i.d. Gaussian
/// noise. The realized draws are retained for audit.
struct ObservationSample {
  ObservationSchedule schedule;
  Eigen::VectorXd values_K;
  double sigma_obs_K = 0.0;
  std::uint64_t seed = 0;
  double p_real = 0.0;  ///< parameter value used to generate the series
  Eigen::VectorXd noise_K;
};

/// Adds a fresh noise realization to an already computed reference trace.
ObservationSample sample_from_reference(const ReferenceTrace& reference,
                                        const ObservationSchedule& schedule, double p_real,
                                        double sigma_obs_K, std::uint64_t seed);

/**
 * Solves the reference problem and perturbs it with Gaussian noise.
 *
 * The reference accuracy estimate must come in below sigma_obs/10 (no
 * constraint when sigma_obs = 0), otherwise the observations would be
 * contaminated by solver error and the call throws.
 */
ObservationSample generate_observation_sample(const WallProblem& problem, double p_real,
                                              const ObservationSchedule& schedule,
                                              double sigma_obs_K, std::uint64_t seed,
                                              const ReferenceScales& scales = {});

}  // namespace heatident
