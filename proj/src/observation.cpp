#include "heatident/observation.hpp"

#include <stdexcept>
#include <string>

namespace heatident {

ObservationSample sample_from_reference(const ReferenceTrace& reference,
                                        const ObservationSchedule& schedule, double p_real,
                                        double sigma_obs_K, std::uint64_t seed) {
  if (reference.values_K.size() != schedule.instants_s.size()) {
    throw std::invalid_argument("reference trace does not match the observation schedule");
  }
  if (sigma_obs_K < 0.0) throw std::invalid_argument("noise level must be non-negative");

  ObservationSample sample;
  sample.schedule = schedule;
  sample.sigma_obs_K = sigma_obs_K;
  sample.seed = seed;
  sample.p_real = p_real;

  GaussianStream stream(seed);
  sample.noise_K.resize(reference.values_K.size());
  for (Eigen::Index k = 0; k < sample.noise_K.size(); ++k) {
    sample.noise_K(k) = sigma_obs_K * stream.next();
  }
  sample.values_K = reference.values_K + sample.noise_K;
  return sample;
}

ObservationSample generate_observation_sample(const WallProblem& problem, double p_real,
                                              const ObservationSchedule& schedule,
                                              double sigma_obs_K, std::uint64_t seed,
                                              const ReferenceScales& scales) {
  ReferenceOptions options;
  options.accuracy_target_K = sigma_obs_K > 0.0 ? sigma_obs_K / 10.0 : 1e-3;
  const ReferenceTrace reference =
      solve_reference(nondimensionalize(problem, scales), schedule, options);
  if (sigma_obs_K > 0.0 && !(reference.accuracy_estimate_K < sigma_obs_K / 10.0)) {
    throw std::invalid_argument(
        "reference accuracy " + std::to_string(reference.accuracy_estimate_K) +
        " K is not below a tenth of the observation noise; observations would be contaminated");
  }
  return sample_from_reference(reference, schedule, p_real, sigma_obs_K, seed);
}

}  // namespace heatident
