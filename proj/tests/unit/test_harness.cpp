#include <stdexcept>
#include <cmath>
#include <set>
#include <vector>

#include <doctest.h>

#include "heatident/observation.hpp"
#include "heatident/statistics.hpp"
#include "heatident/study.hpp"

using namespace heatident;

namespace {

// equilibrium problem: the reference trace is constant, which keeps the
// noise-focused tests cheap
WallProblem equilibrium_problem() {
  WallProblem problem;
  problem.material = material_by_id(3);
  problem.forcing_L = ForcingSignal::constant(problem.T0_K);
  problem.forcing_R = ForcingSignal::constant(problem.T0_K);
  return problem;
}

const ReferenceTrace& equilibrium_reference() {
  static const ReferenceTrace trace = solve_reference(
      nondimensionalize(equilibrium_problem()), ObservationSchedule::uniform(0.11, 360.0, 201));
  return trace;
}

}  // namespace

TEST_CASE("seed derivation is deterministic and well spread") {
  CHECK(derive_seed(42, 7) == derive_seed(42, 7));
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) seen.insert(derive_seed(42, s));
  CHECK(seen.size() == 1000);
  CHECK(derive_seed(42, 0) != derive_seed(43, 0));
}

TEST_CASE("gaussian stream: determinism and moments") {
  GaussianStream a(99), b(99), c(100);
  bool all_equal = true;
  bool any_differs = false;
  for (int i = 0; i < 201; ++i) {
    const double draw = a.next();
    all_equal = all_equal && (draw == b.next());
    any_differs = any_differs || (draw != c.next());
  }
  CHECK(all_equal);
  CHECK(any_differs);

  GaussianStream s(7);
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = s.next();
    sum += z;
    sum2 += z * z;
  }
  CHECK(std::abs(sum / n) < 0.02);
  CHECK(std::abs(std::sqrt(sum2 / n) - 1.0) < 0.02);
}

TEST_CASE("observation samples: determinism and zero-noise exactness") {
  const ObservationSchedule schedule = ObservationSchedule::uniform(0.11, 360.0, 201);
  const ReferenceTrace& reference = equilibrium_reference();

  const ObservationSample first = sample_from_reference(reference, schedule, 1.5e6, 0.2, 2024);
  const ObservationSample second = sample_from_reference(reference, schedule, 1.5e6, 0.2, 2024);
  CHECK(first.values_K == second.values_K);
  CHECK(first.noise_K == second.noise_K);

  const ObservationSample other = sample_from_reference(reference, schedule, 1.5e6, 0.2, 2025);
  CHECK(first.values_K != other.values_K);

  const ObservationSample clean = sample_from_reference(reference, schedule, 1.5e6, 0.0, 2024);
  CHECK(clean.values_K == reference.values_K);

  CHECK((first.values_K - reference.values_K - first.noise_K).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("realized noise concentrates like a normal sample mean") {
  const ObservationSchedule schedule = ObservationSchedule::uniform(0.11, 360.0, 201);
  const ReferenceTrace& reference = equilibrium_reference();
  const double sigma = 0.2;
  const double bound = 4.0 * sigma / std::sqrt(201.0);
  int outliers = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const ObservationSample sample =
        sample_from_reference(reference, schedule, 1.5e6, sigma, derive_seed(5, seed));
    if (std::abs(sample.noise_K.mean()) > bound) ++outliers;
  }
  CHECK(outliers <= 2);  // 4-sigma misses happen a few times in 1e4 runs
}

TEST_CASE("generate_observation_sample enforces the accuracy precondition") {
  const ObservationSchedule schedule = ObservationSchedule::uniform(0.11, 360.0, 201);
  const ObservationSample sample =
      generate_observation_sample(equilibrium_problem(), 1.5e6, schedule, 0.2, 11);
  CHECK(sample.values_K.size() == 201);
  CHECK(sample.p_real == 1.5e6);
}

TEST_CASE("summarize") {
  const std::vector<double> v{1.0, 2.0, 3.0};
  const SummaryStatistics stats = summarize(v);
  CHECK(stats.mean == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(stats.std == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(stats.n == 3);

  const std::vector<double> single{5.0};
  CHECK(summarize(single).mean == 5.0);
  CHECK(summarize(single).std == 0.0);

  const std::vector<double> constant(17, 3.25);
  CHECK(summarize(constant).std == 0.0);

  CHECK_THROWS_AS(summarize(std::span<const double>{}), std::invalid_argument);

  // naive two-pass oracle on a pseudorandom sample
  std::vector<double> data;
  GaussianStream g(3);
  for (int i = 0; i < 100; ++i) data.push_back(10.0 + 2.5 * g.next());
  const SummaryStatistics welford = summarize(data);
  double mean = 0.0;
  for (double x : data) mean += x;
  mean /= static_cast<double>(data.size());
  double var = 0.0;
  for (double x : data) var += (x - mean) * (x - mean);
  var /= static_cast<double>(data.size());
  CHECK(welford.mean == doctest::Approx(mean).epsilon(1e-12));
  CHECK(welford.std == doctest::Approx(std::sqrt(var)).epsilon(1e-12));
}

TEST_CASE("case presets reproduce the study configuration") {
  const CaseConfig a = case_presets(CaseId::A_capacity);
  CHECK(a.rows.size() == 5);
  CHECK(a.param == ParameterKind::HeatCapacity);
  CHECK(a.schedule.count() == 201);
  CHECK(a.schedule.x_obs_m == doctest::Approx(0.11));
  CHECK(a.schedule.instants_s(200) == doctest::Approx(72000.0));
  CHECK(a.sigma_obs_K == doctest::Approx(0.2));
  CHECK(a.guess_factor == doctest::Approx(0.1));
  CHECK(a.rows[2].p_real == doctest::Approx(1.5e6));
  CHECK(a.rows[2].problem.hL == doctest::Approx(15.0));
  CHECK(a.rows[2].problem.hR == doctest::Approx(5.0));
  CHECK(a.rows[2].problem.T0_K == doctest::Approx(293.15));

  const CaseConfig b = case_presets(CaseId::B_conductivity);
  CHECK(b.param == ParameterKind::Conductivity);
  CHECK(b.rows[4].p_real == doctest::Approx(2.5));

  const CaseConfig c = case_presets(CaseId::C_surface);
  CHECK(c.param == ParameterKind::SurfaceCoefficientLeft);
  CHECK(c.rows.size() == 4);
  CHECK(c.rows[0].p_real == doctest::Approx(0.5));
  CHECK(c.rows[0].problem.material.id == 3);
  CHECK(c.rows[3].p_real == doctest::Approx(15.0));

  CHECK(parse_case_id("A") == CaseId::A_capacity);
  CHECK(parse_case_id("b_conductivity") == CaseId::B_conductivity);
  CHECK_THROWS_AS(parse_case_id("D"), std::invalid_argument);
}

TEST_CASE("run_case_study: deterministic, paired and worker-count independent") {
  CaseConfig config = case_presets(CaseId::A_capacity);
  config.rows.erase(config.rows.begin() + 1, config.rows.end());  // material 1 only
  config.sample_count = 4;

  const std::vector<ModelKind> models{ModelKind::DuFortFrankel, ModelKind::LumpedRc};
  const ReliabilityReport serial = run_case_study(config, models, 1);
  const ReliabilityReport parallel = run_case_study(config, models, 2);

  REQUIRE(serial.samples.size() == 8);
  REQUIRE(parallel.samples.size() == 8);
  for (std::size_t i = 0; i < serial.samples.size(); ++i) {
    CHECK(serial.samples[i].result.p_est == parallel.samples[i].result.p_est);
    CHECK(serial.samples[i].result.iterations == parallel.samples[i].result.iterations);
    CHECK(serial.samples[i].seed == parallel.samples[i].seed);
  }
  // both models consumed the identical observation sample
  for (int s = 0; s < 4; ++s) {
    CHECK(serial.samples[2 * s].seed == serial.samples[2 * s + 1].seed);
    CHECK(serial.samples[2 * s].model == ModelKind::DuFortFrankel);
    CHECK(serial.samples[2 * s + 1].model == ModelKind::LumpedRc);
  }
  CHECK(serial.stats.size() == 2);
  CHECK(serial.stats[0].ratio.mean == parallel.stats[0].ratio.mean);
  CHECK(serial.stats[0].failures == 0);

  CaseConfig bad = config;
  bad.sample_count = 0;
  CHECK_THROWS_AS(run_case_study(bad, models, 1), std::invalid_argument);
}

TEST_CASE("ratio spread shrinks roughly like one over sqrt(sample count)") {
  CaseConfig config = case_presets(CaseId::A_capacity);
  config.rows.erase(config.rows.begin(), config.rows.begin() + 2);  // keep material 3
  config.rows.erase(config.rows.begin() + 1, config.rows.end());
  const std::vector<ModelKind> models{ModelKind::LumpedRc};

  config.sample_count = 100;
  const ReliabilityReport small = run_case_study(config, models, 0);
  config.sample_count = 400;
  const ReliabilityReport large = run_case_study(config, models, 0);

  // the reported mean's own spread std/sqrt(N) contracts by about 1/2
  const double se_small = small.stats[0].ratio.std / std::sqrt(100.0);
  const double se_large = large.stats[0].ratio.std / std::sqrt(400.0);
  CHECK(se_large > 0.3 * se_small);
  CHECK(se_large < 0.7 * se_small);
}
