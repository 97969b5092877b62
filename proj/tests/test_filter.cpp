#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "triad/filter.hpp"

using namespace triad;
using namespace triad::test;

TEST_SUITE_BEGIN("filter");

TEST_CASE("observe adds the configured Gaussian noise") {
  const Complex3 a0 = reference_a0();
  {
    RngStream rng(61, Stream::kObservation);
    const Observation obs = observe(a0, {1e-30, 1e-30, 1e-30}, rng);
    const Vec3 me = modal_energies(a0);
    for (int j = 0; j < 3; ++j) CHECK(std::abs(obs.z[j] - me[j]) <= 1e-12);
  }
  const Vec3 cov{0.005 * 0.005, 0.05 * 0.05, 0.05 * 0.05};
  RngStream rng(62, Stream::kObservation);
  Vec3 sum{}, sq{};
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const Observation obs = observe(a0, cov, rng);
    for (int j = 0; j < 3; ++j) {
      const double d = obs.z[j] - modal_energies(a0)[j];
      sum[j] += d;
      sq[j] += d * d;
    }
  }
  for (int j = 0; j < 3; ++j) {
    const double var = sq[j] / n - (sum[j] / n) * (sum[j] / n);
    CHECK(std::abs(var - cov[j]) <= 0.1 * cov[j]);
  }
}

TEST_CASE("likelihood weights: uniform for identical particles") {
  Ensemble e = init_ensemble(reference_a0(), 10, 0.0, 1);
  Observation obs;
  obs.z = modal_energies(reference_a0());
  obs.cov_diag = {1e-4, 1e-4, 1e-4};
  const std::vector<double> w = likelihood_weights(e, obs);
  for (const double wi : w) CHECK(wi == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("likelihood weights: exact two-particle ratio") {
  // Particles whose energies sit at z and z + (sigma_k, 0, 0) weigh
  // 1 : exp(-1/2), i.e. (0.6225, 0.3775) after normalization.
  Ensemble e;
  const double sigma_k = 0.005;
  e.particles = {Complex3{{{Complex(0.5, 0), 0, 0}}},
                 Complex3{{{Complex(std::sqrt(0.25 + sigma_k), 0), 0, 0}}}};
  e.weights = {0.5, 0.5};
  e.ancestors = {0, 1};
  e.ids = {0, 1};
  e.diverged = {0, 0};
  Observation obs;
  obs.z = {0.25, 0.0, 0.0};
  obs.cov_diag = {sigma_k * sigma_k, 1.0, 1.0};
  const std::vector<double> w = likelihood_weights(e, obs);
  const double r = std::exp(-0.5);
  CHECK(w[0] == doctest::Approx(1.0 / (1.0 + r)).epsilon(1e-10));
  CHECK(w[1] == doctest::Approx(r / (1.0 + r)).epsilon(1e-10));
  CHECK(w[0] == doctest::Approx(0.6225).epsilon(1e-3));
  CHECK(w[1] == doctest::Approx(0.3775).epsilon(1e-3));
}

TEST_CASE("likelihood weight concentrates on the matching particle") {
  Ensemble e = init_ensemble(reference_a0(), 3, 0.0, 1);
  e.particles[1] = Complex3{{{Complex(10, 0), Complex(10, 0), Complex(10, 0)}}};
  e.particles[2] = Complex3{{{Complex(20, 0), 0, 0}}};
  Observation obs;
  obs.z = modal_energies(reference_a0());
  obs.cov_diag = {0.01, 0.01, 0.01};
  const std::vector<double> w = likelihood_weights(e, obs);
  CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("degenerate ensembles raise the named error") {
  Ensemble e = init_ensemble(reference_a0(), 3, 0.0, 1);
  e.diverged = {1, 1, 1};
  Observation obs;
  obs.z = {0.3, 0.3, 0.3};
  obs.cov_diag = {0.01, 0.01, 0.01};
  try {
    likelihood_weights(e, obs);
    FAIL("expected degeneracy error");
  } catch (const FilterDegeneracyError& err) {
    CHECK(std::string(err.what()) ==
          "filter degeneracy: zero total likelihood");
  }
}

TEST_CASE("effective sample size") {
  std::vector<double> uniform(100, 0.01);
  CHECK(ess(uniform) == doctest::Approx(100.0).epsilon(1e-12));
  std::vector<double> delta(10, 0.0);
  delta[3] = 1.0;
  CHECK(ess(delta) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ess({0.75, 0.25}) == doctest::Approx(1.6).epsilon(1e-12));
}

TEST_CASE("multinomial resampling") {
  Ensemble e = init_ensemble(reference_a0(), 8, 0.01, 2);
  e.weights.assign(8, 0.0);
  e.weights[5] = 1.0;
  RngStream rng(63, Stream::kResample);
  const Ensemble out = multinomial_resample(e, rng);
  CHECK(out.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(max_abs(out.particles[i] - e.particles[5]) == 0.0);
    CHECK(out.ancestors[i] == 5);
    CHECK(out.weights[i] == doctest::Approx(0.125));
  }
  CHECK(unique_count(out) == 1);

  // Copy counts concentrate around n w_i within binomial bounds.
  Ensemble two = init_ensemble(reference_a0(), 2, 0.01, 3);
  two.weights = {0.3, 0.7};
  int count_first = 0;
  const int trials = 10000;
  RngStream rng2(64, Stream::kResample);
  for (int t = 0; t < trials; ++t) {
    const Ensemble r = multinomial_resample(two, rng2);
    for (const auto anc : r.ancestors) count_first += anc == 0;
  }
  const double expected = 0.3 * 2 * trials;
  const double sigma = std::sqrt(2.0 * trials * 0.3 * 0.7);
  CHECK(std::abs(count_first - expected) <= 3.0 * sigma);
}

TEST_CASE("resampling preserves the weighted energy mean in expectation") {
  Ensemble e = init_ensemble(reference_a0(), 16, 0.05, 4);
  // A deliberately skewed weight vector.
  double total = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    e.weights[i] = double(i + 1);
    total += e.weights[i];
  }
  for (double& w : e.weights) w /= total;
  Vec3 target{};
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int j = 0; j < 3; ++j)
      target[j] += e.weights[i] * modal_energies(e.particles[i])[j];

  RngStream rng(65, Stream::kResample);
  const int trials = 1000;
  Vec3 mean{};
  std::vector<Vec3> trial_means(trials);
  for (int t = 0; t < trials; ++t) {
    const Ensemble r = multinomial_resample(e, rng);
    Vec3 m{};
    for (const Complex3& particle : r.particles)
      for (int j = 0; j < 3; ++j)
        m[j] += modal_energies(particle)[j] / double(r.size());
    trial_means[t] = m;
    for (int j = 0; j < 3; ++j) mean[j] += m[j] / trials;
  }
  for (int j = 0; j < 3; ++j) {
    double var = 0;
    for (const Vec3& m : trial_means)
      var += (m[j] - mean[j]) * (m[j] - mean[j]);
    const double se = std::sqrt(var / (trials - 1)) / std::sqrt(double(trials));
    CHECK(std::abs(mean[j] - target[j]) <= 3.0 * se + 1e-12);
  }
}

TEST_CASE("unique count of a fresh ensemble is n") {
  CHECK(unique_count(init_ensemble(reference_a0(), 25, 0.01, 5)) == 25);
}

TEST_CASE("bias and rmse exact cases") {
  Ensemble e = init_ensemble(reference_a0(), 4, 0.0, 6);
  Vec3 bias, rmse;
  bias_and_rmse(e, modal_energies(reference_a0()), &bias, &rmse);
  for (int j = 0; j < 3; ++j) {
    CHECK(std::abs(bias[j]) <= 1e-14);
    CHECK(std::abs(rmse[j]) <= 1e-14);
  }

  // Two particles straddling the reference: zero bias, rmse = offset.
  Ensemble two;
  two.particles = {Complex3{{{Complex(std::sqrt(0.3), 0), 0, 0}}},
                   Complex3{{{Complex(std::sqrt(0.1), 0), 0, 0}}}};
  two.weights = {0.5, 0.5};
  two.ancestors = {0, 1};
  two.ids = {0, 1};
  two.diverged = {0, 0};
  bias_and_rmse(two, Vec3{0.2, 0, 0}, &bias, &rmse);
  CHECK(std::abs(bias[0]) <= 1e-12);
  CHECK(rmse[0] == doctest::Approx(0.1).epsilon(1e-10));

  // rmse dominates |bias| componentwise.
  RngStream rng(66, Stream::kSeedDerive);
  for (int i = 0; i < 20; ++i) {
    Ensemble r = init_ensemble(reference_a0(), 10, 0.1, 100 + i);
    bias_and_rmse(r, {0.5, 0.2, 0.1}, &bias, &rmse);
    for (int j = 0; j < 3; ++j) CHECK(rmse[j] >= std::abs(bias[j]) - 1e-14);
  }
}

TEST_CASE("deterministic kernel collapses the filter") {
  ExperimentConfig cfg;
  cfg.model = ModelKind::Deterministic;
  cfg.n_particles = 25;
  cfg.horizon = 400.0;
  cfg.seed = 1;
  cfg.workers = 1;
  TwinOptions options;
  options.record_series = false;
  const TwinResult result = run_twin_experiment(cfg, options);
  const FilterDiagnostics& diag = result.diag;
  REQUIRE_FALSE(diag.degenerate);
  REQUIRE(diag.times.size() == 40);

  bool collapsed = false;
  for (std::size_t i = 0; i < diag.unique_counts.size(); ++i)
    collapsed = collapsed || diag.unique_counts[i] == 1;
  CHECK(collapsed);
  // Unique counts only shrink for a deterministic kernel.
  for (std::size_t i = 1; i < diag.unique_counts.size(); ++i)
    CHECK(diag.unique_counts[i] <= diag.unique_counts[i - 1]);
  // Bias and RMSE wander far beyond the observation error.
  double worst = 0;
  for (std::size_t i = 0; i < diag.times.size(); ++i)
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst, diag.rmse[i][j] / cfg.obs_std[j]);
  CHECK(worst > 3.0);
}

TEST_CASE("stochastic kernel keeps weights normalized and ess in range") {
  ExperimentConfig cfg;
  cfg.model = ModelKind::Est;
  cfg.n_particles = 20;
  cfg.horizon = 40.0;
  cfg.seed = 9;
  cfg.workers = 1;
  const TwinResult result = run_twin_experiment(cfg);
  for (const double e : result.diag.ess_series) {
    CHECK(e >= 1.0);
    CHECK(e <= double(cfg.n_particles) + 1e-9);
  }
  REQUIRE_FALSE(result.diag.degenerate);
  // Truth trajectory is recorded at the record stride.
  CHECK(result.truth.times.size() == result.diag.series_times.size());
}

TEST_CASE("identical configuration and seeds give identical diagnostics") {
  ExperimentConfig cfg;
  cfg.model = ModelKind::Hst;
  cfg.n_particles = 15;
  cfg.horizon = 30.0;
  cfg.seed = 77;
  cfg.workers = 1;
  const TwinResult a = run_twin_experiment(cfg);
  cfg.workers = 3;  // worker count must not change anything
  const TwinResult b = run_twin_experiment(cfg);
  REQUIRE(a.diag.times.size() == b.diag.times.size());
  for (std::size_t i = 0; i < a.diag.times.size(); ++i) {
    CHECK(a.diag.ess_series[i] == b.diag.ess_series[i]);
    CHECK(a.diag.unique_counts[i] == b.diag.unique_counts[i]);
    for (int j = 0; j < 3; ++j) {
      CHECK(a.diag.bias[i][j] == b.diag.bias[i][j]);
      CHECK(a.diag.rmse[i][j] == b.diag.rmse[i][j]);
      CHECK(a.diag.observations[i][j] == b.diag.observations[i][j]);
    }
  }
}

TEST_SUITE_END();
