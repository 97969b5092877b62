#include "triad/filter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace triad {

Observation observe(const Complex3& truth, const Vec3& cov_diag,
                    RngStream& rng) {
  Observation obs;
  obs.cov_diag = cov_diag;
  obs.z = modal_energies(truth);
  for (int j = 0; j < 3; ++j) obs.z[j] += std::sqrt(cov_diag[j]) * rng.normal();
  return obs;
}

std::vector<double> likelihood_weights(const Ensemble& e,
                                       const Observation& obs) {
  const std::size_t n = e.size();
  std::vector<double> logw(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (e.diverged[i] || e.weights[i] <= 0) {
      logw[i] = -std::numeric_limits<double>::infinity();
      continue;
    }
    const Vec3 h = modal_energies(e.particles[i]);
    double acc = std::log(e.weights[i]);
    for (int j = 0; j < 3; ++j) {
      const double d = h[j] - obs.z[j];
      acc -= 0.5 * d * d / obs.cov_diag[j];
    }
    logw[i] = acc;
  }
  const double m = *std::max_element(logw.begin(), logw.end());
  if (!std::isfinite(m)) throw FilterDegeneracyError();
  std::vector<double> w(n);
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::exp(logw[i] - m);
    total += w[i];
  }
  for (double& x : w) x /= total;
  return w;
}

double ess(const std::vector<double>& weights) {
  double sq = 0;
  for (const double w : weights) sq += w * w;
  return 1.0 / sq;
}

Ensemble multinomial_resample(Ensemble e, RngStream& rng) {
  const std::size_t n = e.size();
  std::vector<double> cum(n);
  std::partial_sum(e.weights.begin(), e.weights.end(), cum.begin());
  const double total = cum.back();

  Ensemble out;
  out.t = e.t;
  out.particles.resize(n);
  out.weights.assign(n, 1.0 / double(n));
  out.ancestors.resize(n);
  out.ids.resize(n);
  out.diverged.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform() * total;
    const std::size_t src =
        std::size_t(std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
    out.particles[i] = e.particles[src];
    out.ancestors[i] = e.ancestors[src];
    out.diverged[i] = e.diverged[src];
    out.ids[i] = std::uint32_t(i);  // fresh stream identities
  }
  return out;
}

std::size_t unique_count(const Ensemble& e) {
  std::vector<std::uint32_t> roots = e.ancestors;
  std::sort(roots.begin(), roots.end());
  return std::size_t(std::unique(roots.begin(), roots.end()) - roots.begin());
}

void bias_and_rmse(const Ensemble& e, const Vec3& ref, Vec3* bias, Vec3* rmse) {
  Vec3 sum{}, sq{};
  for (const Complex3& particle : e.particles) {
    const Vec3 h = modal_energies(particle);
    for (int j = 0; j < 3; ++j) {
      const double d = h[j] - ref[j];
      sum[j] += d;
      sq[j] += d * d;
    }
  }
  const double inv = 1.0 / double(e.size());
  for (int j = 0; j < 3; ++j) {
    (*bias)[j] = sum[j] * inv;
    (*rmse)[j] = std::sqrt(sq[j] * inv);
  }
}

namespace {

void energy_envelope(const Ensemble& e, Vec3* lo, Vec3* hi, Vec3* mean) {
  *lo = {std::numeric_limits<double>::infinity(),
         std::numeric_limits<double>::infinity(),
         std::numeric_limits<double>::infinity()};
  *hi = {-std::numeric_limits<double>::infinity(),
         -std::numeric_limits<double>::infinity(),
         -std::numeric_limits<double>::infinity()};
  *mean = {};
  for (const Complex3& particle : e.particles) {
    const Vec3 h = modal_energies(particle);
    for (int j = 0; j < 3; ++j) {
      (*lo)[j] = std::min((*lo)[j], h[j]);
      (*hi)[j] = std::max((*hi)[j], h[j]);
      (*mean)[j] += h[j];
    }
  }
  for (int j = 0; j < 3; ++j) (*mean)[j] /= double(e.size());
}

}  // namespace

TwinResult run_twin_experiment(const ExperimentConfig& cfg,
                               const TwinOptions& options) {
  validate(cfg);
  const TriadGeometry geom = cfg.build_geometry();
  const double dt = cfg.dt;
  const auto steps_per_window = std::size_t(std::llround(cfg.da_interval / dt));
  const std::size_t n_windows = cfg.assimilation_count();
  const NoiseAmplitude b = cfg.noise();
  const Vec3 cov = cfg.obs_var();
  const NoiseAmplitude zero_b{};

  TwinResult result;
  FilterDiagnostics& diag = result.diag;

  Complex3 truth = cfg.a0();
  Ensemble e = init_ensemble(cfg.a0(), cfg.n_particles, cfg.spread_std,
                             cfg.seed);

  auto record_truth = [&](double t) {
    result.truth.times.push_back(t);
    result.truth.states.push_back(truth);
    result.truth.energy_series.push_back(energy(truth));
    result.truth.helicity_series.push_back(helicity(truth, geom));
  };
  auto record_series = [&](double t) {
    if (!options.record_series) return;
    Vec3 lo, hi, mean;
    energy_envelope(e, &lo, &hi, &mean);
    diag.series_times.push_back(t);
    diag.series_min.push_back(lo);
    diag.series_max.push_back(hi);
    diag.series_mean.push_back(mean);
  };
  record_truth(0.0);
  record_series(0.0);

  std::size_t global_step = 0;
  for (std::size_t w = 1; w <= n_windows; ++w) {
    // Window propagation, chunked at record_stride for the dense series.
    std::vector<RngStream> streams;
    streams.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      streams.emplace_back(cfg.seed, Stream::kNoisePath, e.ids[i], global_step);
    std::size_t done = 0;
    while (done < steps_per_window) {
      const std::size_t chunk =
          std::min(cfg.record_stride, steps_per_window - done);
      advance_particles(e.particles, e.diverged, geom, cfg.model, b, dt, chunk,
                        streams, cfg.workers);
      for (std::size_t s = 0; s < chunk; ++s)
        truth = ssprk3_step(truth, geom, ModelKind::Deterministic, zero_b, dt,
                            0.0);
      done += chunk;
      const double t = double(global_step + done) * dt;
      record_truth(t);
      record_series(t);
    }
    global_step += steps_per_window;
    e.t = double(global_step) * dt;
    const double t_assim = e.t;

    // Observation and weighting on the forecast ensemble.
    RngStream obs_rng(cfg.seed, Stream::kObservation, 0, w);
    Observation obs = observe(truth, cov, obs_rng);
    obs.t = t_assim;

    std::vector<double> weights;
    try {
      weights = likelihood_weights(e, obs);
    } catch (const FilterDegeneracyError&) {
      diag.degenerate = true;
      return result;
    }
    e.weights = weights;

    diag.times.push_back(t_assim);
    diag.ess_series.push_back(ess(weights));
    diag.observations.push_back(obs.z);
    diag.truth_energies.push_back(modal_energies(truth));
    Vec3 bias, rmse;
    bias_and_rmse(e, obs.z, &bias, &rmse);
    diag.bias.push_back(bias);
    diag.rmse.push_back(rmse);
    if (cfg.truth_stats) {
      Vec3 bt, rt;
      bias_and_rmse(e, modal_energies(truth), &bt, &rt);
      diag.bias_truth.push_back(bt);
      diag.rmse_truth.push_back(rt);
    }
    Vec3 lo, hi, mean;
    energy_envelope(e, &lo, &hi, &mean);
    diag.env_min.push_back(lo);
    diag.env_max.push_back(hi);
    diag.env_mean.push_back(mean);
    diag.diverged_counts.push_back(std::size_t(
        std::count(e.diverged.begin(), e.diverged.end(), std::uint8_t(1))));
    if (options.store_forecasts) {
      std::vector<Vec3> members(e.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        members[i] = modal_energies(e.particles[i]);
      diag.forecast_energies.push_back(std::move(members));
    }

    RngStream resample_rng(cfg.seed, Stream::kResample, 0, w);
    e = multinomial_resample(std::move(e), resample_rng);
    diag.unique_counts.push_back(unique_count(e));
  }
  return result;
}

}  // namespace triad
