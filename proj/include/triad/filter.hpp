#ifndef TRIAD_FILTER_HPP
#define TRIAD_FILTER_HPP

#include <stdexcept>
#include <vector>

#include "triad/config.hpp"
#include "triad/ensemble.hpp"

namespace triad {

/// Noisy modal-energy measurement with diagonal error covariance.
struct Observation {
  Vec3 z{};
  double t = 0;
  Vec3 cov_diag{};
};

/// z = modal_energies(truth) + eta, eta ~ N(0, diag(cov_diag)).
Observation observe(const Complex3& truth, const Vec3& cov_diag,
                    RngStream& rng);

/// Raised when every particle carries zero likelihood.
class FilterDegeneracyError : public std::runtime_error {
 public:
  FilterDegeneracyError()
      : std::runtime_error("filter degeneracy: zero total likelihood") {}
};

/// Gaussian likelihood of the observation per particle, combined with the
/// prior weights and normalized to sum 1. Accumulated in log space with
/// max subtraction; diverged particles get weight zero.
std::vector<double> likelihood_weights(const Ensemble& e, const Observation& z);

/// Effective sample size 1 / sum(w^2) of normalized weights.
double ess(const std::vector<double>& weights);

/// Sampling with replacement proportional to the weights. The returned
/// ensemble has uniform weights, composed root ancestry, and freshly
/// issued stream identities.
Ensemble multinomial_resample(Ensemble e, RngStream& rng);

/// Number of distinct root ancestors present in the ensemble.
std::size_t unique_count(const Ensemble& e);

/// bias_j = mean_l H(x_l)_j - ref_j, rmse_j = sqrt(mean_l (H(x_l)_j - ref_j)^2)
/// with H the modal energies.
void bias_and_rmse(const Ensemble& e, const Vec3& ref, Vec3* bias, Vec3* rmse);

/// Per-assimilation-time filter record. The forecast (pre-resampling)
/// ensemble supplies ESS, bias/RMSE and the min/max energy envelopes;
/// unique counts are taken after resampling.
struct FilterDiagnostics {
  std::vector<double> times;
  std::vector<Vec3> bias;             // wrt the observation
  std::vector<Vec3> rmse;
  std::vector<Vec3> bias_truth;       // wrt the latent truth (optional)
  std::vector<Vec3> rmse_truth;
  std::vector<double> ess_series;
  std::vector<std::size_t> unique_counts;
  std::vector<std::size_t> diverged_counts;
  std::vector<Vec3> env_min, env_max, env_mean;
  std::vector<Vec3> observations;
  std::vector<Vec3> truth_energies;
  bool degenerate = false;  // aborted on zero total likelihood

  // Dense envelope series sampled every record_stride steps, for plots.
  std::vector<double> series_times;
  std::vector<Vec3> series_min, series_max, series_mean;

  // Forecast modal energies per assimilation time and particle, kept only
  // when requested (the calibration scoring consumes them).
  std::vector<std::vector<Vec3>> forecast_energies;
};

struct TwinOptions {
  bool store_forecasts = false;
  bool record_series = true;
};

struct TwinResult {
  FilterDiagnostics diag;
  Trajectory truth;  // deterministic signal at record_stride resolution
};

/// Runs the full twin experiment: deterministic truth, noisy modal-energy
/// observations every da_interval, SIR updates with the configured
/// transition kernel. Resampling is unconditional at every assimilation
/// time. On filter degeneracy the partial diagnostics are returned with
/// the degenerate flag set.
TwinResult run_twin_experiment(const ExperimentConfig& cfg,
                               const TwinOptions& options = {});

}  // namespace triad

#endif  // TRIAD_FILTER_HPP
