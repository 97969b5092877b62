#include "triad/calibration.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "triad/parallel.hpp"
#include "triad/scoring.hpp"

namespace triad {

ScoreRow score_filter_run(const ExperimentConfig& cfg) {
  ScoreRow row;
  row.b = cfg.noise_b;
  row.model = cfg.model;
  for (auto& counts : row.rank_counts) counts.assign(cfg.n_particles + 1, 0);
  const bool zero_noise =
      cfg.noise_b[0] == 0 && cfg.noise_b[1] == 0 && cfg.noise_b[2] == 0;

  TwinOptions options;
  options.store_forecasts = true;
  options.record_series = false;
  const TwinResult result = run_twin_experiment(cfg, options);
  const FilterDiagnostics& diag = result.diag;

  row.n_assimilations = diag.times.size();
  row.degenerate = diag.degenerate || zero_noise;
  row.diverged_events = std::accumulate(diag.diverged_counts.begin(),
                                        diag.diverged_counts.end(),
                                        std::size_t(0));
  if (diag.degenerate || diag.times.empty()) {
    // Sentinel score for aborted runs; the row stays in the table.
    const double inf = std::numeric_limits<double>::infinity();
    row.crps_mode = {inf, inf, inf};
    row.crps_mean = inf;
    return row;
  }

  std::array<RngStream, 3> tie_rngs = {
      RngStream(cfg.seed, Stream::kRankTies, 0),
      RngStream(cfg.seed, Stream::kRankTies, 1),
      RngStream(cfg.seed, Stream::kRankTies, 2)};
  Vec3 crps_sum{};
  std::vector<double> members(cfg.n_particles);
  for (std::size_t i = 0; i < diag.times.size(); ++i) {
    for (int j = 0; j < 3; ++j) {
      for (std::size_t l = 0; l < cfg.n_particles; ++l)
        members[l] = diag.forecast_energies[i][l][j];
      const double y = diag.observations[i][j];
      crps_sum[j] += crps_ensemble(members, y, cfg.fair_crps);
      const std::size_t rank = rank_of_observation(members, y, tie_rngs[j]);
      ++row.rank_counts[j][rank];
    }
  }
  for (int j = 0; j < 3; ++j)
    row.crps_mode[j] = crps_sum[j] / double(diag.times.size());
  row.crps_mean =
      (row.crps_mode[0] + row.crps_mode[1] + row.crps_mode[2]) / 3.0;
  return row;
}

ScoreTable grid_sweep(const ExperimentConfig& base) {
  validate(base);
  std::vector<ExperimentConfig> jobs;
  for (const double bk : base.grid_bk)
    for (const double bp : base.grid_bp)
      for (const double bq : base.grid_bq)
        for (const ModelKind model : {ModelKind::Hst, ModelKind::Est}) {
          ExperimentConfig cfg = base;
          cfg.noise_b = {bk, bp, bq};
          cfg.model = model;
          cfg.n_particles = base.calib_particles;
          cfg.horizon = base.calib_horizon;
          cfg.seed = derive_seed(base.seed, jobs.size());
          cfg.workers = 1;  // parallelism lives at the grid level
          jobs.push_back(cfg);
        }

  ScoreTable table;
  table.rows.resize(jobs.size());
  parallel_for(jobs.size(), base.workers,
               [&](std::size_t begin, std::size_t end) {
                 for (std::size_t i = begin; i < end; ++i)
                   table.rows[i] = score_filter_run(jobs[i]);
               });
  return table;
}

}  // namespace triad
