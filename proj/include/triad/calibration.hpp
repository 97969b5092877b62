#ifndef TRIAD_CALIBRATION_HPP
#define TRIAD_CALIBRATION_HPP

#include <array>
#include <vector>

#include "triad/config.hpp"
#include "triad/filter.hpp"

namespace triad {

/// Score record for one (noise amplitude, model kind) grid cell: mean CRPS
/// per modal energy and overall, plus the rank-histogram counts per mode
/// (n_particles + 1 bins each).
struct ScoreRow {
  Vec3 b{};
  ModelKind model = ModelKind::Hst;
  Vec3 crps_mode{};
  double crps_mean = 0;
  std::array<std::vector<std::size_t>, 3> rank_counts;
  bool degenerate = false;   // zero noise kernel or aborted run
  std::size_t diverged_events = 0;
  std::size_t n_assimilations = 0;
};

struct ScoreTable {
  std::vector<ScoreRow> rows;
};

/// Scores one filtering run: per-mode CRPS of the forecast ensemble
/// against the observation at every assimilation time, averaged over
/// times, plus the observation-rank histogram per mode.
ScoreRow score_filter_run(const ExperimentConfig& cfg);

/// Runs the filtering experiment for every (b_k, b_p, b_q) combination
/// and both stochastic kernels, with per-cell seeds derived from the
/// master seed. Grid cells run concurrently.
ScoreTable grid_sweep(const ExperimentConfig& base);

}  // namespace triad

#endif  // TRIAD_CALIBRATION_HPP
