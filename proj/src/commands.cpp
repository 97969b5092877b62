#include "triad/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "triad/calibration.hpp"
#include "triad/csv.hpp"
#include "triad/ensemble.hpp"
#include "triad/filter.hpp"
#include "triad/parallel.hpp"
#include "triad/svg.hpp"
#include "triad/text.hpp"

namespace triad {

namespace fs = std::filesystem;

namespace {

// Mode colors shared across all plots.
constexpr const char* kColK = "#d62728";
constexpr const char* kColP = "#1f77b4";
constexpr const char* kColQ = "#2ca02c";
constexpr const char* kColEnergy = "#000000";
constexpr const char* kColHelicity = "#808080";
constexpr const char* kModeName[3] = {"k", "p", "q"};
constexpr const char* kModeColor[3] = {kColK, kColP, kColQ};

class Artifacts {
 public:
  Artifacts(const ExperimentConfig& cfg, std::string command)
      : cfg_(cfg), command_(std::move(command)), dir_(resolve_out_dir(cfg)) {
    fs::create_directories(dir_);
  }

  std::string path(const std::string& name) {
    names_.push_back(name);
    return (dir_ / name).string();
  }

  void write_manifest() {
    nlohmann::json manifest;
    manifest["command"] = command_;
    manifest["artifacts"] = names_;
    manifest["config_hash"] = to_hex(fnv1a64(config_to_string(cfg_)));
    manifest["seed"] = cfg_.seed;
    manifest["version"] = kVersion;
    std::ofstream out(dir_ / "MANIFEST.json", std::ios::binary);
    out << manifest.dump(2) << "\n";
  }

 private:
  const ExperimentConfig& cfg_;
  std::string command_;
  fs::path dir_;
  std::vector<std::string> names_;
};

std::vector<double> column(const std::vector<Vec3>& rows, int j) {
  std::vector<double> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i][j];
  return out;
}

void write_diagnostics_csv(const std::string& path,
                           const FilterDiagnostics& diag, bool truth_stats) {
  CsvWriter csv(path, "triad-da/filter-diagnostics v1");
  std::string header =
      "t,bias_k,bias_p,bias_q,rmse_k,rmse_p,rmse_q,ess,unique,diverged,"
      "obs_k,obs_p,obs_q,truth_me_k,truth_me_p,truth_me_q,"
      "env_min_k,env_min_p,env_min_q,env_max_k,env_max_p,env_max_q,"
      "env_mean_k,env_mean_p,env_mean_q";
  if (truth_stats)
    header +=
        ",bias_truth_k,bias_truth_p,bias_truth_q,"
        "rmse_truth_k,rmse_truth_p,rmse_truth_q";
  csv.raw_header(header);
  for (std::size_t i = 0; i < diag.times.size(); ++i) {
    csv.field(diag.times[i]);
    for (int j = 0; j < 3; ++j) csv.field(diag.bias[i][j]);
    for (int j = 0; j < 3; ++j) csv.field(diag.rmse[i][j]);
    csv.field(diag.ess_series[i]);
    csv.field(diag.unique_counts[i]);
    csv.field(diag.diverged_counts[i]);
    for (int j = 0; j < 3; ++j) csv.field(diag.observations[i][j]);
    for (int j = 0; j < 3; ++j) csv.field(diag.truth_energies[i][j]);
    for (int j = 0; j < 3; ++j) csv.field(diag.env_min[i][j]);
    for (int j = 0; j < 3; ++j) csv.field(diag.env_max[i][j]);
    for (int j = 0; j < 3; ++j) csv.field(diag.env_mean[i][j]);
    if (truth_stats) {
      for (int j = 0; j < 3; ++j) csv.field(diag.bias_truth[i][j]);
      for (int j = 0; j < 3; ++j) csv.field(diag.rmse_truth[i][j]);
    }
    csv.end_row();
  }
}

void plot_filter_envelopes(Artifacts& artifacts, const TwinResult& result) {
  const FilterDiagnostics& diag = result.diag;
  std::vector<double> truth_me[3];
  for (const Complex3& s : result.truth.states) {
    const Vec3 me = modal_energies(s);
    for (int j = 0; j < 3; ++j) truth_me[j].push_back(me[j]);
  }
  for (int j = 0; j < 3; ++j) {
    LineChart chart(std::string("mode ") + kModeName[j] + " energy envelope",
                    "t", "modal energy");
    chart.add_line("ens min", diag.series_times, column(diag.series_min, j),
                   kModeColor[j], 0.7);
    chart.add_line("ens max", diag.series_times, column(diag.series_max, j),
                   kModeColor[j], 0.7);
    chart.add_line("ens mean", diag.series_times, column(diag.series_mean, j),
                   kModeColor[j], 1.8);
    chart.add_line("truth", result.truth.times, truth_me[j], kColHelicity,
                   1.4);
    chart.add_markers("obs", diag.times, column(diag.observations, j),
                      kColEnergy);
    chart.write(artifacts.path(std::string("envelope_") + kModeName[j] +
                               ".svg"));
  }
}

}  // namespace

std::string resolve_out_dir(const ExperimentConfig& cfg) {
  if (!cfg.out_dir.empty()) return cfg.out_dir;
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return ".";
}

int cmd_simulate(const ExperimentConfig& cfg) {
  validate(cfg);
  Artifacts artifacts(cfg, "simulate");
  const TriadGeometry geom = cfg.build_geometry();
  const auto n_steps = std::size_t(std::ceil(cfg.horizon / cfg.dt - 1e-9));
  const NoisePath path = generate_noise_path(cfg.seed, n_steps, cfg.dt);
  const Trajectory traj = integrate(cfg.a0(), geom, cfg.model, cfg.noise(),
                                    cfg.dt, cfg.horizon, path,
                                    cfg.record_stride);

  CsvWriter csv(artifacts.path("trajectory.csv"), "triad-da/trajectory v1");
  csv.header({"t", "re_a_k", "im_a_k", "re_a_p", "im_a_p", "re_a_q", "im_a_q",
              "me_k", "me_p", "me_q", "energy", "helicity"});
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const Complex3& a = traj.states[i];
    const Vec3 me = modal_energies(a);
    csv.field(traj.times[i]);
    for (int j = 0; j < 3; ++j)
      csv.field(a[j].real()).field(a[j].imag());
    for (int j = 0; j < 3; ++j) csv.field(me[j]);
    csv.field(traj.energy_series[i]).field(traj.helicity_series[i]);
    csv.end_row();
  }

  LineChart chart("triad trajectory (" + model_name(cfg.model) + ")", "t",
                  "energy");
  std::vector<double> me[3];
  for (const Complex3& s : traj.states) {
    const Vec3 m = modal_energies(s);
    for (int j = 0; j < 3; ++j) me[j].push_back(m[j]);
  }
  for (int j = 0; j < 3; ++j)
    chart.add_line(std::string("mode ") + kModeName[j], traj.times, me[j],
                   kModeColor[j], 1.4);
  chart.add_line("energy", traj.times, traj.energy_series, kColEnergy, 1.2,
                 "6,3");
  chart.add_line("helicity", traj.times, traj.helicity_series, kColHelicity,
                 1.2, "2,3");
  chart.write(artifacts.path("trajectory.svg"));

  artifacts.write_manifest();
  return traj.diverged ? kExitDiverged : kExitOk;
}

int cmd_ensemble(const ExperimentConfig& cfg) {
  validate(cfg);
  Artifacts artifacts(cfg, "ensemble");
  const TriadGeometry geom = cfg.build_geometry();
  const std::size_t n = cfg.n_realisations;
  const NoiseAmplitude b = cfg.noise();
  const auto n_steps = std::size_t(std::ceil(cfg.horizon / cfg.dt - 1e-9));
  const bool keep_members = n <= 50;

  // All realisations start from the same a0 and differ only in the noise.
  std::vector<Complex3> states(n, cfg.a0());
  std::vector<std::uint8_t> diverged(n, 0);
  std::vector<RngStream> streams;
  streams.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    streams.emplace_back(cfg.seed, Stream::kNoisePath, i, 0);

  std::vector<double> times;
  std::vector<Vec3> mean_me;
  std::vector<double> mean_energy, mean_helicity;
  std::vector<std::size_t> diverged_counts;
  std::vector<MomentStats> moments;
  std::vector<std::vector<Vec3>> member_me;  // [time][realisation]

  std::vector<Vec3> live;
  auto record = [&](double t) {
    live.clear();
    double e_sum = 0, h_sum = 0;
    std::size_t n_live = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (diverged[i]) continue;
      live.push_back(modal_energies(states[i]));
      e_sum += energy(states[i]);
      h_sum += helicity(states[i], geom);
      ++n_live;
    }
    times.push_back(t);
    diverged_counts.push_back(n - n_live);
    if (n_live == 0) {
      mean_me.push_back({});
      mean_energy.push_back(0);
      mean_helicity.push_back(0);
      moments.push_back({});
    } else {
      Vec3 m{};
      for (const Vec3& v : live)
        for (int j = 0; j < 3; ++j) m[j] += v[j];
      for (int j = 0; j < 3; ++j) m[j] /= double(n_live);
      mean_me.push_back(m);
      mean_energy.push_back(e_sum / double(n_live));
      mean_helicity.push_back(h_sum / double(n_live));
      moments.push_back(ensemble_moments(live));
    }
    if (keep_members) {
      std::vector<Vec3> row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = modal_energies(states[i]);
      member_me.push_back(std::move(row));
    }
  };

  record(0.0);
  std::size_t done = 0;
  while (done < n_steps) {
    const std::size_t chunk = std::min(cfg.record_stride, n_steps - done);
    advance_particles(states, diverged, geom, cfg.model, b, cfg.dt, chunk,
                      streams, cfg.workers);
    done += chunk;
    record(double(done) * cfg.dt);
  }

  {
    CsvWriter csv(artifacts.path("realisations.csv"),
                  "triad-da/realisations v1");
    std::string header =
        "t,mean_me_k,mean_me_p,mean_me_q,mean_energy,mean_helicity,"
        "diverged_count";
    if (keep_members)
      for (std::size_t i = 0; i < n; ++i)
        for (int j = 0; j < 3; ++j)
          header += ",r" + std::to_string(i) + "_me_" + kModeName[j];
    csv.raw_header(header);
    for (std::size_t i = 0; i < times.size(); ++i) {
      csv.field(times[i]);
      for (int j = 0; j < 3; ++j) csv.field(mean_me[i][j]);
      csv.field(mean_energy[i]).field(mean_helicity[i]);
      csv.field(diverged_counts[i]);
      if (keep_members)
        for (std::size_t r = 0; r < n; ++r)
          for (int j = 0; j < 3; ++j) csv.field(member_me[i][r][j]);
      csv.end_row();
    }
  }
  {
    CsvWriter csv(artifacts.path("moments.csv"), "triad-da/moments v1");
    csv.header({"t", "mean_k", "mean_p", "mean_q", "std_k", "std_p", "std_q",
                "skew_k", "skew_p", "skew_q", "kurt_k", "kurt_p", "kurt_q"});
    for (std::size_t i = 0; i < times.size(); ++i) {
      csv.field(times[i]);
      for (int j = 0; j < 3; ++j) csv.field(moments[i].mean[j]);
      for (int j = 0; j < 3; ++j) csv.field(moments[i].stddev[j]);
      for (int j = 0; j < 3; ++j) {
        if (moments[i].skew[j]) csv.field(*moments[i].skew[j]);
        else csv.empty_field();
      }
      for (int j = 0; j < 3; ++j) {
        if (moments[i].kurtosis[j]) csv.field(*moments[i].kurtosis[j]);
        else csv.empty_field();
      }
      csv.end_row();
    }
  }

  {
    LineChart chart("model realisations (" + model_name(cfg.model) + ")", "t",
                    "modal energy");
    if (keep_members) {
      for (std::size_t r = 0; r < n; ++r)
        for (int j = 0; j < 3; ++j) {
          std::vector<double> ys(times.size());
          for (std::size_t i = 0; i < times.size(); ++i)
            ys[i] = member_me[i][r][j];
          chart.add_line("", times, ys, kModeColor[j], 0.4);
        }
    }
    for (int j = 0; j < 3; ++j)
      chart.add_line(std::string("mean mode ") + kModeName[j], times,
                     column(mean_me, j), kModeColor[j], 2.0);
    chart.add_line("mean energy", times, mean_energy, kColEnergy, 1.6);
    chart.add_line("mean helicity", times, mean_helicity, kColHelicity, 1.6);
    chart.write(artifacts.path("realisations.svg"));
  }
  const struct {
    const char* name;
    const char* title;
  } kinds[4] = {{"mean", "ensemble mean"},
                {"std", "ensemble standard deviation"},
                {"skew", "ensemble skew"},
                {"kurtosis", "ensemble excess kurtosis"}};
  for (int kind = 0; kind < 4; ++kind) {
    LineChart chart(kinds[kind].title, "t", kinds[kind].name);
    for (int j = 0; j < 3; ++j) {
      std::vector<double> ys(times.size());
      for (std::size_t i = 0; i < times.size(); ++i) {
        const MomentStats& m = moments[i];
        const double nan = std::numeric_limits<double>::quiet_NaN();
        ys[i] = kind == 0   ? m.mean[j]
                : kind == 1 ? m.stddev[j]
                : kind == 2 ? m.skew[j].value_or(nan)
                            : m.kurtosis[j].value_or(nan);
      }
      chart.add_line(std::string("mode ") + kModeName[j], times, ys,
                     kModeColor[j], 1.4);
    }
    chart.write(
        artifacts.path(std::string("moments_") + kinds[kind].name + ".svg"));
  }

  artifacts.write_manifest();
  return kExitOk;
}

int cmd_filter(const ExperimentConfig& cfg) {
  validate(cfg);
  Artifacts artifacts(cfg, "filter");
  TwinOptions options;
  options.record_series = true;
  const TwinResult result = run_twin_experiment(cfg, options);
  const FilterDiagnostics& diag = result.diag;

  write_diagnostics_csv(artifacts.path("diagnostics.csv"), diag,
                        cfg.truth_stats);
  {
    CsvWriter csv(artifacts.path("envelope.csv"), "triad-da/envelope v1");
    csv.header({"t", "env_min_k", "env_min_p", "env_min_q", "env_max_k",
                "env_max_p", "env_max_q", "env_mean_k", "env_mean_p",
                "env_mean_q", "truth_me_k", "truth_me_p", "truth_me_q"});
    for (std::size_t i = 0; i < diag.series_times.size(); ++i) {
      csv.field(diag.series_times[i]);
      for (int j = 0; j < 3; ++j) csv.field(diag.series_min[i][j]);
      for (int j = 0; j < 3; ++j) csv.field(diag.series_max[i][j]);
      for (int j = 0; j < 3; ++j) csv.field(diag.series_mean[i][j]);
      const Vec3 me = modal_energies(result.truth.states[i]);
      for (int j = 0; j < 3; ++j) csv.field(me[j]);
      csv.end_row();
    }
  }

  plot_filter_envelopes(artifacts, result);
  {
    LineChart chart("effective sample size (pre-resampling)", "t", "ESS");
    chart.add_line("ESS", diag.times, diag.ess_series, kColP, 1.5);
    chart.write(artifacts.path("ess.svg"));
  }
  {
    LineChart chart("unique particles", "t", "count");
    std::vector<double> ys(diag.unique_counts.begin(),
                           diag.unique_counts.end());
    chart.add_line("unique", diag.times, ys, kColP, 1.5);
    chart.write(artifacts.path("unique.svg"));
  }
  {
    LineChart chart("ensemble bias wrt observations", "t", "bias");
    for (int j = 0; j < 3; ++j)
      chart.add_line(std::string("mode ") + kModeName[j], diag.times,
                     column(diag.bias, j), kModeColor[j], 1.4);
    chart.write(artifacts.path("bias.svg"));
  }
  {
    LineChart chart("ensemble RMSE wrt observations", "t", "RMSE");
    for (int j = 0; j < 3; ++j)
      chart.add_line(std::string("mode ") + kModeName[j], diag.times,
                     column(diag.rmse, j), kModeColor[j], 1.4);
    chart.write(artifacts.path("rmse.svg"));
  }

  artifacts.write_manifest();
  return diag.degenerate ? kExitDegenerate : kExitOk;
}

int cmd_calibrate(const ExperimentConfig& cfg) {
  validate(cfg);
  Artifacts artifacts(cfg, "calibrate");
  const ScoreTable table = grid_sweep(cfg);

  {
    CsvWriter csv(artifacts.path("scores.csv"), "triad-da/scores v1");
    csv.header({"b_k", "b_p", "b_q", "model", "crps_k", "crps_p", "crps_q",
                "crps_mean", "degenerate", "diverged_events",
                "n_assimilations"});
    for (const ScoreRow& row : table.rows) {
      for (int j = 0; j < 3; ++j) csv.field(row.b[j]);
      csv.field(model_name(row.model));
      for (int j = 0; j < 3; ++j) csv.field(row.crps_mode[j]);
      csv.field(row.crps_mean);
      csv.field(std::string_view(row.degenerate ? "true" : "false"));
      csv.field(row.diverged_events);
      csv.field(row.n_assimilations);
      csv.end_row();
    }
  }
  {
    CsvWriter csv(artifacts.path("rank_histograms.csv"),
                  "triad-da/rank-histograms v1");
    std::string header = "b_k,b_p,b_q,model,mode";
    const std::size_t bins = cfg.calib_particles + 1;
    for (std::size_t i = 0; i < bins; ++i)
      header += ",bin_" + std::to_string(i);
    csv.raw_header(header);
    for (const ScoreRow& row : table.rows) {
      for (int j = 0; j < 3; ++j) {
        for (int c = 0; c < 3; ++c) csv.field(row.b[c]);
        csv.field(model_name(row.model));
        csv.field(std::string_view(kModeName[j]));
        for (const std::size_t count : row.rank_counts[j]) csv.field(count);
        csv.end_row();
      }
    }
  }

  // Overall mean per noise vector across the two kernels, paper-table style.
  struct Overall {
    Vec3 b;
    double hst = 0, est = 0;
    double mean() const { return 0.5 * (hst + est); }
  };
  std::vector<Overall> overall;
  for (std::size_t i = 0; i + 1 < table.rows.size(); i += 2) {
    Overall o;
    o.b = table.rows[i].b;
    for (std::size_t j : {i, i + 1}) {
      const ScoreRow& row = table.rows[j];
      (row.model == ModelKind::Hst ? o.hst : o.est) = row.crps_mean;
    }
    overall.push_back(o);
  }
  std::stable_sort(overall.begin(), overall.end(),
                   [](const Overall& a, const Overall& b) {
                     return a.mean() < b.mean();
                   });
  {
    CsvWriter csv(artifacts.path("scores_by_noise.csv"),
                  "triad-da/scores-by-noise v1");
    csv.header({"rank", "b_k", "b_p", "b_q", "crps_est", "crps_hst",
                "crps_mean"});
    for (std::size_t i = 0; i < overall.size(); ++i) {
      csv.field(i + 1);
      for (int j = 0; j < 3; ++j) csv.field(overall[i].b[j]);
      csv.field(overall[i].est).field(overall[i].hst);
      csv.field(overall[i].mean());
      csv.end_row();
    }
  }
  const std::size_t n_top = std::min<std::size_t>(5, overall.size());
  for (std::size_t t = 0; t < n_top; ++t) {
    for (const ScoreRow& row : table.rows) {
      if (!(row.b == overall[t].b)) continue;
      BarChart chart("rank histograms, b=(" + format_double(row.b[0]) + "," +
                     format_double(row.b[1]) + "," + format_double(row.b[2]) +
                     "), " + model_name(row.model));
      for (int j = 0; j < 3; ++j)
        chart.add_panel(std::string("mode ") + kModeName[j],
                        row.rank_counts[j], kModeColor[j]);
      chart.write(artifacts.path("hist_top" + std::to_string(t + 1) + "_" +
                                 model_name(row.model) + ".svg"));
    }
  }

  artifacts.write_manifest();
  return kExitOk;
}

int cmd_repeat(const ExperimentConfig& cfg) {
  validate(cfg);
  Artifacts artifacts(cfg, "repeat");
  std::vector<FilterDiagnostics> runs(cfg.n_runs);
  bool any_degenerate = false;
  TwinOptions options;
  options.record_series = false;
  for (std::size_t r = 0; r < cfg.n_runs; ++r) {
    ExperimentConfig run_cfg = cfg;
    run_cfg.seed = derive_seed(cfg.seed, r);
    runs[r] = run_twin_experiment(run_cfg, options).diag;
    any_degenerate = any_degenerate || runs[r].degenerate;
    write_diagnostics_csv(
        artifacts.path("diagnostics_run" + std::to_string(r) + ".csv"),
        runs[r], cfg.truth_stats);
  }

  std::size_t common = std::numeric_limits<std::size_t>::max();
  for (const FilterDiagnostics& d : runs)
    common = std::min(common, d.times.size());

  CsvWriter csv(artifacts.path("mean_diagnostics.csv"),
                "triad-da/mean-diagnostics v1");
  csv.header({"t",
              "mean_bias_k", "min_bias_k", "max_bias_k",
              "mean_bias_p", "min_bias_p", "max_bias_p",
              "mean_bias_q", "min_bias_q", "max_bias_q",
              "mean_rmse_k", "min_rmse_k", "max_rmse_k",
              "mean_rmse_p", "min_rmse_p", "max_rmse_p",
              "mean_rmse_q", "min_rmse_q", "max_rmse_q",
              "mean_ess", "mean_unique"});
  std::vector<double> times(common);
  Vec3 zeros{};
  std::vector<std::array<std::vector<double>, 3>> agg(6);
  for (auto& a : agg)
    for (auto& v : a) v.assign(common, 0);
  for (std::size_t i = 0; i < common; ++i) {
    times[i] = runs[0].times[i];
    double ess_sum = 0, unique_sum = 0;
    Vec3 bias_mean = zeros, bias_lo = runs[0].bias[i], bias_hi = runs[0].bias[i];
    Vec3 rmse_mean = zeros, rmse_lo = runs[0].rmse[i], rmse_hi = runs[0].rmse[i];
    for (const FilterDiagnostics& d : runs) {
      for (int j = 0; j < 3; ++j) {
        bias_mean[j] += d.bias[i][j];
        bias_lo[j] = std::min(bias_lo[j], d.bias[i][j]);
        bias_hi[j] = std::max(bias_hi[j], d.bias[i][j]);
        rmse_mean[j] += d.rmse[i][j];
        rmse_lo[j] = std::min(rmse_lo[j], d.rmse[i][j]);
        rmse_hi[j] = std::max(rmse_hi[j], d.rmse[i][j]);
      }
      ess_sum += d.ess_series[i];
      unique_sum += double(d.unique_counts[i]);
    }
    const double inv = 1.0 / double(cfg.n_runs);
    csv.field(times[i]);
    for (int j = 0; j < 3; ++j) {
      csv.field(bias_mean[j] * inv).field(bias_lo[j]).field(bias_hi[j]);
      agg[j][0][i] = bias_mean[j] * inv;
      agg[j][1][i] = bias_lo[j];
      agg[j][2][i] = bias_hi[j];
    }
    for (int j = 0; j < 3; ++j) {
      csv.field(rmse_mean[j] * inv).field(rmse_lo[j]).field(rmse_hi[j]);
      agg[3 + j][0][i] = rmse_mean[j] * inv;
      agg[3 + j][1][i] = rmse_lo[j];
      agg[3 + j][2][i] = rmse_hi[j];
    }
    csv.field(ess_sum * inv).field(unique_sum * inv);
    csv.end_row();
  }

  for (int j = 0; j < 3; ++j) {
    LineChart chart(std::string("mean bias across runs, mode ") + kModeName[j],
                    "t", "bias");
    chart.add_line("mean", times, agg[j][0], kModeColor[j], 1.8);
    chart.add_line("min", times, agg[j][1], kModeColor[j], 0.7);
    chart.add_line("max", times, agg[j][2], kModeColor[j], 0.7);
    chart.write(artifacts.path(std::string("repeat_bias_") + kModeName[j] +
                               ".svg"));
    LineChart rchart(std::string("mean RMSE across runs, mode ") +
                         kModeName[j],
                     "t", "RMSE");
    rchart.add_line("mean", times, agg[3 + j][0], kModeColor[j], 1.8);
    rchart.add_line("min", times, agg[3 + j][1], kModeColor[j], 0.7);
    rchart.add_line("max", times, agg[3 + j][2], kModeColor[j], 0.7);
    rchart.write(artifacts.path(std::string("repeat_rmse_") + kModeName[j] +
                                ".svg"));
  }

  artifacts.write_manifest();
  return any_degenerate ? kExitDegenerate : kExitOk;
}

}  // namespace triad
