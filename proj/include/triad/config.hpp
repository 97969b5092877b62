#ifndef TRIAD_CONFIG_HPP
#define TRIAD_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "triad/dynamics.hpp"
#include "triad/helical.hpp"

namespace triad {

/// Full experiment configuration. Defaults reproduce the reference triad
/// setup: k=(1,0,0), p=(0,-1,1), q=(-1,1,-1) with parities (+,-,-),
/// Gamma=(1,1,1), a0=(1,1,1)/sqrt(3), dt=5e-4, full noise b=(0.1,0.05,0.01),
/// observation std (0.005,0.05,0.05) on the modal energies, assimilation
/// every 10 time units.
struct ExperimentConfig {
  // triad.*
  WaveVector k{{1, 0, 0}};
  WaveVector p{{0, -1, 1}};
  WaveVector q{{-1, 1, -1}};
  std::array<Parity, 3> parities{+1, -1, -1};
  Vec3 gamma{1, 1, 1};

  ModelKind model = ModelKind::Hst;
  Vec3 noise_b{0.1, 0.05, 0.01};

  // a0.*
  Vec3 a0_real{0.5773502691896258, 0.5773502691896258, 0.5773502691896258};
  Vec3 a0_imag{0, 0, 0};

  // time.*
  double dt = 0.0005;
  double horizon = 150.0;
  std::size_t record_stride = 100;

  // filter.*
  double da_interval = 10.0;
  std::size_t n_particles = 100;
  double spread_std = 0.04082482904638630;  // 1/sqrt(600)
  Vec3 obs_std{0.005, 0.05, 0.05};
  bool truth_stats = false;

  // ensemble.*
  std::size_t n_realisations = 20;

  // repeat.*
  std::size_t n_runs = 10;

  // calib.*
  std::vector<double> grid_bk{0.05, 0.1, 0.2, 0.5};
  std::vector<double> grid_bp{0.025, 0.05, 0.1, 0.2};
  std::vector<double> grid_bq{0.01, 0.02, 0.04, 0.1};
  std::size_t calib_particles = 15;
  double calib_horizon = 1400.0;
  bool fair_crps = false;

  std::uint64_t seed = 1;
  int workers = 0;  // 0 = all hardware threads
  std::string out_dir;

  Complex3 a0() const;
  NoiseAmplitude noise() const;
  Vec3 obs_var() const;
  TriadGeometry build_geometry() const;
  std::size_t assimilation_count() const;  // floor(horizon / da_interval)
};

/// Parses flat `key = value` text (dotted keys, '#' comments). Unknown
/// keys, malformed numbers and invariant violations throw ConfigError
/// naming the field. Empty input yields the defaults.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Re-validates every invariant; throws ConfigError naming the field.
void validate(const ExperimentConfig& cfg);

/// Canonical key-value rendering; stable across runs, used for hashing
/// and for the manifests.
std::string config_to_string(const ExperimentConfig& cfg);

std::string model_name(ModelKind model);
ModelKind model_from_name(const std::string& name);

}  // namespace triad

#endif  // TRIAD_CONFIG_HPP
