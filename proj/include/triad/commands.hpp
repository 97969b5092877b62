#ifndef TRIAD_COMMANDS_HPP
#define TRIAD_COMMANDS_HPP

#include <string>

#include "triad/config.hpp"

namespace triad {

inline constexpr const char* kVersion = "0.1.0";

/// Default output directory when the config leaves out_dir empty.
inline constexpr const char* kOutDirEnv = "TRIAD_DA_OUT";

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,      // invalid configuration or CLI usage
  kExitDiverged = 3,    // numerical divergence outside an ensemble
  kExitDegenerate = 4,  // filter degeneracy
};

std::string resolve_out_dir(const ExperimentConfig& cfg);

// Each command writes its CSV/SVG artifacts plus a MANIFEST.json naming
// every completed artifact, the config hash, the seed and the version.
// Outputs are a pure function of (config, seed); identical inputs give
// byte-identical files.
int cmd_simulate(const ExperimentConfig& cfg);
int cmd_ensemble(const ExperimentConfig& cfg);
int cmd_filter(const ExperimentConfig& cfg);
int cmd_calibrate(const ExperimentConfig& cfg);
int cmd_repeat(const ExperimentConfig& cfg);

}  // namespace triad

#endif  // TRIAD_COMMANDS_HPP
