#include "triad/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "triad/text.hpp"

namespace triad {

Complex3 ExperimentConfig::a0() const {
  return {{{Complex(a0_real[0], a0_imag[0]), Complex(a0_real[1], a0_imag[1]),
            Complex(a0_real[2], a0_imag[2])}}};
}

NoiseAmplitude ExperimentConfig::noise() const { return to_complex3(noise_b); }

Vec3 ExperimentConfig::obs_var() const {
  return {obs_std[0] * obs_std[0], obs_std[1] * obs_std[1],
          obs_std[2] * obs_std[2]};
}

TriadGeometry ExperimentConfig::build_geometry() const {
  return build_triad(k, p, q, parities[0], parities[1], parities[2], gamma);
}

std::size_t ExperimentConfig::assimilation_count() const {
  return std::size_t(std::floor(horizon / da_interval + 1e-9));
}

std::string model_name(ModelKind model) {
  switch (model) {
    case ModelKind::Deterministic: return "det";
    case ModelKind::Hst: return "hst";
    case ModelKind::Est: return "est";
  }
  return "?";
}

ModelKind model_from_name(const std::string& name) {
  if (name == "det" || name == "deterministic") return ModelKind::Deterministic;
  if (name == "hst") return ModelKind::Hst;
  if (name == "est") return ModelKind::Est;
  throw ConfigError("unknown model '" + name + "' (expected det|hst|est)");
}

namespace {

Vec3 parse_vec3(const std::string& key, const std::string& value) {
  const auto parts = split(value, ',');
  if (parts.size() != 3)
    throw ConfigError("config error: '" + key + "' needs 3 components, got " +
                      std::to_string(parts.size()));
  try {
    return {parse_double(parts[0]), parse_double(parts[1]),
            parse_double(parts[2])};
  } catch (const std::invalid_argument& e) {
    throw ConfigError("config error in '" + key + "': " + e.what());
  }
}

WaveVector parse_wave(const std::string& key, const std::string& value) {
  const auto parts = split(value, ',');
  if (parts.size() != 3)
    throw ConfigError("config error: '" + key + "' needs 3 components, got " +
                      std::to_string(parts.size()));
  try {
    return {{int(parse_int(parts[0])), int(parse_int(parts[1])),
             int(parse_int(parts[2]))}};
  } catch (const std::invalid_argument& e) {
    throw ConfigError("config error in '" + key + "': " + e.what());
  }
}

std::vector<double> parse_list(const std::string& key,
                               const std::string& value) {
  std::vector<double> out;
  try {
    for (const auto& part : split(value, ',')) out.push_back(parse_double(part));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("config error in '" + key + "': " + e.what());
  }
  return out;
}

double parse_scalar(const std::string& key, const std::string& value) {
  try {
    return parse_double(value);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("config error in '" + key + "': " + e.what());
  }
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  try {
    const long long v = parse_int(value);
    if (v < 0) throw std::invalid_argument("negative count");
    return std::size_t(v);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("config error in '" + key + "': " + e.what());
  }
}

bool parse_flag(const std::string& key, const std::string& value) {
  try {
    return parse_bool(value);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("config error in '" + key + "': " + e.what());
  }
}

void apply_key(ExperimentConfig& cfg, const std::string& key,
               const std::string& value) {
  if (key == "triad.k") cfg.k = parse_wave(key, value);
  else if (key == "triad.p") cfg.p = parse_wave(key, value);
  else if (key == "triad.q") cfg.q = parse_wave(key, value);
  else if (key == "triad.parities") {
    const auto parts = split(value, ',');
    if (parts.size() != 3)
      throw ConfigError("config error: 'triad.parities' needs 3 components");
    for (int i = 0; i < 3; ++i)
      cfg.parities[i] = Parity(parse_int(parts[i]));
  } else if (key == "triad.gamma") cfg.gamma = parse_vec3(key, value);
  else if (key == "model") cfg.model = model_from_name(trim(value));
  else if (key == "noise.b") cfg.noise_b = parse_vec3(key, value);
  else if (key == "a0.real") cfg.a0_real = parse_vec3(key, value);
  else if (key == "a0.imag") cfg.a0_imag = parse_vec3(key, value);
  else if (key == "time.dt") cfg.dt = parse_scalar(key, value);
  else if (key == "time.horizon") cfg.horizon = parse_scalar(key, value);
  else if (key == "time.record_stride")
    cfg.record_stride = parse_count(key, value);
  else if (key == "filter.da_interval")
    cfg.da_interval = parse_scalar(key, value);
  else if (key == "filter.n_particles")
    cfg.n_particles = parse_count(key, value);
  else if (key == "filter.spread_std")
    cfg.spread_std = parse_scalar(key, value);
  else if (key == "filter.obs_std") cfg.obs_std = parse_vec3(key, value);
  else if (key == "filter.truth_stats") cfg.truth_stats = parse_flag(key, value);
  else if (key == "ensemble.n_realisations")
    cfg.n_realisations = parse_count(key, value);
  else if (key == "repeat.n_runs") cfg.n_runs = parse_count(key, value);
  else if (key == "calib.grid_bk") cfg.grid_bk = parse_list(key, value);
  else if (key == "calib.grid_bp") cfg.grid_bp = parse_list(key, value);
  else if (key == "calib.grid_bq") cfg.grid_bq = parse_list(key, value);
  else if (key == "calib.n_particles")
    cfg.calib_particles = parse_count(key, value);
  else if (key == "calib.horizon") cfg.calib_horizon = parse_scalar(key, value);
  else if (key == "calib.fair_crps") cfg.fair_crps = parse_flag(key, value);
  else if (key == "seed") cfg.seed = std::uint64_t(parse_int(value));
  else if (key == "workers") cfg.workers = int(parse_int(value));
  else if (key == "out_dir") cfg.out_dir = trim(value);
  else
    throw ConfigError("unknown config key: '" + key + "'");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError("config error: " + message);
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  require(cfg.dt > 0, "time.dt must be > 0 (got " + format_double(cfg.dt) + ")");
  require(cfg.horizon > 0, "time.horizon must be > 0");
  require(cfg.record_stride >= 1, "time.record_stride must be >= 1");
  require(cfg.da_interval > 0, "filter.da_interval must be > 0");
  const double ratio = cfg.da_interval / cfg.dt;
  require(std::abs(ratio - std::round(ratio)) * cfg.dt <= 1e-9,
          "filter.da_interval = " + format_double(cfg.da_interval) +
              " is not a multiple of time.dt = " + format_double(cfg.dt));
  require(cfg.n_particles >= 1, "filter.n_particles must be >= 1");
  require(cfg.spread_std >= 0, "filter.spread_std must be >= 0");
  for (double s : cfg.obs_std)
    require(s > 0, "filter.obs_std components must be > 0");
  require(cfg.n_realisations >= 1, "ensemble.n_realisations must be >= 1");
  require(cfg.n_runs >= 1, "repeat.n_runs must be >= 1");
  require(!cfg.grid_bk.empty() && !cfg.grid_bp.empty() && !cfg.grid_bq.empty(),
          "calib grid axes must be non-empty");
  require(cfg.calib_particles >= 1, "calib.n_particles must be >= 1");
  require(cfg.calib_horizon > 0, "calib.horizon must be > 0");
  const double cratio = cfg.da_interval / cfg.dt;
  (void)cratio;
  for (Parity s : cfg.parities)
    require(s == 1 || s == -1, "triad.parities must be +-1");
  try {
    (void)cfg.build_geometry();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config error in triad.*: ") + e.what());
  }
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config error: line " + std::to_string(line_no) +
                        " is not 'key = value': '" + stripped + "'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    apply_key(cfg, key, value);
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  if (path.empty()) {
    ExperimentConfig cfg;
    validate(cfg);
    return cfg;
  }
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

namespace {

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += format_double(values[i]);
  }
  return out;
}

std::string join3(const Vec3& v) {
  return format_double(v[0]) + "," + format_double(v[1]) + "," +
         format_double(v[2]);
}

std::string joinw(const WaveVector& w) {
  return std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
         std::to_string(w[2]);
}

}  // namespace

std::string config_to_string(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "triad.k = " << joinw(cfg.k) << "\n";
  os << "triad.p = " << joinw(cfg.p) << "\n";
  os << "triad.q = " << joinw(cfg.q) << "\n";
  os << "triad.parities = " << cfg.parities[0] << "," << cfg.parities[1] << ","
     << cfg.parities[2] << "\n";
  os << "triad.gamma = " << join3(cfg.gamma) << "\n";
  os << "model = " << model_name(cfg.model) << "\n";
  os << "noise.b = " << join3(cfg.noise_b) << "\n";
  os << "a0.real = " << join3(cfg.a0_real) << "\n";
  os << "a0.imag = " << join3(cfg.a0_imag) << "\n";
  os << "time.dt = " << format_double(cfg.dt) << "\n";
  os << "time.horizon = " << format_double(cfg.horizon) << "\n";
  os << "time.record_stride = " << cfg.record_stride << "\n";
  os << "filter.da_interval = " << format_double(cfg.da_interval) << "\n";
  os << "filter.n_particles = " << cfg.n_particles << "\n";
  os << "filter.spread_std = " << format_double(cfg.spread_std) << "\n";
  os << "filter.obs_std = " << join3(cfg.obs_std) << "\n";
  os << "filter.truth_stats = " << (cfg.truth_stats ? "true" : "false") << "\n";
  os << "ensemble.n_realisations = " << cfg.n_realisations << "\n";
  os << "repeat.n_runs = " << cfg.n_runs << "\n";
  os << "calib.grid_bk = " << join(cfg.grid_bk) << "\n";
  os << "calib.grid_bp = " << join(cfg.grid_bp) << "\n";
  os << "calib.grid_bq = " << join(cfg.grid_bq) << "\n";
  os << "calib.n_particles = " << cfg.calib_particles << "\n";
  os << "calib.horizon = " << format_double(cfg.calib_horizon) << "\n";
  os << "calib.fair_crps = " << (cfg.fair_crps ? "true" : "false") << "\n";
  os << "seed = " << cfg.seed << "\n";
  os << "workers = " << cfg.workers << "\n";
  os << "out_dir = " << cfg.out_dir << "\n";
  return os.str();
}

}  // namespace triad
