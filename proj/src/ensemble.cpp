#include "triad/ensemble.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "triad/parallel.hpp"

namespace triad {

Ensemble init_ensemble(const Complex3& a0, std::size_t n, double spread_std,
                       std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("ensemble needs n >= 1 particles");
  if (spread_std < 0) throw std::invalid_argument("spread_std must be >= 0");
  Ensemble e;
  e.particles.resize(n);
  e.weights.assign(n, 1.0 / double(n));
  e.ancestors.resize(n);
  e.ids.resize(n);
  e.diverged.assign(n, 0);
  std::iota(e.ancestors.begin(), e.ancestors.end(), 0u);
  std::iota(e.ids.begin(), e.ids.end(), 0u);
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng(seed, Stream::kInitEnsemble, i);
    Complex3 a = a0;
    for (int j = 0; j < 3; ++j)
      a[j] += Complex(spread_std * rng.normal(), spread_std * rng.normal());
    e.particles[i] = a;
  }
  return e;
}

void advance_particles(std::vector<Complex3>& particles,
                       std::vector<std::uint8_t>& diverged,
                       const TriadGeometry& geom, ModelKind model,
                       const NoiseAmplitude& b, double dt, std::size_t n_steps,
                       std::vector<RngStream>& streams, int workers) {
  parallel_for(particles.size(), workers,
               [&](std::size_t begin, std::size_t end) {
                 for (std::size_t i = begin; i < end; ++i) {
                   if (diverged[i]) continue;
                   const AdvanceResult res = advance(
                       particles[i], geom, model, b, dt, n_steps, streams[i]);
                   particles[i] = res.a;
                   if (res.diverged) diverged[i] = 1;
                 }
               });
}

Ensemble propagate_ensemble(Ensemble e, const TriadGeometry& geom,
                            ModelKind model, const NoiseAmplitude& b,
                            double dt, double duration,
                            std::uint64_t master_seed, int workers) {
  if (duration < 0) throw std::invalid_argument("duration must be >= 0");
  const double steps_real = duration / dt;
  const auto n_steps = std::size_t(std::llround(steps_real));
  if (std::abs(steps_real - double(n_steps)) > 1e-9)
    throw std::invalid_argument("duration is not a multiple of dt");
  if (n_steps == 0) return e;

  const auto window = std::uint64_t(std::llround(e.t / dt));
  std::vector<RngStream> streams;
  streams.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    streams.emplace_back(master_seed, Stream::kNoisePath, e.ids[i], window);
  advance_particles(e.particles, e.diverged, geom, model, b, dt, n_steps,
                    streams, workers);
  e.t += duration;
  return e;
}

MomentStats ensemble_moments(const std::vector<Vec3>& samples) {
  const std::size_t n = samples.size();
  if (n == 0) throw std::invalid_argument("moments need at least one sample");
  MomentStats out;
  for (int j = 0; j < 3; ++j) {
    double mean = 0;
    for (const Vec3& s : samples) mean += s[j];
    mean /= double(n);
    double m2 = 0, m3 = 0, m4 = 0;
    for (const Vec3& s : samples) {
      const double d = s[j] - mean;
      const double d2 = d * d;
      m2 += d2;
      m3 += d2 * d;
      m4 += d2 * d2;
    }
    m2 /= double(n);
    m3 /= double(n);
    m4 /= double(n);
    out.mean[j] = mean;
    out.stddev[j] = n > 1 ? std::sqrt(m2 * double(n) / double(n - 1)) : 0.0;
    if (m2 > 0 && n >= 3) out.skew[j] = m3 / std::pow(m2, 1.5);
    if (m2 > 0 && n >= 4) out.kurtosis[j] = m4 / (m2 * m2) - 3.0;
  }
  return out;
}

}  // namespace triad
