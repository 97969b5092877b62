#ifndef TRIAD_INTEGRATOR_HPP
#define TRIAD_INTEGRATOR_HPP

#include <cstdint>
#include <vector>

#include "triad/dynamics.hpp"
#include "triad/rng.hpp"

namespace triad {

/// Precomputed Brownian increments, each ~ N(0, dt). One scalar path
/// drives all three modes of a trajectory.
struct NoisePath {
  std::uint64_t seed = 0;
  double dt = 0;
  std::vector<double> increments;
};

/// Draws n_steps i.i.d. Gaussian increments with variance dt from the
/// counter-based stream (seed, particle, window). Same key, same path.
NoisePath generate_noise_path(std::uint64_t seed, std::size_t n_steps,
                              double dt, std::uint64_t particle = 0,
                              std::uint64_t window = 0);

/// One step of the stochastic SSPRK3 scheme:
///   q1 = a + F(a) dt + G(a) dW
///   q2 = 3/4 a + 1/4 (q1 + F(q1) dt + G(q1) dW)
///   a' = 1/3 a + 2/3 (q2 + F(q2) dt + G(q2) dW)
/// with drift F, model diffusion G, and the same dW in all three stages.
/// No Ito/Stratonovich correction terms are added; the discrete scheme is
/// the model. A vanishing noise amplitude takes the deterministic code
/// path, so b = 0 reproduces the deterministic step bit for bit.
Complex3 ssprk3_step(const Complex3& a, const TriadGeometry& geom,
                     ModelKind model, const NoiseAmplitude& b, double dt,
                     double dW);

/// Steps n_steps times, drawing one increment per step from the stream.
/// Stops early when the state trips the blow-up threshold.
struct AdvanceResult {
  Complex3 a;
  bool diverged = false;
  std::size_t steps_taken = 0;
};
AdvanceResult advance(const Complex3& a0, const TriadGeometry& geom,
                      ModelKind model, const NoiseAmplitude& b, double dt,
                      std::size_t n_steps, RngStream& noise);

/// Uniformly sampled trajectory record with conservation diagnostics.
struct Trajectory {
  std::vector<double> times;
  std::vector<Complex3> states;
  std::vector<double> energy_series;
  std::vector<double> helicity_series;
  bool diverged = false;
  double divergence_time = -1;
};

/// Integrates from t = 0 to t = T, recording every record_stride-th state
/// together with energy and helicity. The trajectory is truncated at the
/// first diverged state (which is not recorded).
/// Throws std::invalid_argument when the noise path is shorter than
/// ceil(T/dt) or was generated with a different dt.
Trajectory integrate(const Complex3& a0, const TriadGeometry& geom,
                     ModelKind model, const NoiseAmplitude& b, double dt,
                     double T, const NoisePath& noise,
                     std::size_t record_stride = 100);

}  // namespace triad

#endif  // TRIAD_INTEGRATOR_HPP
