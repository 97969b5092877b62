#ifndef TRIAD_ENSEMBLE_HPP
#define TRIAD_ENSEMBLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "triad/integrator.hpp"

namespace triad {

/// Modal energies (|a_k|^2, |a_p|^2, |a_q|^2).
inline Vec3 modal_energies(const Complex3& a) {
  return {std::norm(a[0]), std::norm(a[1]), std::norm(a[2])};
}

/// Weighted particle ensemble. `ancestors` carries the root lineage index
/// into the initial ensemble; `ids` are the stream identities the noise is
/// keyed by, which travel with particles and are reissued on resampling.
struct Ensemble {
  std::vector<Complex3> particles;
  std::vector<double> weights;
  std::vector<std::uint32_t> ancestors;
  std::vector<std::uint32_t> ids;
  std::vector<std::uint8_t> diverged;
  double t = 0.0;

  std::size_t size() const { return particles.size(); }
};

/// n particles drawn around a0 with i.i.d. Gaussian perturbations of
/// standard deviation spread_std on each of the six scalar components;
/// uniform weights. a0 itself is not inserted.
Ensemble init_ensemble(const Complex3& a0, std::size_t n, double spread_std,
                       std::uint64_t seed);

/// Advances every non-diverged particle by n_steps using its own stream.
/// Diverged particles keep their last finite state and get flagged.
void advance_particles(std::vector<Complex3>& particles,
                       std::vector<std::uint8_t>& diverged,
                       const TriadGeometry& geom, ModelKind model,
                       const NoiseAmplitude& b, double dt, std::size_t n_steps,
                       std::vector<RngStream>& streams, int workers);

/// Propagates the ensemble by `duration` (a multiple of dt). Each particle
/// integrates independently with the stream (master_seed, particle id,
/// window), window being the global step index at the window start, so the
/// result is invariant under particle reordering and worker count.
/// Weights and ancestry are untouched.
Ensemble propagate_ensemble(Ensemble e, const TriadGeometry& geom,
                            ModelKind model, const NoiseAmplitude& b,
                            double dt, double duration,
                            std::uint64_t master_seed, int workers = 1);

/// Pointwise sample statistics per component. Skew and kurtosis are the
/// biased moment forms m3/m2^(3/2) and m4/m2^2 - 3 (excess); both are
/// undefined markers when the variance vanishes. The standard deviation
/// uses the n-1 divisor.
struct MomentStats {
  Vec3 mean{};
  Vec3 stddev{};
  std::array<std::optional<double>, 3> skew{};
  std::array<std::optional<double>, 3> kurtosis{};
};

MomentStats ensemble_moments(const std::vector<Vec3>& samples);

/// Time series of ensemble moments of the modal energies.
struct MomentSeries {
  std::vector<double> times;
  std::vector<MomentStats> stats;
};

}  // namespace triad

#endif  // TRIAD_ENSEMBLE_HPP
