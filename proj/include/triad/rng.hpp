#ifndef TRIAD_RNG_HPP
#define TRIAD_RNG_HPP

#include <array>
#include <cstdint>

namespace triad {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// Outputs are a pure function of (key, counter), so independent streams
// are carved out of the counter space instead of jumping a shared state;
// results cannot depend on thread scheduling.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key);

/// Role tag separating the random streams of one experiment.
enum class Stream : std::uint32_t {
  kNoisePath = 0,
  kInitEnsemble = 1,
  kObservation = 2,
  kResample = 3,
  kRankTies = 4,
  kSeedDerive = 5,
};

/// One independent random stream keyed by (seed, purpose, particle, window).
/// Same key => bit-identical sequence on the same build.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, Stream purpose,
                     std::uint64_t particle = 0, std::uint64_t window = 0);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform double in (0, 1].
  double uniform();

  /// Standard normal via Box-Muller on consecutive uniforms.
  double normal();

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint32_t id0_, id1_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int buf_pos_ = 4;
  double pending_normal_ = 0;
  bool has_pending_ = false;
};

/// Deterministically derives an independent sub-seed, e.g. one per
/// repeated run or per calibration grid cell.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace triad

#endif  // TRIAD_RNG_HPP
