#ifndef TRIAD_TEST_SUPPORT_HPP
#define TRIAD_TEST_SUPPORT_HPP

#include <cmath>

#include "triad/helical.hpp"
#include "triad/rng.hpp"

namespace triad::test {

// Reference triad used throughout: k=(1,0,0), p=(0,-1,1), q=(-1,1,-1),
// parities (+,-,-), Gamma=(1,1,1).
inline TriadGeometry reference_triad() {
  return build_triad({{1, 0, 0}}, {{0, -1, 1}}, {{-1, 1, -1}}, +1, -1, -1,
                     {1, 1, 1});
}

inline Complex3 reference_a0() {
  const double c = 1.0 / std::sqrt(3.0);
  return {{{Complex(c, 0), Complex(c, 0), Complex(c, 0)}}};
}

inline Complex3 random_complex3(RngStream& rng, double scale = 1.0) {
  Complex3 a;
  for (int j = 0; j < 3; ++j)
    a[j] = Complex(scale * rng.normal(), scale * rng.normal());
  return a;
}

inline Vec3 random_vec3(RngStream& rng, double scale = 1.0) {
  return {scale * rng.normal(), scale * rng.normal(), scale * rng.normal()};
}

inline WaveVector random_wave(RngStream& rng) {
  WaveVector w;
  do {
    for (int j = 0; j < 3; ++j)
      w[j] = int(rng.uniform() * 7) - 3;  // components in [-3, 3]
  } while (w.is_zero());
  return w;
}

inline Parity random_parity(RngStream& rng) {
  return rng.uniform() < 0.5 ? +1 : -1;
}

/// Random valid triad: k, p sampled, q = -(k+p), all nonzero and
/// non-parallel to gamma, resampled until construction succeeds.
inline TriadGeometry random_triad(RngStream& rng,
                                  const Vec3& gamma = {1, 1, 1}) {
  while (true) {
    const WaveVector k = random_wave(rng);
    const WaveVector p = random_wave(rng);
    const WaveVector q = -(k + p);
    if (q.is_zero()) continue;
    try {
      return build_triad(k, p, q, random_parity(rng), random_parity(rng),
                         random_parity(rng), gamma);
    } catch (const std::invalid_argument&) {
      continue;  // degenerate draw, try again
    }
  }
}

}  // namespace triad::test

#endif  // TRIAD_TEST_SUPPORT_HPP
