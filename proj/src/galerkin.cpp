#include "triad/galerkin.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace triad {

namespace {

void check_reality(const ModeCoeffs& coeffs) {
  for (const auto& [key, value] : coeffs) {
    const auto& [w, s] = key;
    const auto partner = coeffs.find({-w, s});
    if (partner == coeffs.end())
      throw std::invalid_argument("reality condition violated: mode " +
                                  w.str() + " has no partner at " +
                                  (-w).str());
    if (std::abs(partner->second - std::conj(value)) >
        1e-12 * std::max(1.0, std::abs(value)))
      throw std::invalid_argument(
          "reality condition violated: a_s" + (-w).str() +
          " != conj(a_s" + w.str() + ")");
  }
}

}  // namespace

Complex galerkin_oracle_rhs(const ModeCoeffs& coeffs, const WaveVector& k,
                            Parity s_k, const Vec3& gamma) {
  check_reality(coeffs);
  const Complex3 hk_c = conj(make_helical_vector(k, s_k, gamma));

  struct Mode {
    WaveVector w;
    Parity s;
    double mag;
    Complex a;
    Complex3 h_conj;
  };
  std::vector<Mode> modes;
  modes.reserve(coeffs.size());
  for (const auto& [key, value] : coeffs) {
    const auto& [w, s] = key;
    modes.push_back({w, s, w.magnitude(), value,
                     conj(make_helical_vector(w, s, gamma))});
  }

  // Ordered double sum; each unordered pair {p, q} enters twice with equal
  // summands, absorbed by the 1/8 prefactor.
  Complex acc = 0;
  for (const Mode& mp : modes) {
    for (const Mode& mq : modes) {
      if (!(mp.w + mq.w + k).is_zero()) continue;
      const double factor = mp.s * mp.mag - mq.s * mq.mag;
      if (factor == 0.0) continue;
      acc += factor * std::conj(mp.a) * std::conj(mq.a) *
             triple(mp.h_conj, mq.h_conj, hk_c);
    }
  }
  return 0.125 * acc;
}

ModeCoeffs closed_triad_coeffs(const TriadGeometry& geom, const Complex3& a) {
  ModeCoeffs coeffs;
  const std::array<const WaveVector*, 3> waves = {&geom.k, &geom.p, &geom.q};
  for (int i = 0; i < 3; ++i) {
    coeffs[{*waves[i], geom.parity[i]}] = a[i];
    coeffs[{-*waves[i], geom.parity[i]}] = std::conj(a[i]);
  }
  return coeffs;
}

}  // namespace triad
