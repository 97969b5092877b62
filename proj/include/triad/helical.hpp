#ifndef TRIAD_HELICAL_HPP
#define TRIAD_HELICAL_HPP

#include <array>
#include <string>

#include "triad/complex3.hpp"

namespace triad {

/// Integer wave vector in units of 2*pi/L.
struct WaveVector {
  std::array<int, 3> c{};

  int& operator[](std::size_t i) { return c[i]; }
  int operator[](std::size_t i) const { return c[i]; }

  bool operator==(const WaveVector&) const = default;
  auto operator<=>(const WaveVector&) const = default;

  WaveVector operator-() const { return {{-c[0], -c[1], -c[2]}}; }
  WaveVector operator*(int m) const { return {{m * c[0], m * c[1], m * c[2]}}; }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
  Vec3 to_vec3() const {
    return {double(c[0]), double(c[1]), double(c[2])};
  }
  double magnitude() const { return norm(to_vec3()); }
  std::string str() const;
};

inline WaveVector operator+(const WaveVector& a, const WaveVector& b) {
  return {{a[0] + b[0], a[1] + b[1], a[2] + b[2]}};
}

/// Helicity sign selecting h_+ or h_-.
using Parity = int;  // +1 or -1

/// Builds the helical vector h_s(k) = nu x kappa + i s nu with
/// kappa = k/|k| and nu = (k x Gamma)/|k x Gamma|.
///
/// Throws std::invalid_argument when k is zero or parallel to gamma;
/// the orientation of h depends on gamma, so no fallback is chosen.
Complex3 make_helical_vector(const WaveVector& k, Parity s, const Vec3& gamma);

/// Fixed triad interaction geometry: wave vectors, parities, helical
/// vectors, the interaction constant g and the diagonal matrix D.
struct TriadGeometry {
  WaveVector k, p, q;
  std::array<Parity, 3> parity{};  // (s_k, s_p, s_q)
  Vec3 gamma{};
  Complex3 h_k, h_p, h_q;
  Complex g{};
  Vec3 d_diag{};      // (s_k|k|, s_p|p|, s_q|q|)
  Vec3 magnitudes{};  // (|k|, |p|, |q|)
};

/// Assembles a TriadGeometry for k + p + q = 0.
///
/// g = -(1/4) h_{s_p}(p)* x h_{s_q}(q)* . h_{s_k}(k)*; it depends on the
/// shape and orientation of the triad but not on its scale.
/// Throws std::invalid_argument when the closure fails (the message names
/// the offending sum) or any member is degenerate with respect to gamma.
TriadGeometry build_triad(const WaveVector& k, const WaveVector& p,
                          const WaveVector& q, Parity s_k, Parity s_p,
                          Parity s_q, const Vec3& gamma);

/// Per-identity maximum absolute residuals of the helical-basis relations.
struct BasisReport {
  double transversality = 0;    // |k . h_s(k)|
  double curl_eigen = 0;        // |i k x h_s(k) - s|k| h_s(k)|
  double norm = 0;              // ||h_s(k)|^2 - 2|
  double orthogonality = 0;     // |h_+(k) . h_-(k)*|
  double g_scale = 0;           // |g(mk,mp,mq) - g(k,p,q)|, m = 2, 3

  double max_residual() const {
    return std::max({transversality, curl_eigen, norm, orthogonality, g_scale});
  }
};

/// Evaluates all basis identities on the triad's wave vectors (both
/// parities per wave vector) and the scale invariance of g.
BasisReport verify_basis_identities(const TriadGeometry& geom);

}  // namespace triad

#endif  // TRIAD_HELICAL_HPP
