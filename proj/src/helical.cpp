#include "triad/helical.hpp"

#include <sstream>
#include <stdexcept>

namespace triad {

std::string WaveVector::str() const {
  std::ostringstream os;
  os << "(" << c[0] << "," << c[1] << "," << c[2] << ")";
  return os.str();
}

Complex3 make_helical_vector(const WaveVector& k, Parity s, const Vec3& gamma) {
  if (k.is_zero())
    throw std::invalid_argument("helical basis undefined for zero wave vector");
  const Vec3 kv = k.to_vec3();
  const Vec3 kxg = cross(kv, gamma);
  const double n = norm(kxg);
  // |k x Gamma| vanishes only when k is parallel to Gamma. The triad
  // constant g depends on the orientation set by Gamma, so degenerate
  // directions are an error rather than a silent fallback.
  if (n <= 1e-12 * norm(kv) * norm(gamma))
    throw std::invalid_argument("helical basis degenerate: wave vector " +
                                k.str() + " is parallel to gamma");
  const Vec3 nu = (1.0 / n) * kxg;
  const Vec3 kappa = (1.0 / norm(kv)) * kv;
  const Vec3 re = cross(nu, kappa);
  Complex3 h;
  for (int i = 0; i < 3; ++i) h[i] = Complex(re[i], s * nu[i]);
  return h;
}

TriadGeometry build_triad(const WaveVector& k, const WaveVector& p,
                          const WaveVector& q, Parity s_k, Parity s_p,
                          Parity s_q, const Vec3& gamma) {
  const WaveVector sum = k + p + q;
  if (!sum.is_zero())
    throw std::invalid_argument("triad closure violated: k + p + q = " +
                                sum.str() + ", expected (0,0,0)");
  for (Parity s : {s_k, s_p, s_q})
    if (s != 1 && s != -1)
      throw std::invalid_argument("parity must be +1 or -1");

  TriadGeometry geom;
  geom.k = k;
  geom.p = p;
  geom.q = q;
  geom.parity = {s_k, s_p, s_q};
  geom.gamma = gamma;
  geom.h_k = make_helical_vector(k, s_k, gamma);
  geom.h_p = make_helical_vector(p, s_p, gamma);
  geom.h_q = make_helical_vector(q, s_q, gamma);
  geom.magnitudes = {k.magnitude(), p.magnitude(), q.magnitude()};
  geom.d_diag = {s_k * geom.magnitudes[0], s_p * geom.magnitudes[1],
                 s_q * geom.magnitudes[2]};
  geom.g = -0.25 * triple(conj(geom.h_p), conj(geom.h_q), conj(geom.h_k));
  return geom;
}

BasisReport verify_basis_identities(const TriadGeometry& geom) {
  BasisReport rep;
  const std::array<const WaveVector*, 3> waves = {&geom.k, &geom.p, &geom.q};
  for (int i = 0; i < 3; ++i) {
    const WaveVector& w = *waves[i];
    const Complex3 kc = to_complex3(w.to_vec3());
    const double mag = w.magnitude();
    Complex3 h_plus, h_minus;
    for (Parity s : {+1, -1}) {
      const Complex3 h = make_helical_vector(w, s, geom.gamma);
      (s > 0 ? h_plus : h_minus) = h;
      rep.transversality = std::max(rep.transversality, std::abs(dot(kc, h)));
      const Complex3 curl_res = Complex(0, 1) * cross(kc, h) - (s * mag) * h;
      rep.curl_eigen = std::max(rep.curl_eigen, max_abs(curl_res));
      rep.norm = std::max(rep.norm, std::abs(norm2(h) - 2.0));
    }
    rep.orthogonality =
        std::max(rep.orthogonality, std::abs(dot(h_plus, conj(h_minus))));
  }
  for (int m : {2, 3}) {
    const TriadGeometry scaled =
        build_triad(geom.k * m, geom.p * m, geom.q * m, geom.parity[0],
                    geom.parity[1], geom.parity[2], geom.gamma);
    rep.g_scale = std::max(rep.g_scale, std::abs(scaled.g - geom.g));
  }
  return rep;
}

}  // namespace triad
