#include "triad/dynamics.hpp"

#include <stdexcept>

namespace triad {

Complex3 diffusion(ModelKind model, const Complex3& a, const NoiseAmplitude& b,
                   const TriadGeometry& geom) {
  switch (model) {
    case ModelKind::Deterministic:
      return Complex3{};
    case ModelKind::Hst:
      return hst_diffusion(a, b, geom);
    case ModelKind::Est:
      return est_diffusion(a, b, geom);
  }
  throw std::logic_error("unknown model kind");
}

double difference_identity_residual(const Complex3& a, const Vec3& b,
                                    const TriadGeometry& geom) {
  const Complex3 bc = to_complex3(b);
  const Vec3& d = geom.d_diag;
  const double rho = d[0] + d[1] + d[2];
  const Complex3 lhs =
      cross(conj(a), dmul(d, bc)) - cross(bc, dmul(d, conj(a)));
  const Complex3 rhs = dmul({rho - d[0], rho - d[1], rho - d[2]},
                            conj(cross(a, bc)));
  return max_abs(lhs - rhs);
}

double deviation_increment(ModelKind model, const Complex3& a,
                           const NoiseAmplitude& b, const TriadGeometry& geom) {
  const Complex3 w = cross(conj(dmul(geom.d_diag, a)), conj(a));  // D a* x a*
  switch (model) {
    case ModelKind::Hst:
      // dE = (G . a* + a . G*) dW with G the HST diffusion; the triple
      // product identity collapses G . a* to g b . (D a* x a*).
      return 2.0 * (geom.g * dot(b, w)).real();
    case ModelKind::Est:
      return 2.0 * (geom.g * dot(dmul(geom.d_diag, b), w)).real();
    case ModelKind::Deterministic:
      throw std::invalid_argument(
          "deviation increment undefined for the deterministic model");
  }
  throw std::logic_error("unknown model kind");
}

double lu_salt_coincidence_residual(const TriadGeometry& geom) {
  const Complex3 kc = to_complex3(geom.k.to_vec3());
  const Complex3 pc = to_complex3(geom.p.to_vec3());
  const Complex3 qc = to_complex3(geom.q.to_vec3());
  const Complex i(0, 1);
  const Complex f_k = -i * dot(pc + qc, geom.h_k) * dot(geom.h_p, geom.h_q);
  const Complex f_p = -i * dot(kc + qc, geom.h_p) * dot(geom.h_k, geom.h_q);
  const Complex f_q = -i * dot(kc + pc, geom.h_q) * dot(geom.h_k, geom.h_p);
  return std::max({std::abs(f_k), std::abs(f_p), std::abs(f_q)});
}

}  // namespace triad
