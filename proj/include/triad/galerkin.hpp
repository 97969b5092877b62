#ifndef TRIAD_GALERKIN_HPP
#define TRIAD_GALERKIN_HPP

#include <map>
#include <utility>

#include "triad/complex3.hpp"
#include "triad/helical.hpp"

namespace triad {

/// Finite set of helical-mode coefficients a_s(k), keyed by
/// (wave vector, parity). Must be closed under the reality condition
/// a_s(k)* = a_s(-k).
using ModeCoeffs = std::map<std::pair<WaveVector, Parity>, Complex>;

/// Evaluates the projected Euler right-hand side for the mode (k, s_k)
/// by brute force over all mode pairs p + q + k = 0 in the supplied set.
///
/// Each unordered pair {p, q} contributes
///   -(1/4) (s_q|q| - s_p|p|) a_{s_p}(p)* a_{s_q}(q)*
///          h_{s_p}(p)* x h_{s_q}(q)* . h_{s_k}(k)*,
/// with the orientation fixed so that on a closed six-mode triad set the
/// sum reproduces the vector-form dynamics g (a* x D a*).
///
/// Throws std::invalid_argument when the reality condition fails.
Complex galerkin_oracle_rhs(const ModeCoeffs& coeffs, const WaveVector& k,
                            Parity s_k, const Vec3& gamma);

/// Builds the closed six-mode coefficient set {+-k, +-p, +-q} carrying the
/// triad amplitudes a = (a_k, a_p, a_q) and their reality partners.
ModeCoeffs closed_triad_coeffs(const TriadGeometry& geom, const Complex3& a);

}  // namespace triad

#endif  // TRIAD_GALERKIN_HPP
