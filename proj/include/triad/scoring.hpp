#ifndef TRIAD_SCORING_HPP
#define TRIAD_SCORING_HPP

#include <cstddef>
#include <vector>

#include "triad/rng.hpp"

namespace triad {

/// Empirical-CDF CRPS of an M-member ensemble against the verification y:
///   (1/M) sum_i |X_i - y| - (1/(2 M^2)) sum_ij |X_i - X_j|.
/// With fair = true the spread term divides by 2 M (M-1) instead, giving
/// the unbiased estimator; the biased form is the default convention.
double crps_ensemble(const std::vector<double>& members, double y,
                     bool fair = false);

/// Rank of y within the members: the number of members strictly below y,
/// with ties broken uniformly at random. Result lies in [0, M].
std::size_t rank_of_observation(const std::vector<double>& members, double y,
                                RngStream& rng);

}  // namespace triad

#endif  // TRIAD_SCORING_HPP
