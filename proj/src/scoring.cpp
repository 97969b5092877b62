#include "triad/scoring.hpp"

#include <cmath>
#include <stdexcept>

namespace triad {

double crps_ensemble(const std::vector<double>& members, double y, bool fair) {
  const std::size_t m = members.size();
  if (m == 0) throw std::invalid_argument("CRPS needs at least one member");
  double dist = 0;
  for (const double x : members) dist += std::abs(x - y);
  dist /= double(m);
  if (m == 1) return dist;
  double spread = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      spread += std::abs(members[i] - members[j]);
  spread *= 2.0;  // both orderings of the double sum
  const double denom = fair ? 2.0 * double(m) * double(m - 1)
                            : 2.0 * double(m) * double(m);
  return dist - spread / denom;
}

std::size_t rank_of_observation(const std::vector<double>& members, double y,
                                RngStream& rng) {
  if (members.empty())
    throw std::invalid_argument("rank needs at least one member");
  std::size_t below = 0, ties = 0;
  for (const double x : members) {
    if (x < y) ++below;
    else if (x == y) ++ties;
  }
  if (ties == 0) return below;
  // Uniform position among the tied block.
  const auto offset = std::size_t(rng.uniform() * double(ties + 1));
  return below + std::min(offset, ties);
}

}  // namespace triad
