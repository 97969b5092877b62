#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "triad/rng.hpp"
#include "triad/scoring.hpp"

using namespace triad;

namespace {

// Exact integral-form CRPS of a one- or two-member empirical CDF.
double crps_exact_1(double x, double y) { return std::abs(x - y); }

double crps_exact_2(double x1, double x2, double y) {
  if (x2 < x1) std::swap(x1, x2);
  if (y <= x1) return (x1 - y) + (x2 - x1) / 4.0;
  if (y >= x2) return (y - x2) + (x2 - x1) / 4.0;
  return (x2 - x1) / 4.0;
}

}  // namespace

TEST_SUITE_BEGIN("scoring");

TEST_CASE("CRPS of a point mass at the observation is zero") {
  CHECK(crps_ensemble({0.7, 0.7, 0.7}, 0.7) == doctest::Approx(0.0));
  CHECK(crps_ensemble({1.5}, 0.25) == doctest::Approx(1.25));
}

TEST_CASE("CRPS closed-form two-member case") {
  CHECK(crps_ensemble({0.0, 1.0}, 0.0) == doctest::Approx(0.25));
}

TEST_CASE("CRPS estimator equals the integral form for M = 1, 2") {
  RngStream rng(71, Stream::kSeedDerive);
  for (int i = 0; i < 200; ++i) {
    const double x1 = rng.normal(), x2 = rng.normal(), y = rng.normal();
    CHECK(crps_ensemble({x1}, y) ==
          doctest::Approx(crps_exact_1(x1, y)).epsilon(1e-12));
    CHECK(crps_ensemble({x1, x2}, y) ==
          doctest::Approx(crps_exact_2(x1, x2, y)).epsilon(1e-12));
  }
}

TEST_CASE("CRPS is non-negative") {
  RngStream rng(72, Stream::kSeedDerive);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> members(1 + std::size_t(rng.uniform() * 14));
    for (double& m : members) m = rng.normal();
    CHECK(crps_ensemble(members, rng.normal()) >= -1e-14);
  }
}

TEST_CASE("fair CRPS uses the M(M-1) spread normalization") {
  const std::vector<double> members{0.0, 1.0};
  // dist = 0.5, spread sum = 2; fair: 0.5 - 2/(2*2*1) = 0.
  CHECK(crps_ensemble(members, 0.0, true) == doctest::Approx(0.0));
}

TEST_CASE("rank extremes") {
  RngStream rng(73, Stream::kRankTies);
  CHECK(rank_of_observation({1.0, 2.0, 3.0}, 0.5, rng) == 0);
  CHECK(rank_of_observation({1.0, 2.0, 3.0}, 4.0, rng) == 3);
  CHECK(rank_of_observation({1.0, 2.0, 3.0}, 2.5, rng) == 2);
}

TEST_CASE("tied ranks are broken uniformly") {
  RngStream rng(74, Stream::kRankTies);
  std::array<int, 3> counts{};
  for (int i = 0; i < 30000; ++i) {
    const std::size_t r = rank_of_observation({1.0, 1.0}, 1.0, rng);
    REQUIRE(r <= 2);
    ++counts[r];
  }
  for (const int c : counts) {
    CHECK(c > 9500);
    CHECK(c < 10500);
  }
}

TEST_CASE("ranks of exchangeable draws are uniform") {
  // Members and observation from the same distribution: the 16 possible
  // ranks of a 15-member ensemble are equally likely (chi^2 test).
  RngStream rng(75, Stream::kSeedDerive);
  RngStream tie_rng(75, Stream::kRankTies);
  const int m = 15, trials = 10000;
  std::vector<int> counts(m + 1, 0);
  std::vector<double> members(m);
  for (int t = 0; t < trials; ++t) {
    for (double& x : members) x = rng.normal();
    ++counts[rank_of_observation(members, rng.normal(), tie_rng)];
  }
  const double expected = double(trials) / (m + 1);
  double chi2 = 0;
  for (const int c : counts)
    chi2 += (c - expected) * (c - expected) / expected;
  // chi^2 with 15 dof, p = 0.001 quantile.
  CHECK(chi2 < 37.7);
}

TEST_SUITE_END();
