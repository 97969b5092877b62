#include "triad/rng.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace triad {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t(kPhiloxM0) * ctr[0];
    const std::uint64_t p1 = std::uint64_t(kPhiloxM1) * ctr[2];
    ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
           std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return ctr;
}

RngStream::RngStream(std::uint64_t seed, Stream purpose, std::uint64_t particle,
                     std::uint64_t window)
    : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)} {
  // Stream identities occupy the top half of the 128-bit counter; the
  // block index runs through the bottom half.
  assert(particle < (std::uint64_t(1) << 32));
  assert(window < (std::uint64_t(1) << 28));
  id0_ = std::uint32_t(particle);
  id1_ = std::uint32_t((window << 4) | (std::uint32_t(purpose) & 0xFu));
}

void RngStream::refill() {
  buf_ = philox4x32({std::uint32_t(block_), std::uint32_t(block_ >> 32),
                     id0_, id1_},
                    key_);
  ++block_;
  buf_pos_ = 0;
}

std::uint32_t RngStream::next_u32() {
  if (buf_pos_ >= 4) refill();
  return buf_[buf_pos_++];
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t lo = next_u32();
  const std::uint64_t hi = next_u32();
  return (hi << 32) | lo;
}

double RngStream::uniform() {
  // 53 significant bits, shifted into (0, 1] so log() below is safe.
  return double((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_pending_) {
    has_pending_ = false;
    return pending_normal_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  pending_normal_ = r * std::sin(theta);
  has_pending_ = true;
  return r * std::cos(theta);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  RngStream s(seed, Stream::kSeedDerive, index);
  return s.next_u64();
}

}  // namespace triad
