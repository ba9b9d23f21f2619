#pragma once

#include <cstdint>

#include "chaoskey/bytes.hpp"

namespace chaoskey {

/// Logistic map M' = r M (1 - M) with r = 39999/10000, evaluated in Q0.63
/// fixed point so every platform produces the same orbit bit for bit.
///
/// The fraction M is raw / 2^63. A step truncates twice:
///   x   = floor(raw * (2^63 - raw) / 2^63)
///   raw = floor(39999 * x / 10000)
/// using 128-bit intermediates. Both 0 and the truncated image of 1 - 1/r are
/// fixed points; seeding steers around them.
class ChaoticState {
 public:
  static constexpr std::uint64_t kOne = std::uint64_t{1} << 63;
  static constexpr std::uint64_t kRateNum = 39999;
  static constexpr std::uint64_t kRateDen = 10000;
  static constexpr int kStepsPerByte = 4;

  constexpr ChaoticState() = default;
  constexpr explicit ChaoticState(std::uint64_t raw, std::uint8_t domain_tag = 0) noexcept
      : raw_(raw & (kOne - 1)), tag_(domain_tag) {}

  constexpr std::uint64_t raw() const noexcept { return raw_; }
  constexpr std::uint64_t iterations() const noexcept { return iterations_; }
  constexpr std::uint8_t domain_tag() const noexcept { return tag_; }
  double value() const noexcept { return static_cast<double>(raw_) / static_cast<double>(kOne); }

  /// One application of the map.
  constexpr void advance() noexcept {
    raw_ = successor(raw_);
    ++iterations_;
  }

  /// Four map steps, then XOR-fold of fraction bits 8..39 into one byte. The
  /// high bits follow the arcsine density and are biased; the low ones are not.
  constexpr std::uint8_t next_byte() noexcept {
    for (int i = 0; i < kStepsPerByte; ++i) advance();
    return fold(raw_);
  }

  void fill(std::span<std::uint8_t> out) noexcept {
    for (auto& b : out) b = next_byte();
  }

  static constexpr std::uint64_t successor(std::uint64_t raw) noexcept {
    __extension__ using u128 = unsigned __int128;
    const auto x = static_cast<std::uint64_t>((u128{raw} * u128{kOne - raw}) >> 63);
    return static_cast<std::uint64_t>((u128{x} * kRateNum) / kRateDen);
  }

  static constexpr std::uint8_t fold(std::uint64_t raw) noexcept {
    return static_cast<std::uint8_t>((raw >> 8) ^ (raw >> 16) ^ (raw >> 24) ^ (raw >> 32));
  }

  friend constexpr bool operator==(const ChaoticState&, const ChaoticState&) = default;

 private:
  std::uint64_t raw_ = 0;
  std::uint64_t iterations_ = 0;
  std::uint8_t tag_ = 0;
};

/// Pure form of ChaoticState::advance.
constexpr ChaoticState step(ChaoticState s) noexcept {
  s.advance();
  return s;
}

inline constexpr int kBurnInSteps = 100;
inline constexpr std::uint64_t kDegeneratePerturbation = std::uint64_t{1} << 39;
inline constexpr std::size_t kSeedPrefixLen = 9;

/// Builds a state from the first nine bytes of Key1 (zero padded if shorter).
/// The 72-bit big-endian prefix is XORed with the tag repeated over its low
/// eight bytes, reduced to [1, 2^63 - 2] and burned in for 100 steps. A burn-in
/// step that lands on a fixed point perturbs the state by 2^39 and restarts
/// the burn-in (once).
ChaoticState seed_from_key1(ByteView key1_prefix, std::uint8_t domain_tag);

/// Mixes further key bytes into an already-seeded state, nine at a time, with
/// the same reduction and guarded burn-in as seeding. The iteration counter is
/// reset.
ChaoticState absorb(ChaoticState state, ByteView more);

/// seed_from_key1 on the prefix, then absorb of everything after it.
ChaoticState keyed_state(ByteView key1, std::uint8_t domain_tag);

}  // namespace chaoskey
