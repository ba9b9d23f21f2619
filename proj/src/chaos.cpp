#include "chaoskey/chaos.hpp"

#include <algorithm>
#include <array>

namespace chaoskey {
namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kSeedModulus = ChaoticState::kOne - 2;

u128 big_endian_block(ByteView bytes) {
  std::array<std::uint8_t, kSeedPrefixLen> block{};
  std::copy_n(bytes.begin(), std::min(bytes.size(), block.size()), block.begin());
  u128 u = 0;
  for (auto b : block) u = (u << 8) | b;
  return u;
}

u128 tag_word(std::uint8_t tag) {
  u128 w = 0;
  for (int i = 0; i < 8; ++i) w = (w << 8) | tag;
  return w;
}

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Adjacent seed words would otherwise start a few ulps apart, and the
// truncating map merges such orbits within the burn-in.
std::uint64_t reduce(u128 u) {
  const auto lo = static_cast<std::uint64_t>(u);
  const auto hi = static_cast<std::uint64_t>(u >> 64);
  return mix64(lo ^ mix64(hi)) % kSeedModulus + 1;
}

std::uint64_t burn_in(std::uint64_t raw) {
  bool perturbed = false;
  for (int i = 0; i < kBurnInSteps;) {
    const auto next = ChaoticState::successor(raw);
    if (next == raw && !perturbed) {
      raw = (raw + kDegeneratePerturbation) & (ChaoticState::kOne - 1);
      perturbed = true;
      i = 0;
      continue;
    }
    raw = next;
    ++i;
  }
  return raw;
}

}  // namespace

ChaoticState seed_from_key1(ByteView key1_prefix, std::uint8_t domain_tag) {
  const u128 u = big_endian_block(key1_prefix.first(std::min(key1_prefix.size(), kSeedPrefixLen))) ^
                 tag_word(domain_tag);
  return ChaoticState(burn_in(reduce(u)), domain_tag);
}

ChaoticState absorb(ChaoticState state, ByteView more) {
  std::uint64_t raw = state.raw();
  const u128 tag = tag_word(state.domain_tag());
  for (std::size_t off = 0; off < more.size(); off += kSeedPrefixLen) {
    const auto chunk = more.subspan(off, std::min(kSeedPrefixLen, more.size() - off));
    raw = burn_in(reduce((u128{raw} ^ big_endian_block(chunk)) ^ tag));
  }
  return ChaoticState(raw, state.domain_tag());
}

ChaoticState keyed_state(ByteView key1, std::uint8_t domain_tag) {
  const auto split = std::min(key1.size(), kSeedPrefixLen);
  return absorb(seed_from_key1(key1.first(split), domain_tag), key1.subspan(split));
}

}  // namespace chaoskey
