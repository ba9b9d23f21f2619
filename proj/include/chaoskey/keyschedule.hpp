#pragma once

#include <array>
#include <cstdint>

#include "chaoskey/bytes.hpp"
#include "chaoskey/chaos.hpp"
#include "chaoskey/tdkgm.hpp"

namespace chaoskey {

namespace domain {
inline constexpr std::uint8_t kKey2 = 0x01;
inline constexpr std::uint8_t kKeystream = 0x5A;
inline constexpr std::uint8_t kRoundKeys = 0xA5;
}  // namespace domain

/// Fibonacci LFSR over x^8 + x^6 + x^5 + x^4 + 1 (taps at bits 7, 5, 4, 3).
/// Maximal length, so the 255 nonzero states form one cycle.
class Lfsr8 {
 public:
  static constexpr std::uint8_t kDefaultSeed = 0x5C;

  /// Throws Error(ZeroState) for a zero seed.
  explicit Lfsr8(std::uint8_t seed = kDefaultSeed);

  std::uint8_t state() const noexcept { return state_; }

  /// Eight single-bit shifts; returns the resulting state.
  std::uint8_t next() noexcept {
    for (int i = 0; i < 8; ++i) {
      const auto fb = static_cast<std::uint8_t>(((state_ >> 7) ^ (state_ >> 5) ^ (state_ >> 4) ^ (state_ >> 3)) & 1);
      state_ = static_cast<std::uint8_t>((state_ << 1) | fb);
    }
    return state_;
  }

 private:
  std::uint8_t state_;
};

inline constexpr std::size_t kRounds = 10;
inline constexpr std::size_t kRoundKeyBytes = 16;
using RoundKeys = std::array<std::array<std::uint8_t, kRoundKeyBytes>, kRounds + 1>;

struct KeyMaterial {
  Bytes key1;
  Bytes key2;
  Bytes key3;
  Bytes final_key;
  RoundKeys round_keys{};
  std::size_t master_len = 0;
};

/// key2[j] = (4th of four chaos bytes, i.e. 16 map steps) XOR key1[j].
/// `seed` is advanced in place.
Bytes derive_key2(ChaoticState& seed, ByteView key1);

/// key3[j] = rotr(rotl(key2[j], 1) XOR L_j, 1) with L_j the j-th LFSR output.
Bytes derive_key3(ByteView key2, std::uint8_t lfsr_seed = Lfsr8::kDefaultSeed);

/// Bytewise XOR of the three keys; throws LengthMismatch.
Bytes derive_final_key(ByteView key1, ByteView key2, ByteView key3);

/// Message-length keystream: KS[t] = chaos byte XOR final_key[t mod |final_key|].
/// This is the per-message, size-dependent key generation cost.
Bytes generate_keystream(ChaoticState& state, ByteView final_key, std::size_t n);

/// 176 consecutive chaos bytes split into 11 round keys.
RoundKeys derive_round_keys(ChaoticState& state);

/// Chaos-free matrix-driven stream used as the comparison baseline. If
/// `lookups` is non-null it is incremented once per matrix lookup.
Bytes baseline_keystream(const Matrix3D& m, ByteView key1, std::size_t n, std::uint64_t* lookups = nullptr);

/// Full schedule for a master key: Key1..Key3, final key and round keys.
KeyMaterial derive_key_material(const Matrix3D& m, ByteView master_key);

/// The keystream-domain chaos state for an already derived Key1.
inline ChaoticState keystream_state(ByteView key1) { return keyed_state(key1, domain::kKeystream); }

}  // namespace chaoskey
