#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "chaoskey/aes.hpp"
#include "chaoskey/bytes.hpp"
#include "chaoskey/keyschedule.hpp"
#include "chaoskey/tdkgm.hpp"

namespace chaoskey {

using Nonce = std::array<std::uint8_t, 12>;

/// Binary container, big-endian:
///   "CLAES" | version 0x01 | flags | nonce[12] | plain_len u64 | payload
/// flags bit 0 marks an LZ78-compressed payload.
struct Envelope {
  static constexpr std::array<std::uint8_t, 5> kMagic{'C', 'L', 'A', 'E', 'S'};
  static constexpr std::uint8_t kVersion = 0x01;
  static constexpr std::uint8_t kFlagCompressed = 0x01;
  static constexpr std::size_t kHeaderSize = 5 + 1 + 1 + 12 + 8;

  std::uint8_t version = kVersion;
  std::uint8_t flags = 0;
  Nonce nonce{};
  std::uint64_t plain_len = 0;
  Bytes payload;

  bool compressed() const noexcept { return (flags & kFlagCompressed) != 0; }

  Bytes serialize() const;
  /// Throws Truncated, BadMagic, BadVersion or Malformed (unknown flag bits).
  static Envelope parse(ByteView bytes);

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

struct CipherOptions {
  bool compress = true;
  /// Replace chaos round keys with Rijndael expansion of the 16-byte master key.
  bool standard_schedule = false;
  /// Key generation matrix; the default fill when unset.
  const Matrix3D* matrix = nullptr;
};

/// Counter mode over the block core: block i is XORed with
/// E(nonce || be32(i)). Encryption and decryption are the same operation.
void ctr_xor(std::span<std::uint8_t> data, const Nonce& nonce, const RoundKeys& rk);

/// compress (optional) -> XOR with chaos keystream -> counter-mode block
/// encryption under chaos round keys. Throws EmptyKey.
Envelope encrypt_message(ByteView master_key, const Nonce& nonce, ByteView plaintext, const CipherOptions& opts = {});

/// Inverse pipeline. Throws LengthMismatch when the recovered length differs
/// from plain_len, and propagates LZ78 decode errors for compressed payloads.
Bytes decrypt_message(const Envelope& env, ByteView master_key, const CipherOptions& opts = {});

}  // namespace chaoskey
