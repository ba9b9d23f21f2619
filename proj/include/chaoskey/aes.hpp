#pragma once

#include <array>
#include <cstdint>

#include "chaoskey/keyschedule.hpp"

namespace chaoskey::aes {

using Block = std::array<std::uint8_t, 16>;

/// AES-128 round structure over caller-supplied round keys: AddRoundKey,
/// nine full rounds, and a final round without MixColumns. Round keys are
/// used verbatim, so any 176 bytes work, not only a Rijndael expansion.
Block encrypt_block(const Block& in, const RoundKeys& rk) noexcept;
Block decrypt_block(const Block& in, const RoundKeys& rk) noexcept;

/// Standard FIPS-197 key expansion. Used for test vectors and the
/// --standard-schedule mode.
RoundKeys rijndael_round_keys(const std::array<std::uint8_t, 16>& key) noexcept;

}  // namespace chaoskey::aes
