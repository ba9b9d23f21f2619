#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chaoskey {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

constexpr std::uint8_t rotl8(std::uint8_t x, unsigned n) noexcept {
  n &= 7;
  return static_cast<std::uint8_t>((x << n) | (x >> ((8 - n) & 7)));
}

constexpr std::uint8_t rotr8(std::uint8_t x, unsigned n) noexcept {
  n &= 7;
  return static_cast<std::uint8_t>((x >> n) | (x << ((8 - n) & 7)));
}

std::string to_hex(ByteView data);

/// Accepts upper/lower case, no separators. Throws Error(Malformed).
Bytes from_hex(std::string_view hex);

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

}  // namespace chaoskey
