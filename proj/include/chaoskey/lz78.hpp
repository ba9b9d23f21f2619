#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "chaoskey/bytes.hpp"

namespace chaoskey::lz78 {

/// (dictionary index, next byte). Index 0 is the empty prefix. Only the last
/// token of a stream may omit the symbol; it then stands for a dictionary
/// entry that ran into the end of the input.
struct Token {
  std::uint64_t index = 0;
  std::optional<std::uint8_t> symbol;

  friend bool operator==(const Token&, const Token&) = default;
};

using Tokens = std::vector<Token>;

/// Greedy longest-match LZ78 over bytes. No dictionary reset.
Tokens compress(ByteView data);

/// Throws BadIndex or MisplacedTerminal on an invalid stream, and
/// LengthMismatch as soon as the output would exceed `max_size`.
Bytes decompress(const Tokens& tokens, std::size_t max_size = SIZE_MAX);

/// Wire format per token: LEB128 index, then 0x01 <symbol> or a lone 0x00 for
/// the terminal symbol-less token.
Bytes encode_tokens(const Tokens& tokens);

/// Throws Truncated, MisplacedTerminal or BadToken.
Tokens decode_tokens(ByteView wire);

inline Bytes pack(ByteView data) { return encode_tokens(compress(data)); }
inline Bytes unpack(ByteView wire, std::size_t max_size = SIZE_MAX) {
  return decompress(decode_tokens(wire), max_size);
}

}  // namespace chaoskey::lz78
