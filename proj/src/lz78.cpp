#include "chaoskey/lz78.hpp"

#include <unordered_map>

#include "chaoskey/error.hpp"

namespace chaoskey::lz78 {

Tokens compress(ByteView data) {
  // Trie edges keyed by (parent entry << 8 | byte).
  std::unordered_map<std::uint64_t, std::uint64_t> edges;
  edges.reserve(data.size() / 4 + 16);
  Tokens tokens;
  std::uint64_t node = 0;
  for (auto b : data) {
    const std::uint64_t key = (node << 8) | b;
    if (auto it = edges.find(key); it != edges.end()) {
      node = it->second;
      continue;
    }
    tokens.push_back({node, b});
    edges.emplace(key, tokens.size());
    node = 0;
  }
  if (node != 0) tokens.push_back({node, std::nullopt});
  return tokens;
}

Bytes decompress(const Tokens& tokens, std::size_t max_size) {
  // Entry k is stored as (parent, last byte, length); entry 0 is empty.
  struct Entry {
    std::uint64_t parent;
    std::uint8_t last;
    std::size_t length;
  };
  std::vector<Entry> dict{{0, 0, 0}};
  dict.reserve(tokens.size() + 1);
  Bytes out;

  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const auto& tok = tokens[t];
    if (tok.index >= dict.size())
      throw Error(ErrorCode::BadIndex, "token " + std::to_string(t) + " refers to entry " + std::to_string(tok.index));
    if (!tok.symbol && t + 1 != tokens.size())
      throw Error(ErrorCode::MisplacedTerminal, "symbol-less token before end of stream");

    const std::size_t len = dict[tok.index].length;
    if (len + (tok.symbol ? 1 : 0) > max_size - out.size())
      throw Error(ErrorCode::LengthMismatch, "decompressed data exceeds " + std::to_string(max_size) + " bytes");
    const std::size_t start = out.size();
    out.resize(start + len);
    for (std::uint64_t e = tok.index, pos = start + len; e != 0; e = dict[e].parent) out[--pos] = dict[e].last;

    if (tok.symbol) {
      out.push_back(*tok.symbol);
      dict.push_back({tok.index, *tok.symbol, len + 1});
    }
  }
  return out;
}

Bytes encode_tokens(const Tokens& tokens) {
  Bytes out;
  out.reserve(tokens.size() * 3);
  for (const auto& tok : tokens) {
    std::uint64_t v = tok.index;
    do {
      auto b = static_cast<std::uint8_t>(v & 0x7F);
      v >>= 7;
      if (v) b |= 0x80;
      out.push_back(b);
    } while (v);
    if (tok.symbol) {
      out.push_back(0x01);
      out.push_back(*tok.symbol);
    } else {
      out.push_back(0x00);
    }
  }
  return out;
}

Tokens decode_tokens(ByteView wire) {
  Tokens tokens;
  std::size_t pos = 0;
  bool terminated = false;
  while (pos < wire.size()) {
    if (terminated) throw Error(ErrorCode::MisplacedTerminal, "data after symbol-less token");
    std::uint64_t index = 0;
    for (int shift = 0;; shift += 7) {
      if (pos >= wire.size()) throw Error(ErrorCode::Truncated, "index cut short");
      const auto b = wire[pos++];
      if (shift == 63 && (b & 0x7E)) throw Error(ErrorCode::BadToken, "index overflows 64 bits");
      index |= std::uint64_t{b & 0x7Fu} << shift;
      if (!(b & 0x80)) break;
      if (shift == 63) throw Error(ErrorCode::BadToken, "index overflows 64 bits");
    }
    if (pos >= wire.size()) throw Error(ErrorCode::Truncated, "missing symbol flag");
    const auto flag = wire[pos++];
    if (flag == 0x01) {
      if (pos >= wire.size()) throw Error(ErrorCode::Truncated, "missing symbol");
      tokens.push_back({index, wire[pos++]});
    } else if (flag == 0x00) {
      tokens.push_back({index, std::nullopt});
      terminated = true;
    } else {
      throw Error(ErrorCode::BadToken, "symbol flag must be 0 or 1");
    }
  }
  return tokens;
}

}  // namespace chaoskey::lz78
