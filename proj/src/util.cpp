#include "chaoskey/bytes.hpp"
#include "chaoskey/error.hpp"

namespace chaoskey {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyKey: return "EmptyKey";
    case ErrorCode::BadKeySize: return "BadKeySize";
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::MisplacedTerminal: return "MisplacedTerminal";
    case ErrorCode::Truncated: return "Truncated";
    case ErrorCode::BadToken: return "BadToken";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::BadVersion: return "BadVersion";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
  }
  return "Unknown";
}

std::string to_hex(ByteView data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (auto b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

namespace {

int nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Error(ErrorCode::Malformed, "odd-length hex string");
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = nibble(hex[i]);
    const int lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorCode::Malformed, "invalid hex digit");
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

}  // namespace chaoskey
