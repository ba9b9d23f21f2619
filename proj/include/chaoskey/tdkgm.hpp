#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>

#include "chaoskey/bytes.hpp"

namespace chaoskey {

/// 26 Latin capitals, 10 digits, 24 Greek lower-case letters. A glyph is
/// identified by its index; the digit '0' is index 26.
struct Alphabet {
  static constexpr std::size_t kSize = 60;
  static constexpr std::uint8_t kDigitZero = 26;

  /// UTF-8 rendering of glyph `index` (index < 60).
  static std::string_view glyph(std::uint8_t index);
};

/// Three alphabet indices assigned to one byte.
struct SymbolCode {
  std::array<std::uint8_t, 3> index{};

  static constexpr SymbolCode missing() noexcept {
    return {{Alphabet::kDigitZero, Alphabet::kDigitZero, Alphabet::kDigitZero}};
  }
  friend constexpr bool operator==(const SymbolCode&, const SymbolCode&) = default;
};

/// The 4 x 8 x 8 key generation cube. Byte b sits at plane b >> 6, row
/// (b >> 3) & 7, column b & 7, so the 256 cells cover every byte value.
class Matrix3D {
 public:
  static constexpr int kPlanes = 4;
  static constexpr int kRows = 8;
  static constexpr int kCols = 8;

  /// cells[p][r][c] = (7p + 13r + 31c) mod 60, every byte present.
  static Matrix3D default_matrix();

  /// Text format, one entry per line:
  ///   p r c index      override one cell
  ///   absent <hex>     mark a byte value as missing
  /// Blank lines and '#' comments are ignored; cells not listed keep the
  /// default fill. Rejects indices >= 60, out-of-range coordinates and
  /// duplicate coordinates with Error(Malformed).
  static Matrix3D parse(std::istream& in);
  static Matrix3D load(const std::string& path);

  std::uint8_t cell(int p, int r, int c) const noexcept { return cells_[index_of(p, r, c)]; }
  void set_cell(int p, int r, int c, std::uint8_t glyph_index);

  bool present(std::uint8_t b) const noexcept { return present_[b]; }
  void set_present(std::uint8_t b, bool on) noexcept { present_[b] = on; }

  /// "000" for absent bytes; otherwise reads at (p,r,c), (p,c,r) and (p+1,r,c).
  SymbolCode encode_byte(std::uint8_t b) const noexcept;

 private:
  static constexpr std::size_t index_of(int p, int r, int c) noexcept {
    return static_cast<std::size_t>((p * kRows + r) * kCols + c);
  }

  std::array<std::uint8_t, kPlanes * kRows * kCols> cells_{};
  std::bitset<256> present_;
};

inline SymbolCode encode_byte(const Matrix3D& m, std::uint8_t b) noexcept { return m.encode_byte(b); }

/// Concatenated 3-byte codes of every master-key byte. Throws EmptyKey.
Bytes derive_key1(const Matrix3D& m, ByteView master_key);

}  // namespace chaoskey
