#include "chaoskey/tdkgm.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "chaoskey/error.hpp"

namespace chaoskey {

std::string_view Alphabet::glyph(std::uint8_t index) {
  static constexpr std::array<std::string_view, kSize> kGlyphs = {
      "A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L", "M", "N", "O",
      "P", "Q", "R", "S", "T", "U", "V", "W", "X", "Y", "Z", "0", "1", "2", "3",
      "4", "5", "6", "7", "8", "9", "α", "β", "γ", "δ", "ε", "ζ", "η", "θ", "ι",
      "κ", "λ", "μ", "ν", "ξ", "ο", "π", "ρ", "σ", "τ", "υ", "φ", "χ", "ψ", "ω"};
  return index < kSize ? kGlyphs[index] : std::string_view{"?"};
}

Matrix3D Matrix3D::default_matrix() {
  Matrix3D m;
  for (int p = 0; p < kPlanes; ++p)
    for (int r = 0; r < kRows; ++r)
      for (int c = 0; c < kCols; ++c)
        m.cells_[index_of(p, r, c)] = static_cast<std::uint8_t>((7 * p + 13 * r + 31 * c) % 60);
  m.present_.set();
  return m;
}

void Matrix3D::set_cell(int p, int r, int c, std::uint8_t glyph_index) {
  if (p < 0 || p >= kPlanes || r < 0 || r >= kRows || c < 0 || c >= kCols)
    throw Error(ErrorCode::Malformed, "matrix coordinate out of range");
  if (glyph_index >= Alphabet::kSize) throw Error(ErrorCode::Malformed, "glyph index must be < 60");
  cells_[index_of(p, r, c)] = glyph_index;
}

SymbolCode Matrix3D::encode_byte(std::uint8_t b) const noexcept {
  if (!present_[b]) return SymbolCode::missing();
  const int p = b >> 6;
  const int r = (b >> 3) & 7;
  const int c = b & 7;
  return {{cell(p, r, c), cell(p, c, r), cell((p + 1) % kPlanes, r, c)}};
}

Matrix3D Matrix3D::parse(std::istream& in) {
  Matrix3D m = default_matrix();
  std::set<std::tuple<int, int, int>> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    const auto where = " (line " + std::to_string(line_no) + ")";

    if (first == "absent") {
      std::string hex;
      if (!(fields >> hex)) throw Error(ErrorCode::Malformed, "absent needs a byte" + where);
      if (hex.size() > 2 && (hex.starts_with("0x") || hex.starts_with("0X"))) hex.erase(0, 2);
      if (hex.size() == 1) hex.insert(hex.begin(), '0');
      const auto b = from_hex(hex);
      if (b.size() != 1) throw Error(ErrorCode::Malformed, "absent byte must be one hex byte" + where);
      m.set_present(b[0], false);
    } else {
      int p = 0, r = 0, c = 0, idx = 0;
      std::istringstream head(first);
      if (!(head >> p) || !(fields >> r >> c >> idx))
        throw Error(ErrorCode::Malformed, "expected 'p r c index'" + where);
      if (idx < 0 || idx >= static_cast<int>(Alphabet::kSize))
        throw Error(ErrorCode::Malformed, "glyph index must be < 60" + where);
      if (!seen.emplace(p, r, c).second) throw Error(ErrorCode::Malformed, "duplicate coordinate" + where);
      m.set_cell(p, r, c, static_cast<std::uint8_t>(idx));
    }
    std::string extra;
    if (fields >> extra) throw Error(ErrorCode::Malformed, "trailing data" + where);
  }
  return m;
}

Matrix3D Matrix3D::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Malformed, "cannot open matrix file " + path);
  return parse(in);
}

Bytes derive_key1(const Matrix3D& m, ByteView master_key) {
  if (master_key.empty()) throw Error(ErrorCode::EmptyKey, "master key is empty");
  Bytes key1;
  key1.reserve(master_key.size() * 3);
  for (auto b : master_key) {
    const auto code = m.encode_byte(b);
    key1.insert(key1.end(), code.index.begin(), code.index.end());
  }
  return key1;
}

}  // namespace chaoskey
