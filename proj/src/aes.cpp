#include "chaoskey/aes.hpp"

#include <algorithm>

namespace chaoskey::aes {
namespace {

constexpr std::uint8_t xtime(std::uint8_t a) {
  return static_cast<std::uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1B : 0x00));
}

constexpr std::uint8_t gmul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t p = 0;
  while (b) {
    if (b & 1) p ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return p;
}

// S-box generated at compile time from the multiplicative inverse and the
// affine map, walking the field with generator 3.
constexpr std::array<std::uint8_t, 256> make_sbox() {
  std::array<std::uint8_t, 256> s{};
  std::uint8_t p = 1, q = 1;
  do {
    p = static_cast<std::uint8_t>(p ^ (p << 1) ^ ((p & 0x80) ? 0x1B : 0));
    q ^= static_cast<std::uint8_t>(q << 1);
    q ^= static_cast<std::uint8_t>(q << 2);
    q ^= static_cast<std::uint8_t>(q << 4);
    if (q & 0x80) q ^= 0x09;
    const auto x = static_cast<std::uint8_t>(q ^ rotl8(q, 1) ^ rotl8(q, 2) ^ rotl8(q, 3) ^ rotl8(q, 4));
    s[p] = x ^ 0x63;
  } while (p != 1);
  s[0] = 0x63;
  return s;
}

constexpr std::array<std::uint8_t, 256> invert(const std::array<std::uint8_t, 256>& s) {
  std::array<std::uint8_t, 256> inv{};
  for (int i = 0; i < 256; ++i) inv[s[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

constexpr auto kSbox = make_sbox();
constexpr auto kInvSbox = invert(kSbox);
static_assert(kSbox[0x00] == 0x63 && kSbox[0x01] == 0x7C && kSbox[0x53] == 0xED);

// State layout: byte (row r, column c) at index r + 4c, as in FIPS-197.
void add_round_key(Block& s, const std::array<std::uint8_t, 16>& k) {
  for (int i = 0; i < 16; ++i) s[i] ^= k[i];
}

void sub_bytes(Block& s, const std::array<std::uint8_t, 256>& box) {
  for (auto& b : s) b = box[b];
}

void shift_rows(Block& s) {
  Block t = s;
  for (int c = 0; c < 4; ++c)
    for (int r = 1; r < 4; ++r) s[r + 4 * c] = t[r + 4 * ((c + r) % 4)];
}

void inv_shift_rows(Block& s) {
  Block t = s;
  for (int c = 0; c < 4; ++c)
    for (int r = 1; r < 4; ++r) s[r + 4 * ((c + r) % 4)] = t[r + 4 * c];
}

void mix_columns(Block& s) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = &s[4 * c];
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    const std::uint8_t all = a0 ^ a1 ^ a2 ^ a3;
    col[0] ^= all ^ xtime(a0 ^ a1);
    col[1] ^= all ^ xtime(a1 ^ a2);
    col[2] ^= all ^ xtime(a2 ^ a3);
    col[3] ^= all ^ xtime(a3 ^ a0);
  }
}

void inv_mix_columns(Block& s) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = &s[4 * c];
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = gmul(a0, 14) ^ gmul(a1, 11) ^ gmul(a2, 13) ^ gmul(a3, 9);
    col[1] = gmul(a0, 9) ^ gmul(a1, 14) ^ gmul(a2, 11) ^ gmul(a3, 13);
    col[2] = gmul(a0, 13) ^ gmul(a1, 9) ^ gmul(a2, 14) ^ gmul(a3, 11);
    col[3] = gmul(a0, 11) ^ gmul(a1, 13) ^ gmul(a2, 9) ^ gmul(a3, 14);
  }
}

}  // namespace

Block encrypt_block(const Block& in, const RoundKeys& rk) noexcept {
  Block s = in;
  add_round_key(s, rk[0]);
  for (std::size_t round = 1; round < kRounds; ++round) {
    sub_bytes(s, kSbox);
    shift_rows(s);
    mix_columns(s);
    add_round_key(s, rk[round]);
  }
  sub_bytes(s, kSbox);
  shift_rows(s);
  add_round_key(s, rk[kRounds]);
  return s;
}

Block decrypt_block(const Block& in, const RoundKeys& rk) noexcept {
  Block s = in;
  add_round_key(s, rk[kRounds]);
  inv_shift_rows(s);
  sub_bytes(s, kInvSbox);
  for (std::size_t round = kRounds - 1; round >= 1; --round) {
    add_round_key(s, rk[round]);
    inv_mix_columns(s);
    inv_shift_rows(s);
    sub_bytes(s, kInvSbox);
  }
  add_round_key(s, rk[0]);
  return s;
}

RoundKeys rijndael_round_keys(const std::array<std::uint8_t, 16>& key) noexcept {
  std::array<std::uint8_t, 176> w{};
  std::copy(key.begin(), key.end(), w.begin());
  std::uint8_t rcon = 0x01;
  for (std::size_t i = 4; i < 44; ++i) {
    std::array<std::uint8_t, 4> t{w[4 * i - 4], w[4 * i - 3], w[4 * i - 2], w[4 * i - 1]};
    if (i % 4 == 0) {
      t = {kSbox[t[1]], kSbox[t[2]], kSbox[t[3]], kSbox[t[0]]};
      t[0] ^= rcon;
      rcon = xtime(rcon);
    }
    for (std::size_t j = 0; j < 4; ++j) w[4 * i + j] = w[4 * (i - 4) + j] ^ t[j];
  }
  RoundKeys rk{};
  for (std::size_t r = 0; r <= kRounds; ++r)
    std::copy_n(w.begin() + static_cast<std::ptrdiff_t>(16 * r), 16, rk[r].begin());
  return rk;
}

}  // namespace chaoskey::aes
