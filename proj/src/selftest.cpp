#include "chaoskey/selftest.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

#include "chaoskey/aes.hpp"
#include "chaoskey/cipher.hpp"
#include "chaoskey/error.hpp"
#include "chaoskey/keyschedule.hpp"
#include "chaoskey/lz78.hpp"

namespace chaoskey {
namespace golden {
#include "golden_vectors.inc"
}  // namespace golden

namespace {

bool prefix_equal(const Bytes& got, ByteView want) {
  return got.size() >= want.size() && std::equal(want.begin(), want.end(), got.begin());
}

Bytes flatten(const RoundKeys& rk) {
  Bytes out;
  for (const auto& k : rk) out.insert(out.end(), k.begin(), k.end());
  return out;
}

struct KeyVectors {
  const char* name;
  ByteView master, key1, key2, key3, final_key, keystream, round_keys, baseline;
};

const std::array<KeyVectors, 3> kKeyVectors{{
    {"zero16", golden::zero16::master, golden::zero16::key1, golden::zero16::key2, golden::zero16::key3,
     golden::zero16::final_key, golden::zero16::keystream, golden::zero16::round_keys, golden::zero16::baseline},
    {"counting16", golden::counting16::master, golden::counting16::key1, golden::counting16::key2,
     golden::counting16::key3, golden::counting16::final_key, golden::counting16::keystream,
     golden::counting16::round_keys, golden::counting16::baseline},
    {"ascii24", golden::ascii24::master, golden::ascii24::key1, golden::ascii24::key2, golden::ascii24::key3,
     golden::ascii24::final_key, golden::ascii24::keystream, golden::ascii24::round_keys, golden::ascii24::baseline},
}};

SelftestResult check_key_vectors(const KeyVectors& v) {
  const auto m = Matrix3D::default_matrix();
  const auto km = derive_key_material(m, v.master);
  auto st = keystream_state(km.key1);
  const auto ks = generate_keystream(st, km.final_key, 64);
  const bool ok = prefix_equal(km.key1, v.key1) && prefix_equal(km.key2, v.key2) && prefix_equal(km.key3, v.key3) &&
                  prefix_equal(km.final_key, v.final_key) && prefix_equal(ks, v.keystream) &&
                  prefix_equal(flatten(km.round_keys), v.round_keys) &&
                  prefix_equal(baseline_keystream(m, km.key1, 64), v.baseline);
  return {std::string("key schedule golden vectors (") + v.name + ")", ok, ""};
}

SelftestResult check_aes() {
  std::array<std::uint8_t, 16> key{};
  for (std::size_t i = 0; i < key.size(); ++i) key[i] = static_cast<std::uint8_t>(i);
  const aes::Block pt{0x00, 0x11, 0x22, 0x33, 0x44, 0x55, 0x66, 0x77, 0x88, 0x99, 0xaa, 0xbb, 0xcc, 0xdd, 0xee, 0xff};
  const auto rk = aes::rijndael_round_keys(key);
  const auto ct = aes::encrypt_block(pt, rk);
  const bool ok = std::equal(ct.begin(), ct.end(), golden::aes_fips197_c1.begin()) && aes::decrypt_block(ct, rk) == pt;
  return {"AES-128 block core, FIPS-197 C.1", ok, to_hex(ct)};
}

SelftestResult check_envelopes() {
  Nonce nonce;
  std::copy(golden::envelope_nonce.begin(), golden::envelope_nonce.end(), nonce.begin());
  const Bytes key = Bytes(golden::counting16::master.begin(), golden::counting16::master.end());
  bool ok = true;
  for (bool compress : {false, true}) {
    const auto env = encrypt_message(key, nonce, golden::envelope_plaintext, {.compress = compress});
    const auto wire = env.serialize();
    const auto& want = compress ? Bytes(golden::envelope_lz78.begin(), golden::envelope_lz78.end())
                                : Bytes(golden::envelope_plain.begin(), golden::envelope_plain.end());
    ok = ok && wire == want;
    const auto back = decrypt_message(Envelope::parse(wire), key);
    ok = ok && std::equal(back.begin(), back.end(), golden::envelope_plaintext.begin(),
                          golden::envelope_plaintext.end());
  }
  return {"envelope golden vectors", ok, ""};
}

SelftestResult check_lz78() {
  const Bytes run(10000, 'A');
  const auto tokens = lz78::compress(run);
  std::mt19937_64 rng(7);
  bool ok = tokens.size() == 141 && lz78::decompress(tokens) == run;
  for (int i = 0; i < 200 && ok; ++i) {
    Bytes data(rng() % 600);
    for (auto& b : data) b = static_cast<std::uint8_t>(rng() % ((i % 8 == 0) ? 256 : 4));
    ok = lz78::unpack(lz78::pack(data)) == data;
  }
  return {"LZ78 roundtrip and run-length token count", ok, std::to_string(tokens.size()) + " tokens"};
}

SelftestResult check_chaos() {
  const std::array<std::uint8_t, 9> prefix{1, 2, 3, 4, 5, 6, 7, 8, 9};
  auto a = seed_from_key1(prefix, 0x5A);
  auto b = seed_from_key1(prefix, 0x5A);
  Bytes sa(100000), sb(100000);
  a.fill(sa);
  b.fill(sb);
  std::uint64_t ones = 0;
  for (auto v : sa) ones += static_cast<std::uint64_t>(std::popcount(v));
  const double freq = static_cast<double>(ones) / (8.0 * static_cast<double>(sa.size()));
  const bool ok = sa == sb && std::abs(freq - 0.5) <= 0.01 &&
                  ChaoticState::successor(0x0FEDCBA987654321ULL) != 0 &&
                  seed_from_key1(std::array<std::uint8_t, 9>{}, 0).raw() == golden::seeded_zero_prefix;
  return {"chaos stream determinism and monobit", ok, "freq(1) = " + std::to_string(freq)};
}

SelftestResult check_avalanche() {
  std::mt19937_64 rng(11);
  const auto rk = derive_key_material(Matrix3D::default_matrix(), Bytes(16, 0x42)).round_keys;
  double total = 0;
  constexpr int kTrials = 300;
  for (int t = 0; t < kTrials; ++t) {
    aes::Block x;
    for (auto& v : x) v = static_cast<std::uint8_t>(rng());
    auto y = x;
    const auto bit = rng() % 128;
    y[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    const auto cx = aes::encrypt_block(x, rk), cy = aes::encrypt_block(y, rk);
    for (std::size_t i = 0; i < 16; ++i) total += std::popcount(static_cast<unsigned>(cx[i] ^ cy[i]));
  }
  const double mean = total / kTrials;
  return {"plaintext avalanche (chaos round keys)", mean >= 57.6 && mean <= 70.4, "mean " + std::to_string(mean)};
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
  const std::vector<std::function<SelftestResult()>> checks = {
      check_aes,
      [] { return check_key_vectors(kKeyVectors[0]); },
      [] { return check_key_vectors(kKeyVectors[1]); },
      [] { return check_key_vectors(kKeyVectors[2]); },
      check_envelopes,
      check_lz78,
      check_chaos,
      check_avalanche,
  };
  std::vector<SelftestResult> out;
  for (const auto& check : checks) {
    try {
      out.push_back(check());
    } catch (const std::exception& e) {
      out.push_back({"(check threw)", false, e.what()});
    }
  }
  return out;
}

}  // namespace chaoskey
