#include "chaoskey/keyschedule.hpp"

#include "chaoskey/error.hpp"

namespace chaoskey {

Lfsr8::Lfsr8(std::uint8_t seed) : state_(seed) {
  if (seed == 0) throw Error(ErrorCode::ZeroState, "LFSR seed must be nonzero");
}

Bytes derive_key2(ChaoticState& seed, ByteView key1) {
  Bytes key2(key1.size());
  for (std::size_t j = 0; j < key1.size(); ++j) {
    seed.next_byte();
    seed.next_byte();
    seed.next_byte();
    key2[j] = seed.next_byte() ^ key1[j];
  }
  return key2;
}

Bytes derive_key3(ByteView key2, std::uint8_t lfsr_seed) {
  Lfsr8 lfsr(lfsr_seed);
  Bytes key3(key2.size());
  for (std::size_t j = 0; j < key2.size(); ++j) {
    const auto mixed = static_cast<std::uint8_t>(rotl8(key2[j], 1) ^ lfsr.next());
    key3[j] = rotr8(mixed, 1);
  }
  return key3;
}

Bytes derive_final_key(ByteView key1, ByteView key2, ByteView key3) {
  if (key1.size() != key2.size() || key1.size() != key3.size())
    throw Error(ErrorCode::LengthMismatch, "key lengths differ");
  Bytes out(key1.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = key1[j] ^ key2[j] ^ key3[j];
  return out;
}

Bytes generate_keystream(ChaoticState& state, ByteView final_key, std::size_t n) {
  if (final_key.empty()) throw Error(ErrorCode::EmptyKey, "final key is empty");
  Bytes ks(n);
  const std::size_t period = final_key.size();
  std::size_t k = 0;
  for (std::size_t t = 0; t < n; ++t) {
    ks[t] = state.next_byte() ^ final_key[k];
    if (++k == period) k = 0;
  }
  return ks;
}

RoundKeys derive_round_keys(ChaoticState& state) {
  RoundKeys rk{};
  for (auto& key : rk) state.fill(key);
  return rk;
}

Bytes baseline_keystream(const Matrix3D& m, ByteView key1, std::size_t n, std::uint64_t* lookups) {
  if (key1.empty()) throw Error(ErrorCode::EmptyKey, "key1 is empty");
  Bytes out(n);
  std::uint8_t prev = 0;
  const std::size_t period = key1.size();
  std::size_t k = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const auto code = m.encode_byte(static_cast<std::uint8_t>(key1[k] ^ prev));
    prev = static_cast<std::uint8_t>(code.index[0] ^ rotl8(code.index[1], 3) ^ rotr8(code.index[2], 2));
    out[t] = prev;
    if (++k == period) k = 0;
  }
  if (lookups) *lookups += n;
  return out;
}

KeyMaterial derive_key_material(const Matrix3D& m, ByteView master_key) {
  KeyMaterial km;
  km.master_len = master_key.size();
  km.key1 = derive_key1(m, master_key);
  auto key2_state = keyed_state(km.key1, domain::kKey2);
  km.key2 = derive_key2(key2_state, km.key1);
  km.key3 = derive_key3(km.key2);
  km.final_key = derive_final_key(km.key1, km.key2, km.key3);
  auto rk_state = keyed_state(km.key1, domain::kRoundKeys);
  km.round_keys = derive_round_keys(rk_state);
  return km;
}

}  // namespace chaoskey
