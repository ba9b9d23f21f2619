#include "chaoskey/cipher.hpp"

#include <algorithm>

#include "chaoskey/error.hpp"
#include "chaoskey/lz78.hpp"

namespace chaoskey {
namespace {

struct Schedule {
  Bytes key1;
  Bytes final_key;
  RoundKeys round_keys;
};

Schedule schedule_for(ByteView master_key, const CipherOptions& opts) {
  if (master_key.empty()) throw Error(ErrorCode::EmptyKey, "master key is empty");
  static const Matrix3D kDefault = Matrix3D::default_matrix();
  const Matrix3D& m = opts.matrix ? *opts.matrix : kDefault;

  auto km = derive_key_material(m, master_key);
  if (opts.standard_schedule) {
    if (master_key.size() != 16)
      throw Error(ErrorCode::BadKeySize, "standard schedule needs a 16-byte master key");
    std::array<std::uint8_t, 16> k{};
    std::copy(master_key.begin(), master_key.end(), k.begin());
    km.round_keys = aes::rijndael_round_keys(k);
  }
  return {std::move(km.key1), std::move(km.final_key), km.round_keys};
}

void whiten(std::span<std::uint8_t> data, const Schedule& s) {
  auto state = keystream_state(s.key1);
  const auto ks = generate_keystream(state, s.final_key, data.size());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] ^= ks[i];
}

void put_be64(Bytes& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

}  // namespace

Bytes Envelope::serialize() const {
  Bytes out;
  out.reserve(kHeaderSize + payload.size());
  out.insert(out.end(), kMagic.begin(), kMagic.end());
  out.push_back(version);
  out.push_back(flags);
  out.insert(out.end(), nonce.begin(), nonce.end());
  put_be64(out, plain_len);
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Envelope Envelope::parse(ByteView bytes) {
  if (bytes.size() < kMagic.size() || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    if (bytes.size() < kMagic.size() && std::equal(bytes.begin(), bytes.end(), kMagic.begin()))
      throw Error(ErrorCode::Truncated, "envelope shorter than its header");
    throw Error(ErrorCode::BadMagic, "not a CLAES envelope");
  }
  if (bytes.size() < kHeaderSize) throw Error(ErrorCode::Truncated, "envelope shorter than its header");
  Envelope env;
  env.version = bytes[5];
  if (env.version != kVersion) throw Error(ErrorCode::BadVersion, "unsupported version " + std::to_string(env.version));
  env.flags = bytes[6];
  if (env.flags & ~kFlagCompressed) throw Error(ErrorCode::Malformed, "unknown flag bits");
  std::copy_n(bytes.begin() + 7, env.nonce.size(), env.nonce.begin());
  env.plain_len = 0;
  for (std::size_t i = 19; i < kHeaderSize; ++i) env.plain_len = (env.plain_len << 8) | bytes[i];
  env.payload.assign(bytes.begin() + kHeaderSize, bytes.end());
  return env;
}

void ctr_xor(std::span<std::uint8_t> data, const Nonce& nonce, const RoundKeys& rk) {
  if (data.size() / 16 > 0xFFFFFFFFull) throw Error(ErrorCode::Malformed, "message exceeds counter space");
  aes::Block counter{};
  std::copy(nonce.begin(), nonce.end(), counter.begin());
  std::uint32_t block = 0;
  for (std::size_t off = 0; off < data.size(); off += 16, ++block) {
    counter[12] = static_cast<std::uint8_t>(block >> 24);
    counter[13] = static_cast<std::uint8_t>(block >> 16);
    counter[14] = static_cast<std::uint8_t>(block >> 8);
    counter[15] = static_cast<std::uint8_t>(block);
    const auto pad = aes::encrypt_block(counter, rk);
    const std::size_t n = std::min<std::size_t>(16, data.size() - off);
    for (std::size_t i = 0; i < n; ++i) data[off + i] ^= pad[i];
  }
}

Envelope encrypt_message(ByteView master_key, const Nonce& nonce, ByteView plaintext, const CipherOptions& opts) {
  const auto sched = schedule_for(master_key, opts);
  Envelope env;
  env.flags = opts.compress ? Envelope::kFlagCompressed : 0;
  env.nonce = nonce;
  env.plain_len = plaintext.size();
  env.payload = opts.compress ? lz78::pack(plaintext) : Bytes(plaintext.begin(), plaintext.end());
  whiten(env.payload, sched);
  ctr_xor(env.payload, nonce, sched.round_keys);
  return env;
}

Bytes decrypt_message(const Envelope& env, ByteView master_key, const CipherOptions& opts) {
  if (env.version != Envelope::kVersion) throw Error(ErrorCode::BadVersion, "unsupported envelope version");
  const auto sched = schedule_for(master_key, opts);
  Bytes data = env.payload;
  ctr_xor(data, env.nonce, sched.round_keys);
  whiten(data, sched);
  if (env.compressed()) data = lz78::unpack(data, env.plain_len);
  if (data.size() != env.plain_len)
    throw Error(ErrorCode::LengthMismatch,
                "recovered " + std::to_string(data.size()) + " bytes, header says " + std::to_string(env.plain_len));
  return data;
}

}  // namespace chaoskey
