#include "test_support.hpp"

#include <random>

#include "chaoskey/lz78.hpp"

using chaoskey::Bytes;
using chaoskey::ErrorCode;
using chaoskey::lz78::Token;
using chaoskey::lz78::Tokens;
using testing::code_of;
namespace lz78 = chaoskey::lz78;

TEST_CASE("compress traces") {
  CHECK(lz78::compress(Bytes{}).empty());
  CHECK(lz78::compress(chaoskey::to_bytes("ABAB")) == Tokens{{0, 'A'}, {0, 'B'}, {1, 'B'}});
  CHECK(lz78::compress(chaoskey::to_bytes("AAAA")) == Tokens{{0, 'A'}, {1, 'A'}, {1, std::nullopt}});
  CHECK(lz78::compress(Bytes{0x00}) == Tokens{{0, 0x00}});
}

TEST_CASE("decompress") {
  CHECK(lz78::decompress({}).empty());
  CHECK(lz78::decompress({{0, 'A'}, {1, 'A'}, {1, std::nullopt}}) == chaoskey::to_bytes("AAAA"));
  CHECK(code_of([] { lz78::decompress({{5, 'A'}}); }) == ErrorCode::BadIndex);
  CHECK(code_of([] { lz78::decompress({{0, 'A'}, {2, 'B'}}); }) == ErrorCode::BadIndex);
  CHECK(code_of([] { lz78::decompress({{0, 'A'}, {1, std::nullopt}, {0, 'B'}}); }) == ErrorCode::MisplacedTerminal);
  CHECK(code_of([] { lz78::decompress({{0, 'A'}, {1, 'A'}}, 2); }) == ErrorCode::LengthMismatch);
  CHECK(lz78::decompress({{0, 'A'}, {1, 'A'}}, 3).size() == 3);
}

TEST_CASE("wire format") {
  CHECK(lz78::encode_tokens({}).empty());
  CHECK(lz78::decode_tokens(Bytes{}).empty());
  CHECK(lz78::encode_tokens({{0, 'A'}}) == Bytes{0x00, 0x01, 0x41});
  CHECK(lz78::encode_tokens({{300, std::nullopt}}) == Bytes{0xAC, 0x02, 0x00});
  CHECK(lz78::decode_tokens(Bytes{0xAC, 0x02, 0x00}) == Tokens{{300, std::nullopt}});

  CHECK(code_of([] { lz78::decode_tokens(Bytes{0x00}); }) == ErrorCode::Truncated);
  CHECK(code_of([] { lz78::decode_tokens(Bytes{0x80}); }) == ErrorCode::Truncated);
  CHECK(code_of([] { lz78::decode_tokens(Bytes{0x00, 0x01}); }) == ErrorCode::Truncated);
  CHECK(code_of([] { lz78::decode_tokens(Bytes{0x00, 0x02, 0x41}); }) == ErrorCode::BadToken);
  CHECK(code_of([] { lz78::decode_tokens(Bytes{0x01, 0x00, 0x00, 0x01, 0x41}); }) == ErrorCode::MisplacedTerminal);
  CHECK(code_of([] { lz78::decode_tokens(Bytes(11, 0xFF)); }) == ErrorCode::BadToken);

  const Tokens big{{UINT64_MAX, 7}};
  CHECK(lz78::decode_tokens(lz78::encode_tokens(big)) == big);
}

TEST_CASE("token streams roundtrip through the wire format") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10000; ++trial) {
    Tokens tokens(rng() % 12);
    for (auto& t : tokens) {
      const int width = static_cast<int>(rng() % 64);
      t.index = width ? (rng() >> (64 - width)) : 0;
      t.symbol = static_cast<std::uint8_t>(rng());
    }
    if (!tokens.empty() && rng() % 3 == 0) tokens.back().symbol.reset();
    REQUIRE(lz78::decode_tokens(lz78::encode_tokens(tokens)) == tokens);
  }
}

TEST_CASE("compress/decompress identity") {
  std::mt19937_64 rng(17);
  auto roundtrip = [](const Bytes& data) {
    const auto tokens = lz78::compress(data);
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      REQUIRE(tokens[t].index <= t);
      if (t + 1 < tokens.size()) REQUIRE(tokens[t].symbol.has_value());
    }
    REQUIRE(lz78::decompress(tokens) == data);
    REQUIRE(lz78::unpack(lz78::pack(data)) == data);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    Bytes data(rng() % 2048);
    const unsigned alphabet = 1u << (rng() % 9);
    for (auto& b : data) b = static_cast<std::uint8_t>(rng() % alphabet);
    roundtrip(data);
  }
  roundtrip(Bytes{});
  roundtrip(Bytes{0x42});
  roundtrip(Bytes(4096, 0x00));
  Bytes periodic(5000);
  for (std::size_t i = 0; i < periodic.size(); ++i) periodic[i] = static_cast<std::uint8_t>("abcabd"[i % 6]);
  roundtrip(periodic);
}

TEST_CASE("a run of n equal bytes compresses to the triangular token count") {
  for (std::size_t n : {1u, 2u, 3u, 4u, 10u, 99u, 1000u, 10000u}) {
    const auto tokens = lz78::compress(Bytes(n, 'A'));
    const std::size_t t = tokens.size();
    CHECK(t * (t + 1) / 2 >= n);
    CHECK((t - 1) * t / 2 < n);
  }
  CHECK(lz78::compress(Bytes(10000, 'A')).size() == 141);
}
