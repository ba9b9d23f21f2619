// chaoskey command-line front end. Every subcommand is a thin wrapper over the
// library; exit codes: 0 ok, 1 usage, 2 data/format error, 3 failed check.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>

#include "chaoskey/bench.hpp"
#include "chaoskey/cipher.hpp"
#include "chaoskey/error.hpp"
#include "chaoskey/keyschedule.hpp"
#include "chaoskey/lz78.hpp"
#include "chaoskey/selftest.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitCheck = 3;

using chaoskey::Bytes;
using chaoskey::Error;
using chaoskey::ErrorCode;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, chaoskey::ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write failed for " + path);
}

struct KeyArgs {
  std::string hex;
  std::string file;
  std::string matrix;

  void attach(CLI::App* app) {
    auto* k = app->add_option("--key", hex, "master key as hex");
    auto* f = app->add_option("--key-file", file, "file holding the master key as hex text");
    k->excludes(f);
    app->add_option("--matrix", matrix, "key generation matrix config file");
  }

  Bytes key() const {
    std::string text = hex;
    if (!file.empty()) {
      const auto raw = read_file(file);
      text.assign(raw.begin(), raw.end());
      std::erase_if(text, [](unsigned char c) { return std::isspace(c); });
    }
    if (text.empty()) throw UsageError("a master key is required (--key or --key-file)");
    return chaoskey::from_hex(text);
  }

  std::optional<chaoskey::Matrix3D> load_matrix() const {
    if (matrix.empty()) return std::nullopt;
    return chaoskey::Matrix3D::load(matrix);
  }
};

chaoskey::Nonce parse_nonce(const std::string& hex) {
  const auto bytes = chaoskey::from_hex(hex);
  if (bytes.size() != 12) throw UsageError("--nonce needs 24 hex digits");
  chaoskey::Nonce n;
  std::copy(bytes.begin(), bytes.end(), n.begin());
  return n;
}

chaoskey::Nonce random_nonce() {
  std::random_device rd;
  chaoskey::Nonce n;
  for (auto& b : n) b = static_cast<std::uint8_t>(rd());
  return n;
}

int print_selftest() {
  const auto results = chaoskey::run_selftest();
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << ']';
    std::cout << '\n';
    all = all && r.passed;
  }
  std::cout << (all ? "selftest passed\n" : "selftest FAILED\n");
  return all ? 0 : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chaoskey: chaos-scheduled AES with LZ78 pre-compression"};
  app.require_subcommand(1, 1);

  KeyArgs keys;
  std::string input, output, nonce_hex;
  bool no_compress = false;
  bool standard_schedule = false;

  auto* keygen = app.add_subcommand("keygen", "print Key1, Key2, Key3 and the final key for a master key");
  keys.attach(keygen);

  auto* encrypt = app.add_subcommand("encrypt", "encrypt a file into an envelope");
  auto* decrypt = app.add_subcommand("decrypt", "decrypt an envelope file");
  for (auto* sub : {encrypt, decrypt}) {
    keys.attach(sub);
    sub->add_option("input", input, "input file")->required();
    sub->add_option("output", output, "output file")->required();
    sub->add_flag("--standard-schedule", standard_schedule, "use Rijndael key expansion of a 16-byte key");
  }
  encrypt->add_option("--nonce", nonce_hex, "12-byte nonce as hex (random if omitted)");
  encrypt->add_flag("--no-compress", no_compress, "skip LZ78 pre-compression");

  auto* compress = app.add_subcommand("compress", "LZ78-compress a file into the token wire format");
  auto* decompress = app.add_subcommand("decompress", "expand an LZ78 token file");
  for (auto* sub : {compress, decompress}) {
    sub->add_option("input", input, "input file")->required();
    sub->add_option("output", output, "output file")->required();
  }

  auto* bench = app.add_subcommand("bench", "time keystream generation over the sensor workloads");
  std::string unit_name = "kilobit", csv_path;
  int reps = 10;
  bool check = false;
  keys.attach(bench);
  bench->add_option("--unit", unit_name, "size unit for the ladders")->check(CLI::IsMember({"kilobit", "kilobyte"}));
  bench->add_option("--reps", reps, "repetitions per point (median reported, minimum 3)")->check(CLI::PositiveNumber);
  bench->add_option("--csv", csv_path, "write records as CSV");
  bench->add_flag("--check", check, "exit 3 unless every trend check passes");

  auto* selftest = app.add_subcommand("selftest", "run golden vectors and invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*keygen) {
      const auto matrix = keys.load_matrix().value_or(chaoskey::Matrix3D::default_matrix());
      const auto km = chaoskey::derive_key_material(matrix, keys.key());
      std::cout << "key1  " << chaoskey::to_hex(km.key1) << '\n'
                << "key2  " << chaoskey::to_hex(km.key2) << '\n'
                << "key3  " << chaoskey::to_hex(km.key3) << '\n'
                << "final " << chaoskey::to_hex(km.final_key) << '\n';
    } else if (*encrypt || *decrypt) {
      const auto matrix = keys.load_matrix();
      chaoskey::CipherOptions opts;
      opts.compress = !no_compress;
      opts.standard_schedule = standard_schedule;
      opts.matrix = matrix ? &*matrix : nullptr;
      const auto key = keys.key();
      const auto data = read_file(input);
      if (*encrypt) {
        chaoskey::Nonce nonce;
        if (nonce_hex.empty()) {
          nonce = random_nonce();
          std::cerr << "nonce " << chaoskey::to_hex(nonce) << '\n';
        } else {
          nonce = parse_nonce(nonce_hex);
        }
        write_file(output, chaoskey::encrypt_message(key, nonce, data, opts).serialize());
      } else {
        write_file(output, chaoskey::decrypt_message(chaoskey::Envelope::parse(data), key, opts));
      }
    } else if (*compress) {
      write_file(output, chaoskey::lz78::pack(read_file(input)));
    } else if (*decompress) {
      write_file(output, chaoskey::lz78::unpack(read_file(input)));
    } else if (*bench) {
      const auto matrix = keys.load_matrix();
      Bytes key = (keys.hex.empty() && keys.file.empty()) ? Bytes(16, 0) : keys.key();
      chaoskey::bench::BenchOptions opts;
      opts.unit = *chaoskey::bench::parse_unit(unit_name);
      opts.matrix = matrix ? &*matrix : nullptr;
      const auto records = chaoskey::bench::run_bench(
          chaoskey::bench::default_profiles(reps),
          {chaoskey::bench::Method::Baseline3dkgm, chaoskey::bench::Method::ProposedChaos}, key, opts);
      if (!csv_path.empty()) write_file(csv_path, chaoskey::to_bytes(chaoskey::bench::emit_csv(records)));
      std::cout << chaoskey::bench::emit_table(records);
      bool ok = true;
      for (const auto& t : chaoskey::bench::check_trends(records)) {
        std::cout << to_string(t.method) << ": monotone=" << (t.monotone ? "yes" : "no") << " slope=" << t.fit.slope
                  << " ms/kb intercept=" << t.fit.intercept << " ms r2=" << t.fit.r_squared
                  << (t.passed() ? "  ok" : "  FAIL") << '\n';
        ok = ok && t.passed();
      }
      if (check && !ok) return kExitCheck;
    } else if (*selftest) {
      return print_selftest();
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
