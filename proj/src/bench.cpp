#include "chaoskey/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

#include "chaoskey/error.hpp"
#include "chaoskey/keyschedule.hpp"

namespace chaoskey::bench {
namespace {

// Keeps the timed keystream from being optimized away.
volatile std::uint8_t g_sink = 0;

constexpr std::array<Sensor, 4> kSensors{Sensor::SmokeDetector, Sensor::SmartLight, Sensor::IpCamera, Sensor::IpTv};

struct Reference {
  std::uint32_t size_kb;
  double baseline_ms;
  double proposed_ms;
};

constexpr std::array<Reference, 10> kReference{{
    {10, 19, 26},
    {30, 57, 67},
    {155, 295, 301},
    {350, 665, 671},
    {512, 973, 911},
    {1000, 1516, 1489},
    {1500, 1999, 1968},
    {2000, 2432, 2356},
    {2500, 2825, 2765},
    {3000, 3287, 3200},
}};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string format_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

}  // namespace

std::string_view to_string(Sensor s) noexcept {
  switch (s) {
    case Sensor::SmokeDetector: return "SmokeDetector";
    case Sensor::SmartLight: return "SmartLight";
    case Sensor::IpCamera: return "IpCamera";
    case Sensor::IpTv: return "IpTv";
  }
  return "?";
}

std::string_view to_string(Method m) noexcept {
  return m == Method::Baseline3dkgm ? "baseline3dkgm" : "proposedChaos";
}

std::optional<SizeUnit> parse_unit(std::string_view name) noexcept {
  if (name == "kilobit" || name == "kb") return SizeUnit::Kilobit;
  if (name == "kilobyte" || name == "kB") return SizeUnit::Kilobyte;
  return std::nullopt;
}

WorkloadProfile WorkloadProfile::standard(Sensor s, int repetitions) {
  WorkloadProfile p;
  p.sensor = s;
  p.repetitions = repetitions;
  if (s == Sensor::SmokeDetector || s == Sensor::SmartLight)
    p.sizes_kb = {10, 30, 155, 350, 512};
  else
    p.sizes_kb = {1000, 1500, 2000, 2500, 3000};
  return p;
}

std::vector<WorkloadProfile> default_profiles(int repetitions) {
  std::vector<WorkloadProfile> out;
  for (auto s : kSensors) out.push_back(WorkloadProfile::standard(s, repetitions));
  return out;
}

std::size_t payload_bytes(std::uint32_t size_kb, SizeUnit unit) noexcept {
  return unit == SizeUnit::Kilobit ? std::size_t{size_kb} * 1000 / 8 : std::size_t{size_kb} * 1000;
}

std::vector<BenchRecord> run_bench(const std::vector<WorkloadProfile>& profiles, const std::vector<Method>& methods,
                                   ByteView master_key, const BenchOptions& opts) {
  const Matrix3D fallback = Matrix3D::default_matrix();
  const Matrix3D& matrix = opts.matrix ? *opts.matrix : fallback;
  const auto km = derive_key_material(matrix, master_key);
  const auto seeded = keystream_state(km.key1);

  std::mt19937_64 rng(opts.payload_seed);
  std::vector<BenchRecord> records;
  std::vector<int> reps;
  std::vector<Bytes> payloads;
  for (auto method : methods) {
    for (const auto& profile : profiles) {
      for (auto size_kb : profile.sizes_kb) {
        BenchRecord rec;
        rec.method = method;
        rec.sensor = profile.sensor;
        rec.size_kb = size_kb;
        rec.bytes = payload_bytes(size_kb, opts.unit);
        records.push_back(rec);
        reps.push_back(std::max(3, profile.repetitions));
        // Sensor payload; its content does not enter the timed keystream call.
        Bytes payload(rec.bytes);
        std::generate(payload.begin(), payload.end(), [&] { return static_cast<std::uint8_t>(rng()); });
        payloads.push_back(std::move(payload));
      }
    }
  }

  auto time_once = [&](BenchRecord& rec, const Bytes& payload) {
    std::uint64_t work = 0;
    Bytes ks;
    const auto t0 = std::chrono::steady_clock::now();
    if (rec.method == Method::ProposedChaos) {
      auto state = seeded;
      ks = generate_keystream(state, km.final_key, rec.bytes);
      work = state.iterations();
    } else {
      ks = baseline_keystream(matrix, km.key1, rec.bytes, &work);
    }
    const auto t1 = std::chrono::steady_clock::now();
    rec.work_units = work;
    if (!ks.empty()) g_sink = g_sink ^ ks.back() ^ payload.back();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
  };

  // Repetitions run round-robin over all points so a burst of machine noise
  // lands on one sample of many points instead of every sample of one point.
  // The first pass is an untimed warm-up.
  std::vector<std::vector<double>> samples(records.size());
  const int max_reps = reps.empty() ? 0 : *std::max_element(reps.begin(), reps.end());
  for (int r = -1; r < max_reps; ++r)
    for (std::size_t i = 0; i < records.size(); ++i)
      if (r < reps[i]) {
        const double ms = time_once(records[i], payloads[i]);
        if (r >= 0) samples[i].push_back(ms);
      }

  for (std::size_t i = 0; i < records.size(); ++i) {
    records[i].elapsed_ms = std::max(median(std::move(samples[i])), 1e-6);
    records[i].throughput_kb_per_ms = records[i].size_kb / records[i].elapsed_ms;
  }
  return records;
}

TrendFit fit_linear(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::LengthMismatch, "x and y differ in length");
  if (x.size() < 4) throw Error(ErrorCode::TooFewPoints, "need at least 4 points, got " + std::to_string(x.size()));
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  TrendFit fit;
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double sse = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (fit.intercept + fit.slope * x[i]);
    sse += e * e;
  }
  fit.r_squared = syy > 0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
  return fit;
}

TrendFit fit_linear(std::span<const BenchRecord> records) {
  std::vector<double> x, y;
  for (const auto& r : records) {
    x.push_back(r.size_kb);
    y.push_back(r.elapsed_ms);
  }
  return fit_linear(x, y);
}

std::vector<TrendCheck> check_trends(std::span<const BenchRecord> records) {
  std::vector<TrendCheck> out;
  for (auto method : {Method::Baseline3dkgm, Method::ProposedChaos}) {
    std::vector<BenchRecord> mine;
    std::copy_if(records.begin(), records.end(), std::back_inserter(mine),
                 [&](const BenchRecord& r) { return r.method == method; });
    if (mine.empty()) continue;

    TrendCheck check;
    check.method = method;
    check.monotone = true;
    for (auto sensor : kSensors) {
      std::vector<const BenchRecord*> ladder;
      for (const auto& r : mine)
        if (r.sensor == sensor) ladder.push_back(&r);
      std::sort(ladder.begin(), ladder.end(), [](auto* a, auto* b) { return a->size_kb < b->size_kb; });
      for (std::size_t i = 1; i < ladder.size(); ++i)
        if (ladder[i]->elapsed_ms < ladder[i - 1]->elapsed_ms) check.monotone = false;
    }
    check.fit = fit_linear(mine);
    out.push_back(check);
  }
  return out;
}

std::optional<double> reference_ms(Method m, std::uint32_t size_kb) noexcept {
  for (const auto& ref : kReference)
    if (ref.size_kb == size_kb) return m == Method::Baseline3dkgm ? ref.baseline_ms : ref.proposed_ms;
  return std::nullopt;
}

std::string emit_csv(std::span<const BenchRecord> records) {
  std::string out = "method,sensor,size_kb,elapsed_ms,throughput\n";
  for (const auto& r : records) {
    out += std::string(to_string(r.method)) + ',' + std::string(to_string(r.sensor)) + ',' +
           std::to_string(r.size_kb) + ',' + format_double(r.elapsed_ms, 6) + ',' +
           format_double(r.throughput_kb_per_ms, 6) + '\n';
  }
  return out;
}

std::string emit_table(std::span<const BenchRecord> records) {
  std::ostringstream os;
  for (auto method : {Method::Baseline3dkgm, Method::ProposedChaos}) {
    // sensor -> rows in ladder order
    std::map<Sensor, std::vector<const BenchRecord*>> columns;
    for (const auto& r : records)
      if (r.method == method) columns[r.sensor].push_back(&r);
    if (columns.empty()) continue;

    std::size_t rows = 0;
    for (auto& [sensor, col] : columns) {
      std::sort(col.begin(), col.end(), [](auto* a, auto* b) { return a->size_kb < b->size_kb; });
      rows = std::max(rows, col.size());
    }

    os << "### " << to_string(method) << " key generation time\n\n|";
    for (const auto& [sensor, col] : columns) os << ' ' << to_string(sensor) << " size (kb) | local (ms) | published (ms) |";
    os << "\n|";
    for (std::size_t i = 0; i < columns.size(); ++i) os << "---:|---:|---:|";
    os << '\n';
    for (std::size_t row = 0; row < rows; ++row) {
      os << '|';
      for (const auto& [sensor, col] : columns) {
        if (row >= col.size()) {
          os << " | | |";
          continue;
        }
        const auto& r = *col[row];
        const auto ref = reference_ms(method, r.size_kb);
        os << ' ' << r.size_kb << " | " << format_double(r.elapsed_ms, 3) << " | "
           << (ref ? format_double(*ref, 0) : std::string("-")) << " |";
      }
      os << '\n';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace chaoskey::bench
