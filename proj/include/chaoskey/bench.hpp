#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chaoskey/bytes.hpp"
#include "chaoskey/tdkgm.hpp"

namespace chaoskey::bench {

enum class Sensor { SmokeDetector, SmartLight, IpCamera, IpTv };
enum class Method { Baseline3dkgm, ProposedChaos };
enum class SizeUnit { Kilobit, Kilobyte };

std::string_view to_string(Sensor s) noexcept;
std::string_view to_string(Method m) noexcept;
std::optional<SizeUnit> parse_unit(std::string_view name) noexcept;

struct WorkloadProfile {
  Sensor sensor = Sensor::SmokeDetector;
  std::vector<std::uint32_t> sizes_kb;
  int repetitions = 10;

  /// The smart-home ladders: low-rate sensors at 10..512 kb, video devices at
  /// 1000..3000 kb.
  static WorkloadProfile standard(Sensor s, int repetitions = 10);
};

std::vector<WorkloadProfile> default_profiles(int repetitions = 10);

/// Payload length for `size_kb` units, rounded down.
std::size_t payload_bytes(std::uint32_t size_kb, SizeUnit unit) noexcept;

struct BenchRecord {
  Method method = Method::ProposedChaos;
  Sensor sensor = Sensor::SmokeDetector;
  std::uint32_t size_kb = 0;
  std::size_t bytes = 0;
  double elapsed_ms = 0.0;  // median over repetitions
  double throughput_kb_per_ms = 0.0;
  std::uint64_t work_units = 0;  // map steps (chaos) or matrix lookups (baseline) per run
};

struct BenchOptions {
  SizeUnit unit = SizeUnit::Kilobit;
  const Matrix3D* matrix = nullptr;
  std::uint64_t payload_seed = 0x5EED5EEDULL;
};

/// Times only keystream generation for each (method, profile, size) cell,
/// single-threaded, reporting the median of max(3, repetitions) runs.
std::vector<BenchRecord> run_bench(const std::vector<WorkloadProfile>& profiles, const std::vector<Method>& methods,
                                   ByteView master_key, const BenchOptions& opts = {});

struct TrendFit {
  double slope = 0.0;      // ms per kb
  double intercept = 0.0;  // ms
  double r_squared = 0.0;
};

/// Ordinary least squares of y on x. Throws TooFewPoints below four points.
TrendFit fit_linear(std::span<const double> x, std::span<const double> y);
TrendFit fit_linear(std::span<const BenchRecord> records);

struct TrendCheck {
  Method method;
  bool monotone = false;
  TrendFit fit;
  bool passed(double min_r_squared = 0.98) const noexcept { return monotone && fit.r_squared >= min_r_squared; }
};

/// Per method: medians non-decreasing along each sensor's ladder, plus the
/// linear fit over all of the method's records.
std::vector<TrendCheck> check_trends(std::span<const BenchRecord> records);

/// Published timings (ms) for the default ladders, for side-by-side display.
std::optional<double> reference_ms(Method m, std::uint32_t size_kb) noexcept;

/// `method,sensor,size_kb,elapsed_ms,throughput`
std::string emit_csv(std::span<const BenchRecord> records);

/// Markdown: one table per method, a (size, local, published) column triple
/// per sensor.
std::string emit_table(std::span<const BenchRecord> records);

}  // namespace chaoskey::bench
