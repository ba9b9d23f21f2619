#pragma once

#include <string>
#include <vector>

namespace chaoskey {

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Golden vectors for every pipeline stage plus quick versions of the stream
/// and avalanche invariants. Takes well under a second.
std::vector<SelftestResult> run_selftest();

}  // namespace chaoskey
