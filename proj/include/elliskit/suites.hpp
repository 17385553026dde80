#pragma once

// Seeded verification suites. Instance i is drawn from instance_rng(seed, i)
// and checked independently; workers pull indices from a shared counter and
// the report is reduced in index order, so the thread count never shows in
// the output.

#include <cstdint>
#include <string>
#include <vector>

#include "elliskit/caps.hpp"
#include "elliskit/report.hpp"

namespace elliskit {

struct SuiteConfig {
  std::string suite;  // ellis | grouplike | orbital | structured | product
  std::size_t instances = 100;
  std::uint64_t seed = 0;
  std::size_t max_points = 6;
  std::size_t max_group_order = 12;
  // Harness self-test: the grouplike cardinality check compares against a
  // wrong count, so every instance fails.
  bool inject_fault = false;
  std::size_t threads = 0;  // 0 = hardware concurrency
  Caps caps = default_caps();
};

std::vector<std::string> suite_names();

// Throws Error(InvalidArgument) for an unknown suite name.
Report run_suite(SuiteConfig const& cfg);

}  // namespace elliskit
