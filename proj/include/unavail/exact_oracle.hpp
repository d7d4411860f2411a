#pragma once

#include <chrono>
#include <cstdint>

#include "unavail/core_model.hpp"

namespace unavail {

// Exponential-time ground truth for small instances. Hitting any limit yields
// kExceeded, never an approximate answer.
struct OracleLimits {
  std::size_t max_jobs = 12;
  std::uint64_t max_nodes = 200'000'000;
  std::chrono::milliseconds time_budget{30'000};
};

enum class OracleStatus { kOptimal, kExceeded };

struct MakespanResult {
  OracleStatus status = OracleStatus::kExceeded;
  Rational makespan;
  Schedule schedule;
};

struct BincountResult {
  OracleStatus status = OracleStatus::kExceeded;
  long bins = 0;
  Packing packing;
};

// Branch and bound over job-to-machine assignments in non-increasing size
// order. Machines are opened in index order and machines in identical states
// are tried once.
MakespanResult exact_makespan(const SchedulingInstance& inst, const OracleLimits& limits = {});

// Branch and bound over item-to-bin assignments, same symmetry breaking.
BincountResult exact_bincount(const PackingInstance& inst, const OracleLimits& limits = {});

}  // namespace unavail
