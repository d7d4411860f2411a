#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "unavail/bpu_common.hpp"
#include "unavail/exact_oracle.hpp"
#include "unavail/generate.hpp"

namespace unavail {

// One generated family: every seed in [seed_first, seed_last].
struct BenchRun {
  GeneratorSpec spec;
  Rational eps{1};
  std::uint64_t seed_first = 0;
  std::uint64_t seed_last = 0;
};

struct BenchFile {
  std::filesystem::path path;
  Rational eps{1};
};

struct BenchConfig {
  std::vector<BenchRun> runs;
  std::vector<BenchFile> files;
  OracleLimits oracle;
  std::optional<std::filesystem::path> output;  // CSV goes to stdout when unset
};

// {"runs": [{"kind", "distribution", "n", "m", "k", "U", "eps", "seeds": [a, b], "grid"}],
//  "instances": [{"path", "eps"}], "oracle": {"max_jobs", "max_nodes", "time_budget_ms"},
//  "output": path}. Every key is optional; rationals are strings.
BenchConfig parse_bench_config(const std::string& json_text, const std::filesystem::path& base_dir = {});

// Guarantee on the algorithm value given the optimum.
Rational sched_ratio_bound(const Eps& eps);  // (1+eps)^3 (1+3 eps)
Rational packing_bound(BpuCase which, const Eps& eps, long opt);

struct BenchRow {
  std::optional<std::uint64_t> seed;
  std::string kind;
  std::size_t n = 0;
  std::optional<long> m;
  long k = 1;
  Rational U = 0;
  Rational eps = 1;
  std::optional<Rational> value;    // unset when the solver failed
  std::optional<Rational> oracle;   // unset when the oracle gave up
  double wall_ms = 0;
  bool violated = false;
  std::string error;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  bool any_violation() const;
};

// Worker count from UNAVAIL_BENCH_WORKERS, else the hardware concurrency.
std::size_t bench_workers();

BenchReport run_benchmark(const BenchConfig& config, std::size_t workers = bench_workers());

// Header: seed,kind,n,m,k,U,eps,value,oracle,ratio,wall_ms. The ratio cell
// is blank when the oracle gave up.
void write_csv(const BenchReport& report, std::ostream& out);

}  // namespace unavail
