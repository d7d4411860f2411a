#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "unavail/core_model.hpp"

namespace unavail {

struct RoundedInstance {
  SchedulingInstance original;
  // Each positive size rounded up to an integer power of (1+eps); zeros stay zero.
  std::vector<Rational> rounded_sizes;
  Eps eps;

  // The same machine data with the rounded sizes.
  SchedulingInstance rounded() const;
};

// Smallest integer e with base^e >= value. Requires value > 0 and base > 1.
long ceil_log(const Rational& value, const Rational& base);

RoundedInstance round_sizes(const SchedulingInstance& inst, const Eps& eps);

struct MakespanBounds {
  Rational lower;
  Rational upper;
};

// LB = max(p_max, sum/m), raised to U when n > m*k; UB = sum + U*floor((n-1)/k).
MakespanBounds makespan_bounds(const RoundedInstance& inst);

// Largest machine load of `sched` measured with the early/late reformulation.
Rational reformulated_makespan(const RoundedInstance& inst, const Schedule& sched);

// A trivial schedule of the rounded instance: sorted round-robin when
// n <= m*k, otherwise whichever of round-robin and single-machine has the
// smaller reformulated makespan.
Schedule reference_schedule(const RoundedInstance& inst);

// Powers of (1+eps) from ceil_log(LB) up to ceil_log of the reference
// schedule's reformulated makespan. Empty when LB is zero.
std::vector<Rational> candidate_grid(const RoundedInstance& inst);

using Probe = std::function<std::optional<Schedule>(const Rational&)>;

struct SearchResult {
  bool found = false;
  Rational T = 0;
  Schedule schedule;
  std::size_t probes = 0;
};

// Bisection for the smallest candidate the probe accepts, assuming the probe
// is monotone. found == false means it failed even at the largest candidate.
SearchResult binary_search(const std::vector<Rational>& candidates, const Probe& probe);

class ProbeInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JobClassification {
  Rational T;
  IndexSet small;
  IndexSet large;
  // Distinct large sizes, descending, and how many large jobs have each.
  std::vector<Rational> large_sizes;
  std::vector<long> large_counts;
};

// Small iff p' < eps*T. Throws ProbeInfeasible when a job exceeds T.
JobClassification classify_jobs(const RoundedInstance& inst, const Rational& T);

// Load of one machine under the early/late rule; `sizes` in canonical order.
// The first k/eps jobs are early; each later job pays an extra U/k, plus U/eps.
Rational reformulated_load(std::span<const Rational> sizes, long k, const Rational& U, const Eps& eps);

struct Configuration {
  std::vector<long> alpha;  // count per large size, aligned with large_sizes
  long beta = 0;
  long gamma = 0;
  int gamma_prime = 0;
  long delta = 1;

  long large_count() const;
  bool operator==(const Configuration&) const = default;
};

Rational configuration_load(const Configuration& c, std::span<const Rational> large_sizes,
                            const Rational& T, const Eps& eps, const Rational& U);

// Every configuration with load <= T whose counts lie in 0..1/eps,
// beta, gamma in 0..1/eps, delta in 1..1/eps+1, gamma' = 0 forcing gamma = 0.
// Ordered by alpha (odometer, first size slowest), then beta, gamma', gamma, delta.
std::vector<Configuration> enumerate_configurations(const JobClassification& cls, const Rational& T,
                                                    const Eps& eps, const Rational& U);

}  // namespace unavail
