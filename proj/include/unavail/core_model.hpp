#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "unavail/rational.hpp"

namespace unavail {

using Index = std::size_t;
using IndexSet = std::vector<Index>;

// m identical machines; after every k consecutive jobs a machine is down for U.
struct SchedulingInstance {
  std::vector<Rational> job_sizes;
  long m = 1;
  long k = 1;
  Rational U = 0;

  std::size_t n() const { return job_sizes.size(); }
  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

// Unit bins; an idle item of size U follows every k consecutive items.
struct PackingInstance {
  std::vector<Rational> item_sizes;
  long k = 1;
  Rational U = 1;

  std::size_t n() const { return item_sizes.size(); }
  void validate() const;
};

// machine_sets[i] holds the job indices on machine i. Empty machines are legal.
struct Schedule {
  std::vector<IndexSet> machine_sets;
};

// Every bin must be nonempty.
struct Packing {
  std::vector<IndexSet> bins;
};

struct Violation {
  enum class Kind { kNotPartition, kMachineCount, kEmptyBin, kOverload };
  Kind kind;
  std::string message;
  // load - bound for kOverload, zero otherwise.
  Rational excess = 0;
};

struct Verification {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// sum(sizes) + U * floor((|sizes|-1)/k). Throws std::invalid_argument on an
// empty multiset.
Rational schedule_load(std::span<const Rational> sizes, long k, const Rational& U);
Rational bin_load(std::span<const Rational> sizes, long k, const Rational& U);

// floor(k/U) + k, the most items any feasible bin can hold.
long kmax(long k, const Rational& U);

// Number of unavailability periods triggered by `count` jobs on one machine.
long idle_periods(std::size_t count, long k);

std::vector<Rational> gather(std::span<const Rational> sizes, const IndexSet& indices);

// Load of a machine's job set; zero for an empty machine.
Rational machine_load(const SchedulingInstance& inst, const IndexSet& jobs);
Rational makespan(const SchedulingInstance& inst, const Schedule& sched);

Rational packing_bin_load(const PackingInstance& inst, const IndexSet& items);

// Non-increasing size, ascending index on ties.
void canonical_order(std::span<const Rational> sizes, IndexSet& indices);
void canonicalize(const SchedulingInstance& inst, Schedule& sched);
void canonicalize(const PackingInstance& inst, Packing& pack);

Verification verify_schedule(const SchedulingInstance& inst, const Schedule& sched,
                             const Rational& bound);
Verification verify_packing(const PackingInstance& inst, const Packing& pack);

}  // namespace unavail
