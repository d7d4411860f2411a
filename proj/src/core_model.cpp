#include "unavail/core_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace unavail {

void SchedulingInstance::validate() const {
  if (m < 1) throw std::invalid_argument("m must be a positive integer");
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  if (U < 0) throw std::invalid_argument("U must be nonnegative");
  for (const auto& p : job_sizes) {
    if (p < 0) throw std::invalid_argument("sizes must be nonnegative");
  }
}

void PackingInstance::validate() const {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  if (U <= 0 || U > 1) throw std::invalid_argument("U must lie in (0,1]");
  for (const auto& s : item_sizes) {
    if (s < 0 || s > 1) throw std::invalid_argument("sizes must lie in [0,1]");
  }
}

long idle_periods(std::size_t count, long k) {
  if (count == 0) return 0;
  return static_cast<long>((count - 1) / static_cast<std::size_t>(k));
}

Rational schedule_load(std::span<const Rational> sizes, long k, const Rational& U) {
  if (sizes.empty()) throw std::invalid_argument("load of an empty set is undefined");
  Rational total = 0;
  for (const auto& p : sizes) total += p;
  return total + U * idle_periods(sizes.size(), k);
}

Rational bin_load(std::span<const Rational> sizes, long k, const Rational& U) {
  return schedule_load(sizes, k, U);
}

long kmax(long k, const Rational& U) {
  if (U <= 0) throw std::invalid_argument("kmax requires U > 0");
  return to_int64(floor(Rational(k) / U)) + k;
}

std::vector<Rational> gather(std::span<const Rational> sizes, const IndexSet& indices) {
  std::vector<Rational> out;
  out.reserve(indices.size());
  for (Index i : indices) out.push_back(sizes[i]);
  return out;
}

Rational machine_load(const SchedulingInstance& inst, const IndexSet& jobs) {
  if (jobs.empty()) return 0;
  return schedule_load(gather(inst.job_sizes, jobs), inst.k, inst.U);
}

Rational makespan(const SchedulingInstance& inst, const Schedule& sched) {
  Rational best = 0;
  for (const auto& jobs : sched.machine_sets) best = std::max(best, machine_load(inst, jobs));
  return best;
}

Rational packing_bin_load(const PackingInstance& inst, const IndexSet& items) {
  return bin_load(gather(inst.item_sizes, items), inst.k, inst.U);
}

void canonical_order(std::span<const Rational> sizes, IndexSet& indices) {
  std::sort(indices.begin(), indices.end(), [&](Index a, Index b) {
    if (sizes[a] != sizes[b]) return sizes[a] > sizes[b];
    return a < b;
  });
}

void canonicalize(const SchedulingInstance& inst, Schedule& sched) {
  for (auto& jobs : sched.machine_sets) canonical_order(inst.job_sizes, jobs);
}

void canonicalize(const PackingInstance& inst, Packing& pack) {
  for (auto& items : pack.bins) canonical_order(inst.item_sizes, items);
}

namespace {

// Appends a violation for every index that is out of range, repeated, or missing.
void check_partition(std::size_t n, const std::vector<IndexSet>& parts, const char* what,
                     std::vector<Violation>& out) {
  std::vector<int> seen(n, 0);
  for (const auto& part : parts) {
    for (Index j : part) {
      if (j >= n) {
        out.push_back({Violation::Kind::kNotPartition,
                       std::string(what) + " index " + std::to_string(j) + " out of range"});
        continue;
      }
      ++seen[j];
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (seen[j] == 0) {
      out.push_back({Violation::Kind::kNotPartition,
                     "not a partition: " + std::string(what) + " " + std::to_string(j) + " unassigned"});
    } else if (seen[j] > 1) {
      out.push_back({Violation::Kind::kNotPartition,
                     "not a partition: " + std::string(what) + " " + std::to_string(j) + " assigned " +
                         std::to_string(seen[j]) + " times"});
    }
  }
}

}  // namespace

Verification verify_schedule(const SchedulingInstance& inst, const Schedule& sched,
                             const Rational& bound) {
  Verification v;
  if (sched.machine_sets.size() != static_cast<std::size_t>(inst.m)) {
    v.violations.push_back({Violation::Kind::kMachineCount,
                            "schedule has " + std::to_string(sched.machine_sets.size()) +
                                " machines, instance has " + std::to_string(inst.m)});
  }
  check_partition(inst.n(), sched.machine_sets, "job", v.violations);
  for (std::size_t i = 0; i < sched.machine_sets.size(); ++i) {
    const auto& jobs = sched.machine_sets[i];
    if (std::any_of(jobs.begin(), jobs.end(), [&](Index j) { return j >= inst.n(); })) continue;
    Rational load = machine_load(inst, jobs);
    if (load > bound) {
      v.violations.push_back({Violation::Kind::kOverload,
                              "machine " + std::to_string(i) + ": load " + to_string(load) + " > " +
                                  to_string(bound),
                              load - bound});
    }
  }
  return v;
}

Verification verify_packing(const PackingInstance& inst, const Packing& pack) {
  Verification v;
  check_partition(inst.n(), pack.bins, "item", v.violations);
  for (std::size_t b = 0; b < pack.bins.size(); ++b) {
    const auto& items = pack.bins[b];
    if (items.empty()) {
      v.violations.push_back({Violation::Kind::kEmptyBin, "bin " + std::to_string(b) + " is empty"});
      continue;
    }
    if (std::any_of(items.begin(), items.end(), [&](Index i) { return i >= inst.n(); })) continue;
    Rational load = packing_bin_load(inst, items);
    if (load > 1) {
      v.violations.push_back({Violation::Kind::kOverload,
                              "bin " + std::to_string(b) + ": load " + to_string(load) + " > 1",
                              load - 1});
    }
  }
  return v;
}

}  // namespace unavail
