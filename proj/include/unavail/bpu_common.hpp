#pragma once

#include <span>
#include <vector>

#include "unavail/core_model.hpp"

namespace unavail {

enum class BpuCase { kCaseI, kCaseII };

// Case I iff kmax(k, U) <= 1/eps^2.
BpuCase choose_case(long k, const Rational& U, const Eps& eps);

struct ItemClassification {
  IndexSet small;  // s < eps
  IndexSet large;
};

ItemClassification classify_items(const PackingInstance& inst, const Eps& eps);

struct GroupedItems {
  // 1/eps^3 consecutive classes of the sorted item list; classes[0] is set aside.
  std::vector<IndexSet> classes;
  IndexSet class1;
  // Rounded size per instance item; only meaningful for grouped items
  // outside class 1.
  std::vector<Rational> rounded;
  // Distinct rounded sizes (descending), item counts n(z) and members.
  std::vector<Rational> sizes;
  std::vector<long> counts;
  std::vector<IndexSet> members;

  // Position of a rounded size in `sizes`.
  std::size_t size_index(const Rational& z) const;
};

// Sorts `items` (non-increasing, index tiebreak), cuts them into 1/eps^3
// classes whose cardinalities run from ceil(eps^3 N) down to floor(eps^3 N),
// and rounds every item outside class 1 up to its class maximum.
GroupedItems linear_grouping(std::span<const Rational> sizes, const IndexSet& items, const Eps& eps);

// Largest t <= cap with t*z + U*floor((t-1)/k) <= 1; at least 1 for z <= 1.
long max_copies(const Rational& z, long k, const Rational& U, long cap);

// Baseline: items in non-increasing order, each into the first bin whose
// load stays within 1.
Packing first_fit_decreasing(const PackingInstance& inst);

// First fit of `items` in the given order into fresh bins.
std::vector<IndexSet> first_fit(const PackingInstance& inst, const IndexSet& items);

}  // namespace unavail
