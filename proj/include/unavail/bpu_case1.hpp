#pragma once

#include <optional>
#include <vector>

#include "unavail/bpu_common.hpp"
#include "unavail/lp.hpp"

namespace unavail {

struct BinConfigI {
  std::vector<long> alpha;  // count per rounded size
  long delta = 0;           // idle items, floor((sum alpha - 1)/k)

  long count() const;
};

// delta consistent, load <= 1 and at most kmax items.
bool config_feasible_case1(const BinConfigI& c, std::span<const Rational> sizes, long k, const Rational& U);

BinConfigI make_config_case1(std::vector<long> alpha, long k);

// Covering rows sum_c x_c alpha_cz >= n(z), objective min sum x_c. Its
// columns are kept parallel to `configs`.
struct Case1Master {
  LPModel lp;
  std::vector<BinConfigI> configs;
};

// Starts with one column per size holding as many copies as fit alone.
Case1Master build_master_case1(const GroupedItems& g, long k, const Rational& U);

struct PricedConfigI {
  BinConfigI config;
  Rational value;  // sum alpha_z y_z
};

// For each cardinality 1..min(n, kmax) maximises sum alpha_z y_z subject to
// the capacity 1 - U*(ceil(a/k) - 1). Returns the best configuration if it is
// worth more than 1. Exact, so NoColumn certifies value <= 1.
std::optional<PricedConfigI> price_case1(const std::vector<Rational>& duals, std::span<const Rational> sizes,
                                         long n, long k, const Rational& U);

// Bins realising ceil(x*) copies of each configuration over the rounded
// classes, then one bin per class-1 item. Empty bins are dropped. Throws
// std::logic_error if an item stays unpacked or a bin overflows.
Packing pack_case1(const std::vector<long>& copies, const std::vector<BinConfigI>& configs, const GroupedItems& g,
                   const PackingInstance& inst);

struct Case1Result {
  Packing packing;
  Rational lp_objective = 0;
  std::size_t lp_rows = 0;
  std::size_t support = 0;
  Rational rounding_overhead = 0;  // sum(ceil(x*) - x*)
  std::size_t columns = 0;
  std::size_t iterations = 0;
  std::size_t class1_bins = 0;
};

Case1Result solve_case1(const PackingInstance& inst, const Eps& eps);

}  // namespace unavail
