#pragma once

#include <optional>
#include <span>
#include <vector>

#include "unavail/bpu_common.hpp"
#include "unavail/lp.hpp"

namespace unavail {

struct BinConfigII {
  std::vector<long> alpha;  // count per large rounded size
  long delta = 1;
  long gamma = 0;
  int gamma_prime = 0;

  long large_count() const;
  bool operator==(const BinConfigII&) const = default;
};

// sum z*alpha + gamma'*gamma*eps + (delta - 1 + gamma')*U.
Rational config_load_case2(const BinConfigII& c, std::span<const Rational> sizes, const Eps& eps, const Rational& U);

// 1 - load: room for early small items.
Rational early_budget(const BinConfigII& c, std::span<const Rational> sizes, const Eps& eps, const Rational& U);
Rational late_budget(const BinConfigII& c, const Eps& eps);
long count_budget(const BinConfigII& c, long k);

// Load <= 1, gamma in 0..1/eps with gamma' = 0 forcing gamma = 0,
// 1 <= delta <= n, sum alpha <= min(delta*k, n), and delta >= 1/eps when
// gamma' = 1 (a bin with late items has exactly k/eps early ones).
bool config_valid_case2(const BinConfigII& c, std::span<const Rational> sizes, long k, const Rational& U,
                        const Eps& eps, long n);

Rational modified_size(const Rational& s, long k, const Rational& U);

// Load of one bin with the first k/eps items (canonical order) early and
// the rest paying s + U/k, plus |E|/k idle items.
Rational bpu2_load(std::span<const Rational> sizes, long k, const Rational& U, const Eps& eps);

struct Case2Master {
  LPModel lp;
  std::vector<BinConfigII> configs;
  std::vector<std::size_t> config_vars;  // master variable per configuration
  IndexSet small;
  std::vector<Rational> small_sizes;
  std::vector<Rational> small_modified;
  std::size_t num_sizes = 0;
  long inv = 1;  // 1/eps

  std::size_t small_row(std::size_t i) const { return num_sizes + i; }
  std::size_t early_row(long eta) const;
  std::size_t late_row(long eta) const;
  std::size_t count_row(long eta) const;
  // Master variables v_{i,eta} and w_{i,eta}.
  std::size_t v_var(std::size_t i, long eta) const;
  std::size_t w_var(std::size_t i, long eta) const;

  // Column entries of a configuration in this master.
  SparseVector column(const BinConfigII& c, std::span<const Rational> sizes, long k, const Rational& U,
                      const Eps& eps) const;
};

// Rows: covering per large size, one per small item, then per eta an early
// size, late size and early count row. All v/w columns are present; the
// configuration columns start with one per large size plus the empty
// configuration.
Case2Master build_master_case2(const GroupedItems& g, const PackingInstance& inst, const IndexSet& small,
                               const Eps& eps);

struct Case2Duals {
  std::vector<Rational> lambda;  // per large size
  std::vector<Rational> mu;      // per small item
  std::vector<Rational> nu, xi, rho;  // per eta
};

Case2Duals split_duals(const Case2Master& master, const std::vector<Rational>& duals);

// Left side of the dual constraint of a configuration.
Rational dual_lhs(const BinConfigII& c, const Case2Duals& d, std::span<const Rational> sizes, long k,
                  const Rational& U, const Eps& eps);

struct RoundedIp {
  std::vector<long> alpha;
  Rational value;  // rounded objective
};

// max sum alpha_z (profit_z - nu*z') s.t. sum alpha <= count_bound and
// sum alpha z' <= capacity, with z' the size rounded down to a multiple of
// eps*capacity/n. Dynamic program over (count, capacity units).
RoundedIp solve_rounded_ip(const std::vector<Rational>& profit, const Rational& nu, std::span<const Rational> sizes,
                           long count_bound, const Rational& capacity, long n, const Eps& eps);

struct PricedConfigII {
  BinConfigII config;
  Rational lhs;
};

// Loops over (gamma, gamma', delta); per guess the rounded IP bounds the
// best large-item content from above. A guess whose bound does not exceed 1
// is certified; otherwise an exact search over large multisets decides it.
// Returns the most violated valid configuration, if any.
std::optional<PricedConfigII> price_case2(const Case2Duals& duals, std::span<const Rational> sizes, long k,
                                          const Rational& U, const Eps& eps, long n);

struct DeltaBin {
  std::size_t config = 0;
  IndexSet large;
  Rational early_room;  // zeta^e
  long early_slots = 0;  // zeta^n
  Rational late_room;   // zeta^l
};

// Opens ceil(u*) bins per configuration in the support and fills the large
// slots in opening order. Throws std::logic_error if a large item is left.
std::vector<DeltaBin> assign_large_case2(const std::vector<long>& copies, const std::vector<BinConfigII>& configs,
                                         const GroupedItems& g, const PackingInstance& inst, const Eps& eps);

struct SmallAssignment {
  Packing packing;
  std::size_t lp_rows = 0;
  std::size_t lp_support = 0;
  std::size_t fractional_items = 0;  // items left over after the basic solution
  std::size_t uncovered_items = 0;   // items the feasibility system could not place
  std::size_t dealt_overflow = 0;    // items returned when dealing a block overflowed a bin
  std::size_t leftover_bins = 0;
  std::size_t repaired_bins = 0;
  std::size_t shed_bins = 0;
};

// Basic feasible point of the small-item system over blocks of bins sharing
// a configuration; integral parts are dealt round robin to the block's bins,
// leftovers go into dedicated bins, overfull bins are repaired by shedding
// small items into merged bins.
SmallAssignment assign_small_case2(const std::vector<DeltaBin>& bins, const IndexSet& small,
                                   const PackingInstance& inst, const Eps& eps);

// For every bin holding more than k/eps items: U <= eps and the k smallest
// early items plus one idle item total at most eps.
bool late_bins_have_light_block(const PackingInstance& inst, const Packing& pack, const Eps& eps);

struct Case2Result {
  Packing packing;
  Rational lp_objective = 0;
  std::size_t lp_rows = 0;
  std::size_t support = 0;
  std::size_t config_support = 0;
  Rational rounding_overhead = 0;
  std::size_t delta_bins = 0;
  std::size_t class1_bins = 0;
  std::size_t iterations = 0;
  SmallAssignment small;
};

Case2Result solve_case2(const PackingInstance& inst, const Eps& eps);

}  // namespace unavail
