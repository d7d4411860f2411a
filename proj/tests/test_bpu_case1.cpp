#include <doctest.h>

#include <numeric>
#include <random>

#include "support/brute_force.hpp"
#include "support/columns.hpp"
#include "unavail/bpu_case1.hpp"
#include "unavail/exact_oracle.hpp"

using namespace unavail;

namespace {

std::vector<Rational> R(std::initializer_list<Rational> v) { return v; }


Rational full_lp(const std::vector<Rational>& sizes, const std::vector<long>& counts, long k, const Rational& U) {
  LPModel lp;
  for (long c : counts) lp.add_row({}, Relation::kGreaterEqual, c);
  for (const auto& a : brute::plain_columns(sizes, k, U)) {
    SparseVector col;
    for (std::size_t z = 0; z < a.size(); ++z) {
      if (a[z]) col.emplace_back(z, a[z]);
    }
    lp.add_column(1, col);
  }
  LpResult r = solve_lp(lp);
  REQUIRE(r.optimal());
  return r.solution.objective;
}

GroupedItems one_class(Rational z, long n) {
  GroupedItems g;
  g.sizes = {z};
  g.counts = {n};
  g.members.emplace_back(static_cast<std::size_t>(n));
  std::iota(g.members[0].begin(), g.members[0].end(), 0);
  return g;
}

}  // namespace

TEST_CASE("configuration identities") {
  BinConfigI c = make_config_case1({2, 1}, 2);
  CHECK(c.delta == 1);
  CHECK(config_feasible_case1(c, R({Rational(1, 4), Rational(1, 4)}), 2, Rational(1, 4)));
  CHECK_FALSE(config_feasible_case1(c, R({Rational(1, 2), Rational(1, 4)}), 2, Rational(1, 4)));
  BinConfigI wrong = c;
  wrong.delta = 0;
  CHECK_FALSE(config_feasible_case1(wrong, R({Rational(1, 4), Rational(1, 4)}), 2, Rational(1, 4)));
}

TEST_CASE("master optimum, unit items") {
  Case1Master m = build_master_case1(one_class(1, 5), 1, 1);
  LpResult r = solve_lp(m.lp);
  REQUIRE(r.optimal());
  CHECK(r.solution.objective == 5);
}

TEST_CASE("master optimum, halves with k = 2") {
  const Rational h(1, 2);
  CHECK(full_lp(R({h}), {4}, 2, h) == 2);
  Case1Master m = build_master_case1(one_class(h, 4), 2, h);
  CHECK(solve_lp(m.lp).solution.objective == 2);
}

TEST_CASE("no items") {
  Case1Result r = solve_case1(PackingInstance{R({}), 1, 1}, Eps(Rational(1, 2)));
  CHECK(r.packing.bins.empty());
  CHECK(r.lp_objective == 0);
}

TEST_CASE("pricing examples") {
  const Rational h(1, 2);
  CHECK_FALSE(price_case1({0}, R({h}), 4, 2, h));
  auto col = price_case1({Rational(3, 5)}, R({h}), 4, 2, h);
  REQUIRE(col);
  CHECK(col->config.alpha == std::vector<long>{2});
  CHECK(col->value == Rational(6, 5));
  CHECK_FALSE(price_case1({Rational(2, 5)}, R({h}), 4, 2, h));
}

TEST_CASE("pricing matches the brute-force column search") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 300; ++t) {
    const std::size_t S = 1 + rng() % 4;
    std::vector<Rational> sizes;
    for (std::size_t z = 0; z < S; ++z) sizes.push_back(brute::random_rational(rng, 1, 12, 12));
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    const long k = 1 + static_cast<long>(rng() % 3);
    const Rational U = brute::random_rational(rng, 2, 6, 6);
    std::vector<Rational> y;
    for (std::size_t z = 0; z < sizes.size(); ++z) y.push_back(brute::random_rational(rng, 0, 8, 10));
    Rational best = 0;
    for (const auto& a : brute::plain_columns(sizes, k, U)) {
      Rational v = 0;
      for (std::size_t z = 0; z < a.size(); ++z) v += y[z] * a[z];
      best = std::max(best, v);
    }
    auto col = price_case1(y, sizes, 100, k, U);
    CHECK(static_cast<bool>(col) == (best > 1));
    if (col) {
      CHECK(col->value == best);
      CHECK(config_feasible_case1(col->config, sizes, k, U));
    }
  }
}

TEST_CASE("packing realises integral counters") {
  const Rational h(1, 2);
  GroupedItems g = one_class(h, 4);
  PackingInstance inst{R({h, h, h, h}), 2, h};
  Packing p = pack_case1({2}, {make_config_case1({2}, 2)}, g, inst);
  CHECK(p.bins.size() == 2);
  CHECK(verify_packing(inst, p).ok());
}

TEST_CASE("end to end against the oracle") {
  std::mt19937_64 rng(47);
  int tried = 0;
  while (tried < 80) {
    const long inv = 1 + static_cast<long>(rng() % 3);
    const Eps eps{Rational(1, inv)};
    const long k = 1 + static_cast<long>(rng() % 3);
    const Rational U = brute::random_rational(rng, 1, 6, 6);
    if (choose_case(k, U, eps) != BpuCase::kCaseI) continue;
    ++tried;
    std::vector<Rational> s;
    for (std::size_t i = 0, n = rng() % 9; i < n; ++i) s.push_back(brute::random_rational(rng, 0, 12, 12));
    PackingInstance inst{s, k, U};
    Case1Result r = solve_case1(inst, eps);
    CHECK(verify_packing(inst, r.packing).ok());
    const long opt = brute::bincount(s, k, U);
    const long inv3 = inv * inv * inv;
    CHECK(Rational(static_cast<long>(r.packing.bins.size())) <= (1 + 2 * eps.value()) * opt + inv3);
    CHECK(r.support <= r.lp_rows);
    CHECK(r.rounding_overhead <= inv3 - 1);

    // LP optimum lower-bounds the rounded instance without class 1.
    IndexSet idx(s.size());
    std::iota(idx.begin(), idx.end(), 0);
    GroupedItems g = linear_grouping(s, idx, eps);
    std::vector<Rational> rounded;
    for (std::size_t z = 0; z < g.sizes.size(); ++z) rounded.insert(rounded.end(), static_cast<std::size_t>(g.counts[z]), g.sizes[z]);
    CHECK(r.lp_objective <= brute::bincount(rounded, k, U));
    if (!g.sizes.empty()) CHECK(r.lp_objective <= eps.one_plus() * full_lp(g.sizes, g.counts, k, U));
  }
}
