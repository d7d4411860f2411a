#include <doctest.h>

#include <numeric>
#include <random>

#include "support/brute_force.hpp"
#include "unavail/bpu_common.hpp"
#include "unavail/exact_oracle.hpp"

using namespace unavail;

namespace {

std::vector<Rational> R(std::initializer_list<Rational> v) { return v; }

IndexSet all_of(std::size_t n) {
  IndexSet v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("case choice") {
  CHECK(choose_case(1, 1, Eps(Rational(1, 2))) == BpuCase::kCaseI);
  CHECK(choose_case(3, Rational(2, 5), Eps(Rational(1, 2))) == BpuCase::kCaseII);
  CHECK(choose_case(1, 1, Eps(Rational(1))) == BpuCase::kCaseII);
}

TEST_CASE("item classification is strict at eps") {
  const Eps eps(Rational(1, 2));
  auto c = classify_items(PackingInstance{R({Rational(1, 2), Rational(1, 4)}), 1, 1}, eps);
  CHECK(c.large == IndexSet{0});
  CHECK(c.small == IndexSet{1});
  auto z = classify_items(PackingInstance{R({0, 0, 0}), 1, 1}, eps);
  CHECK(z.small.size() == 3);
  CHECK(z.large.empty());
}

TEST_CASE("sixteen equal items") {
  std::vector<Rational> s(16, Rational(1, 3));
  GroupedItems g = linear_grouping(s, all_of(16), Eps(Rational(1, 2)));
  REQUIRE(g.classes.size() == 8);
  for (const auto& c : g.classes) CHECK(c.size() == 2);
  CHECK(g.class1.size() == 2);
  CHECK(g.sizes == R({Rational(1, 3)}));
  CHECK(g.counts == std::vector<long>{14});
  for (const auto& r : g.rounded) CHECK(r == Rational(1, 3));
}

TEST_CASE("empty grouping") {
  GroupedItems g = linear_grouping(R({}), {}, Eps(Rational(1, 2)));
  CHECK(g.classes.size() == 8);
  for (const auto& c : g.classes) CHECK(c.empty());
  CHECK(g.sizes.empty());
}

TEST_CASE("nine items 9..1") {
  std::vector<Rational> s;
  for (int v = 1; v <= 9; ++v) s.push_back(v);
  GroupedItems g = linear_grouping(s, all_of(9), Eps(Rational(1, 2)));
  // ceil(9/8) = 2 then floor(9/8) = 1.
  REQUIRE(g.class1.size() == 2);
  CHECK(s[g.class1[0]] == 9);
  CHECK(s[g.class1[1]] == 8);
  for (std::size_t c = 1; c < 8; ++c) {
    REQUIRE(g.classes[c].size() == 1);
    CHECK(s[g.classes[c][0]] == Rational(static_cast<long>(8 - c)));
  }
  CHECK(g.sizes.size() == 7);
}

TEST_CASE("grouping properties") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const long inv = 1 + static_cast<long>(rng() % 3);
    const Eps eps{Rational(1, inv)};
    const std::size_t n = rng() % 60;
    std::vector<Rational> s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(brute::random_rational(rng, 0, 10, 10));
    GroupedItems g = linear_grouping(s, all_of(n), eps);
    const std::size_t G = static_cast<std::size_t>(inv * inv * inv);
    REQUIRE(g.classes.size() == G);
    std::size_t total = 0;
    IndexSet concat;
    for (std::size_t c = 0; c < G; ++c) {
      total += g.classes[c].size();
      concat.insert(concat.end(), g.classes[c].begin(), g.classes[c].end());
      if (c > 0) CHECK(g.classes[c].size() <= g.classes[c - 1].size());
      CHECK(g.classes[c].size() >= n / G);
      CHECK(g.classes[c].size() <= (n + G - 1) / G);
    }
    CHECK(total == n);
    IndexSet sorted = all_of(n);
    canonical_order(s, sorted);
    CHECK(concat == sorted);
    CHECK(g.sizes.size() <= G - 1);
    // Dominance: j-th rounded item of class c+1 <= j-th original of class c.
    for (std::size_t c = 1; c + 1 < G; ++c) {
      for (std::size_t j = 0; j < g.classes[c + 1].size(); ++j) {
        CHECK(g.rounded[g.classes[c + 1][j]] <= s[g.classes[c][j]]);
      }
    }
    for (std::size_t c = 1; c < G; ++c) {
      for (Index i : g.classes[c]) {
        CHECK(g.rounded[i] == s[g.classes[c].front()]);
        CHECK(g.rounded[i] >= s[i]);
      }
    }
    long counted = 0;
    for (std::size_t z = 0; z < g.sizes.size(); ++z) {
      counted += g.counts[z];
      CHECK(static_cast<long>(g.members[z].size()) == g.counts[z]);
      if (z > 0) CHECK(g.sizes[z] < g.sizes[z - 1]);
    }
    CHECK(counted + static_cast<long>(g.class1.size()) == static_cast<long>(n));
  }
}

TEST_CASE("class one costs few extra bins") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 200; ++t) {
    const long inv = 1 + static_cast<long>(rng() % 2);
    const Eps eps{Rational(1, inv)};
    const std::size_t n = 1 + rng() % 9;
    std::vector<Rational> s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(brute::random_rational(rng, 0, 12, 12));
    const long k = 1 + static_cast<long>(rng() % 3);
    const Rational U = brute::random_rational(rng, 1, 6, 6);
    PackingInstance inst{s, k, U};
    const long opt = brute::bincount(s, k, U);
    GroupedItems g = linear_grouping(s, all_of(n), eps);
    CHECK(g.class1.size() <= n * 1.0 / (inv * inv * inv) + 1);
    if (choose_case(k, U, eps) == BpuCase::kCaseI) {
      CHECK(Rational(static_cast<long>(g.class1.size())) <= eps.value() * opt + 1);
    } else {
      auto cls = classify_items(inst, eps);
      GroupedItems gl = linear_grouping(s, cls.large, eps);
      CHECK(Rational(static_cast<long>(gl.class1.size())) <= eps.value() * eps.value() * opt + 1);
    }
  }
}

TEST_CASE("max copies") {
  CHECK(max_copies(Rational(1, 2), 2, Rational(1, 2), 10) == 2);
  CHECK(max_copies(Rational(1, 2), 1, Rational(1, 2), 10) == 1);
  CHECK(max_copies(0, 2, Rational(1, 4), 10) == 10);
  CHECK(max_copies(1, 5, 1, 10) == 1);
}

TEST_CASE("first fit decreasing is feasible") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    std::vector<Rational> s;
    for (std::size_t i = 0, n = rng() % 30; i < n; ++i) s.push_back(brute::random_rational(rng, 0, 20, 20));
    PackingInstance inst{s, 1 + static_cast<long>(rng() % 4), brute::random_rational(rng, 1, 8, 8)};
    Packing p = first_fit_decreasing(inst);
    CHECK(verify_packing(inst, p).ok());
  }
}
