#include <doctest.h>

#include "unavail/core_model.hpp"

using namespace unavail;

namespace {
std::vector<Rational> R(std::initializer_list<Rational> v) { return v; }
}  // namespace

TEST_CASE("schedule load counts one idle period per k jobs after the first") {
  CHECK(schedule_load(R({3, 2}), 2, 5) == 5);
  CHECK(schedule_load(R({3, 2, 4}), 2, 5) == 14);
  CHECK(schedule_load(R({1, 1, 1, 1, 1}), 2, 1) == 7);
  CHECK_THROWS_AS(schedule_load(R({}), 2, 1), std::invalid_argument);
}

TEST_CASE("bin load") {
  CHECK(bin_load(R({Rational(3, 10), Rational(3, 10)}), 2, Rational(1, 5)) == Rational(3, 5));
  CHECK(bin_load(R({Rational(3, 10), Rational(3, 10), Rational(3, 10)}), 2, Rational(1, 5)) == Rational(11, 10));
  CHECK(bin_load(R({0}), 1, 1) == 0);
}

TEST_CASE("kmax") {
  CHECK(kmax(3, Rational(2, 5)) == 10);
  CHECK(kmax(1, 1) == 2);
  CHECK(kmax(5, Rational(1, 100)) == 505);
}

TEST_CASE("kmax is the largest feasible cardinality") {
  for (long k = 1; k <= 5; ++k) {
    for (long q = 1; q <= 12; ++q) {
      const Rational U(1, q);
      const long km = kmax(k, U);
      std::vector<Rational> zeros(static_cast<std::size_t>(km), Rational(0));
      CHECK(bin_load(zeros, k, U) <= 1);
      zeros.push_back(0);
      CHECK(bin_load(zeros, k, U) > 1);
    }
  }
}

TEST_CASE("verify_schedule") {
  SchedulingInstance inst{R({1, 1}), 2, 1, 10};
  CHECK(verify_schedule(inst, Schedule{{{0}, {1}}}, 1).ok());

  Verification v = verify_schedule(inst, Schedule{{{0, 1}, {}}}, 1);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].kind == Violation::Kind::kOverload);
  CHECK(v.violations[0].excess == 11);

  Verification missing = verify_schedule(inst, Schedule{{{0}, {}}}, 100);
  REQUIRE_FALSE(missing.ok());
  CHECK(missing.violations[0].kind == Violation::Kind::kNotPartition);

  CHECK(verify_schedule(inst, Schedule{{{0}, {1}, {}}}, 100).violations[0].kind == Violation::Kind::kMachineCount);
  CHECK(verify_schedule(inst, Schedule{{{0, 0}, {1}}}, 100).violations[0].kind == Violation::Kind::kNotPartition);
}

TEST_CASE("verify_packing") {
  PackingInstance two{R({Rational(1, 2), Rational(1, 2)}), 2, Rational(1, 4)};
  CHECK(verify_packing(two, Packing{{{0, 1}}}).ok());
  two.k = 1;
  Verification v = verify_packing(two, Packing{{{0, 1}}});
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].excess == Rational(1, 4));
  CHECK(verify_packing(two, Packing{{{0}, {1}, {}}}).violations[0].kind == Violation::Kind::kEmptyBin);
  CHECK_FALSE(verify_packing(two, Packing{{{0}, {5}}}).ok());
}

TEST_CASE("canonical order is non-increasing with index tiebreak") {
  std::vector<Rational> sizes = R({1, 3, 3, 2});
  IndexSet idx{0, 2, 3, 1};
  canonical_order(sizes, idx);
  CHECK(idx == IndexSet{1, 2, 3, 0});
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS((PackingInstance{R({Rational(1, 2)}), 1, Rational(3, 2)}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((PackingInstance{R({Rational(1, 2)}), 1, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((PackingInstance{R({2}), 1, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SchedulingInstance{R({1}), 0, 1, 1}.validate()), std::invalid_argument);
  CHECK_NOTHROW((SchedulingInstance{R({}), 1, 1, 0}.validate()));
}
