#include <doctest.h>

#include <random>

#include "support/brute_force.hpp"
#include "unavail/exact_oracle.hpp"
#include "unavail/milp.hpp"

using namespace unavail;

namespace {

std::vector<Rational> R(std::initializer_list<Rational> v) { return v; }

struct Fixture {
  RoundedInstance ri;
  JobClassification cls;
  MILPModel model;
};

Fixture fixture(std::vector<Rational> p, long m, long k, Rational U, Rational eps, Rational T) {
  RoundedInstance ri = round_sizes(SchedulingInstance{std::move(p), m, k, U}, Eps(eps));
  JobClassification cls = classify_jobs(ri, T);
  auto configs = enumerate_configurations(cls, T, ri.eps, U);
  MILPModel model = build_milp(configs, cls, ri, T);
  return {ri, cls, model};
}

// Constraint families written out from the model fields.
bool feasible(const MILPModel& md, const MILPSolution& s) {
  const Rational eT = md.eps.value() * md.T;
  const std::size_t C = md.configs.size();
  if (s.x.size() != C) return false;
  long total = 0;
  for (long x : s.x) {
    if (x < 0) return false;
    total += x;
  }
  if (total != md.m) return false;
  for (std::size_t l = 0; l < md.large_sizes.size(); ++l) {
    long placed = 0;
    for (std::size_t c = 0; c < C; ++c) placed += md.configs[c].alpha[l] * s.x[c];
    if (placed != md.large_counts[l]) return false;
  }
  std::vector<Rational> early(C, Rational(0)), late(C, Rational(0)), count(C, Rational(0));
  for (std::size_t j = 0; j < md.small_jobs.size(); ++j) {
    Rational sum = 0;
    for (const auto& [c, v] : s.y[j]) {
      if (v < 0 || c >= C) return false;
      sum += v;
      early[c] += v * md.small_sizes[j];
      count[c] += v;
    }
    for (const auto& [c, v] : s.z[j]) {
      if (v < 0 || c >= C) return false;
      sum += v;
      late[c] += v * (md.small_sizes[j] + md.U / md.k);
    }
    if (sum != 1) return false;
  }
  for (std::size_t c = 0; c < C; ++c) {
    const auto& cf = md.configs[c];
    if (early[c] > eT * (cf.beta + 1) * s.x[c]) return false;
    if (late[c] > eT * (cf.gamma_prime * (cf.gamma + 1)) * s.x[c]) return false;
    if (cf.large_count() * s.x[c] + count[c] > cf.delta * md.k * s.x[c]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("two unit jobs on two machines") {
  Fixture pr = fixture(R({1, 1}), 2, 5, 10, 1, 1);
  MilpOutcome out = solve_milp(pr.model);
  REQUIRE(out.status == MilpStatus::kFeasible);
  CHECK(check_milp_solution(pr.model, out.solution).empty());
  CHECK(feasible(pr.model, out.solution));
}

TEST_CASE("two unit jobs on one machine with k = 1 cannot meet T = 4") {
  Fixture pr = fixture(R({1, 1}), 1, 1, 10, 1, 4);
  CHECK(solve_milp(pr.model).status == MilpStatus::kInfeasible);
}

TEST_CASE("empty instance") {
  Fixture pr = fixture(R({}), 3, 1, 1, 1, 1);
  MilpOutcome out = solve_milp(pr.model);
  REQUIRE(out.status == MilpStatus::kFeasible);
  CHECK(feasible(pr.model, out.solution));
}

TEST_CASE("model shapes") {
  Fixture no_small = fixture(R({4, 4}), 2, 1, 1, 1, 4);
  CHECK(no_small.model.small_jobs.empty());
  Fixture no_large = fixture(R({Rational(1, 8), Rational(1, 8)}), 1, 1, 1, Rational(1, 2), 4);
  CHECK(no_large.model.large_sizes.empty());
  for (std::size_t j = 0; j < no_large.model.small_jobs.size(); ++j) {
    CHECK(no_large.model.small_modified[j] > no_large.model.small_sizes[j]);
  }
}

TEST_CASE("a node budget of zero is reported as such") {
  Fixture pr = fixture(R({3, 2, 2, 1, 1}), 2, 2, 1, Rational(1, 2), 8);
  MilpOutcome out = solve_milp(pr.model, MilpOptions{0});
  CHECK(out.status == MilpStatus::kNodeLimit);
}

TEST_CASE("dominance keeps a representative for every configuration") {
  Fixture pr = fixture(R({3, 2, 2, 1, 1}), 2, 2, 1, Rational(1, 2), 8);
  const auto& cs = pr.model.configs;
  auto keep = undominated_configurations(cs);
  for (const auto& c : cs) {
    bool covered = false;
    for (std::size_t i : keep) {
      const auto& d = cs[i];
      if (d.alpha == c.alpha && d.beta >= c.beta && d.delta >= c.delta &&
          d.gamma_prime * (d.gamma + 1) >= c.gamma_prime * (c.gamma + 1)) {
        covered = true;
      }
    }
    CHECK(covered);
  }
}

TEST_CASE("soundness and completeness against the exact reformulated optimum") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = rng() % 7;
    const long m = 1 + static_cast<long>(rng() % 3), k = 1 + static_cast<long>(rng() % 2);
    const Rational e(1, 1 + static_cast<long>(rng() % 2));
    std::vector<Rational> p;
    for (std::size_t j = 0; j < n; ++j) p.push_back(brute::random_rational(rng, 1, 16, 4));
    const Rational U = brute::random_rational(rng, 0, 8, 4);
    RoundedInstance ri = round_sizes(SchedulingInstance{p, m, k, U}, Eps(e));
    auto grid = candidate_grid(ri);
    if (grid.empty()) continue;
    MakespanResult opt = exact_makespan(ri.rounded());
    REQUIRE(opt.status == OracleStatus::kOptimal);
    const Rational target = reformulated_makespan(ri, opt.schedule);
    for (const Rational& T : grid) {
      JobClassification cls;
      try {
        cls = classify_jobs(ri, T);
      } catch (const ProbeInfeasible&) {
        CHECK(T < target);
        continue;
      }
      MILPModel model = build_milp(enumerate_configurations(cls, T, ri.eps, U), cls, ri, T);
      MilpOutcome out = solve_milp(model);
      REQUIRE(out.status != MilpStatus::kNodeLimit);
      if (out.status == MilpStatus::kFeasible) {
        CHECK(feasible(model, out.solution));
        CHECK(check_milp_solution(model, out.solution).empty());
      }
      if (T >= target) {
        CHECK(out.status == MilpStatus::kFeasible);
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("the checker flags broken solutions") {
  Fixture pr = fixture(R({1, 1}), 2, 5, 10, 1, 1);
  MilpOutcome out = solve_milp(pr.model);
  REQUIRE(out.status == MilpStatus::kFeasible);
  MILPSolution bad = out.solution;
  bad.x[0] += 1;
  CHECK_FALSE(check_milp_solution(pr.model, bad).empty());
}
