#include <doctest.h>

#include <sstream>

#include "unavail/bench.hpp"

using namespace unavail;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("empty configuration yields a header-only CSV") {
  BenchReport r = run_benchmark(parse_bench_config("{}"));
  std::ostringstream out;
  write_csv(r, out);
  CHECK(out.str() == "seed,kind,n,m,k,U,eps,value,oracle,ratio,wall_ms\n");
  CHECK_FALSE(r.any_violation());
}

TEST_CASE("generated runs stay within their bounds") {
  BenchConfig cfg = parse_bench_config(R"({
    "runs": [
      {"kind": "scheduling", "distribution": "uniform", "n": 6, "m": 2, "k": 2, "U": "1/2", "eps": "1/2", "seeds": [0, 4]},
      {"kind": "packing", "distribution": "clustered", "n": 7, "k": 1, "U": "1", "eps": "1/2", "seeds": [0, 4]},
      {"kind": "packing", "distribution": "adversarial", "n": 8, "k": 3, "U": "1/4", "eps": "1/2", "seeds": [0, 4]}
    ]})");
  BenchReport r = run_benchmark(cfg, 2);
  REQUIRE(r.rows.size() == 15);
  CHECK_FALSE(r.any_violation());
  std::ostringstream out;
  write_csv(r, out);
  auto ls = lines(out.str());
  REQUIRE(ls.size() == 16);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    auto c = cells(ls[i]);
    REQUIRE(c.size() == 11);
    CHECK(c[8] != "Exceeded");
    CHECK_FALSE(c[9].empty());
  }
  // Rows keep the configuration order whatever the worker count.
  BenchReport serial = run_benchmark(cfg, 1);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    CHECK(serial.rows[i].seed == r.rows[i].seed);
    CHECK(serial.rows[i].value == r.rows[i].value);
  }
}

TEST_CASE("oracle limit keeps the row with a blank ratio") {
  BenchConfig cfg = parse_bench_config(R"({
    "runs": [{"kind": "packing", "n": 14, "k": 2, "U": "1/2", "eps": "1/2", "seeds": [3, 3]}],
    "oracle": {"max_jobs": 12}})");
  BenchReport r = run_benchmark(cfg, 1);
  REQUIRE(r.rows.size() == 1);
  CHECK_FALSE(r.rows[0].oracle);
  std::ostringstream out;
  write_csv(r, out);
  auto c = cells(lines(out.str())[1]);
  CHECK(c[8] == "Exceeded");
  CHECK(c[9].empty());
  CHECK_FALSE(r.any_violation());
}

TEST_CASE("bounds") {
  const Eps half(Rational(1, 2));
  CHECK(sched_ratio_bound(half) == Rational(27, 8) * Rational(5, 2));
  CHECK(packing_bound(BpuCase::kCaseI, half, 4) == 2 * 4 + 8);
  CHECK(packing_bound(BpuCase::kCaseII, half, 2) == 6 * (Rational(5, 2) * 2 + 5 + 6 + 8) + 2 + 1 + 1);
}

TEST_CASE("bad configurations are rejected") {
  CHECK_THROWS(parse_bench_config("{\"runs\": [{\"eps\": \"2/3\"}]}"));
  CHECK_THROWS(parse_bench_config("{\"runs\": [{\"kind\": \"boxes\"}]}"));
  CHECK_THROWS(parse_bench_config("{\"runs\": [{\"seeds\": [3, 1]}]}"));
  CHECK_THROWS(parse_bench_config("not json"));
}
