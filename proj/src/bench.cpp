#include "unavail/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include <json.hpp>

#include "unavail/bpu.hpp"
#include "unavail/schedule_builder.hpp"

namespace unavail {

namespace {

using nlohmann::json;

Rational json_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rationals in the bench config must be strings or integers");
}

}  // namespace

BenchConfig parse_bench_config(const std::string& json_text, const std::filesystem::path& base_dir) {
  json j = json::parse(json_text);
  BenchConfig cfg;
  for (const auto& r : j.value("runs", json::array())) {
    BenchRun run;
    run.spec.kind = parse_problem_kind(r.value("kind", std::string("packing")));
    run.spec.distribution = parse_distribution(r.value("distribution", std::string("uniform")));
    run.spec.n = r.value("n", std::size_t{0});
    run.spec.m = r.value("m", 1L);
    run.spec.k = r.value("k", 1L);
    run.spec.grid = r.value("grid", 20L);
    if (r.contains("U")) run.spec.U = json_rational(r["U"]);
    if (r.contains("eps")) run.eps = json_rational(r["eps"]);
    Eps check(run.eps);
    if (r.contains("seeds")) {
      const auto& s = r["seeds"];
      if (!s.is_array() || s.size() != 2) throw std::invalid_argument("'seeds' must be [first, last]");
      run.seed_first = s[0].get<std::uint64_t>();
      run.seed_last = s[1].get<std::uint64_t>();
      if (run.seed_last < run.seed_first) throw std::invalid_argument("'seeds' range is reversed");
    }
    cfg.runs.push_back(std::move(run));
  }
  for (const auto& f : j.value("instances", json::array())) {
    BenchFile file;
    file.path = f.at("path").get<std::string>();
    if (file.path.is_relative()) file.path = base_dir / file.path;
    if (f.contains("eps")) file.eps = json_rational(f["eps"]);
    Eps check(file.eps);
    cfg.files.push_back(std::move(file));
  }
  if (j.contains("oracle")) {
    const auto& o = j["oracle"];
    cfg.oracle.max_jobs = o.value("max_jobs", cfg.oracle.max_jobs);
    cfg.oracle.max_nodes = o.value("max_nodes", cfg.oracle.max_nodes);
    cfg.oracle.time_budget = std::chrono::milliseconds(o.value("time_budget_ms", cfg.oracle.time_budget.count()));
  }
  if (j.contains("output")) {
    std::filesystem::path out = j["output"].get<std::string>();
    cfg.output = out.is_relative() ? base_dir / out : out;
  }
  return cfg;
}

Rational sched_ratio_bound(const Eps& eps) {
  const Rational a = eps.one_plus();
  return a * a * a * (1 + 3 * eps.value());
}

Rational packing_bound(BpuCase which, const Eps& eps, long opt) {
  const Rational e = eps.value();
  const long inv = eps.inverse();
  const long inv3 = inv * inv * inv;
  if (which == BpuCase::kCaseI) return (1 + 2 * e) * opt + inv3;
  return (1 + 10 * e) * ((1 + 3 * e) * opt + 5 + 3 * inv + inv3) + 2 + e * opt + 1;
}

bool BenchReport::any_violation() const {
  for (const auto& r : rows) {
    if (r.violated) return true;
  }
  return false;
}

std::size_t bench_workers() {
  if (const char* env = std::getenv("UNAVAIL_BENCH_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Job {
  std::optional<std::uint64_t> seed;
  Instance inst;
  Rational eps;
};

BenchRow run_one(const Job& job, const OracleLimits& limits) {
  BenchRow row;
  row.seed = job.seed;
  row.eps = job.eps;
  const Eps eps(job.eps);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (const auto* s = std::get_if<SchedulingInstance>(&job.inst)) {
      row.kind = "scheduling";
      row.n = s->n();
      row.m = s->m;
      row.k = s->k;
      row.U = s->U;
      SupResult res = solve_scheduling(*s, eps);
      row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      row.value = res.makespan;
      if (!verify_schedule(*s, res.schedule, res.makespan).ok()) {
        row.violated = true;
        row.error = "infeasible schedule";
      }
      MakespanResult opt = exact_makespan(*s, limits);
      if (opt.status == OracleStatus::kOptimal) {
        row.oracle = opt.makespan;
        if (*row.value > sched_ratio_bound(eps) * opt.makespan) row.violated = true;
      }
    } else {
      const auto& p = std::get<PackingInstance>(job.inst);
      row.kind = "packing";
      row.n = p.n();
      row.k = p.k;
      row.U = p.U;
      PackingResult res = solve_packing(p, eps);
      row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      row.value = Rational(static_cast<long>(res.packing.bins.size()));
      if (!verify_packing(p, res.packing).ok()) {
        row.violated = true;
        row.error = "infeasible packing";
      }
      BincountResult opt = exact_bincount(p, limits);
      if (opt.status == OracleStatus::kOptimal) {
        row.oracle = Rational(opt.bins);
        if (*row.value > packing_bound(res.which, eps, opt.bins)) row.violated = true;
      }
    }
  } catch (const std::exception& e) {
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    row.value.reset();
    row.violated = true;
    row.error = e.what();
  }
  return row;
}

}  // namespace

BenchReport run_benchmark(const BenchConfig& config, std::size_t workers) {
  std::vector<Job> jobs;
  for (const auto& run : config.runs) {
    for (std::uint64_t seed = run.seed_first;; ++seed) {
      GeneratorSpec spec = run.spec;
      spec.seed = seed;
      jobs.push_back({seed, generate_instance(spec), run.eps});
      if (seed == run.seed_last) break;
    }
  }
  for (const auto& f : config.files) jobs.push_back({std::nullopt, parse_instance(f.path), f.eps});

  BenchReport report;
  report.rows.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) report.rows[i] = run_one(jobs[i], config.oracle);
  };
  std::vector<std::thread> pool;
  const std::size_t count = std::min(std::max<std::size_t>(workers, 1), std::max<std::size_t>(jobs.size(), 1));
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

void write_csv(const BenchReport& report, std::ostream& out) {
  out << "seed,kind,n,m,k,U,eps,value,oracle,ratio,wall_ms\n";
  for (const auto& r : report.rows) {
    if (r.seed) out << *r.seed;
    out << ',' << r.kind << ',' << r.n << ',';
    if (r.m) out << *r.m;
    out << ',' << r.k << ',' << to_string(r.U) << ',' << to_string(r.eps) << ',';
    out << (r.value ? to_string(*r.value) : std::string("error")) << ',';
    out << (r.oracle ? to_string(*r.oracle) : std::string("Exceeded")) << ',';
    if (r.oracle && r.value) {
      if (*r.oracle == 0) {
        out << (*r.value == 0 ? "1.000000" : "inf");
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", to_double(*r.value / *r.oracle));
        out << buf;
      }
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
    out << ',' << ms << '\n';
  }
}

}  // namespace unavail
