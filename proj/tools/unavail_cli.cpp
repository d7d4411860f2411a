#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "unavail/bench.hpp"
#include "unavail/bpu.hpp"
#include "unavail/exact_oracle.hpp"
#include "unavail/io.hpp"
#include "unavail/schedule_builder.hpp"

using namespace unavail;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kLimit = 3;

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
  } else {
    write_file(output, text);
  }
}

template <class T>
T load_as(const std::string& path, const char* what) {
  Instance inst = parse_instance(path);
  if (!std::holds_alternative<T>(inst)) throw FormatError(std::string("field 'kind' must be ") + what);
  return std::get<T>(inst);
}

OracleLimits limits_from(long max_nodes, long time_ms) {
  OracleLimits l;
  if (max_nodes > 0) l.max_nodes = static_cast<std::uint64_t>(max_nodes);
  if (time_ms > 0) l.time_budget = std::chrono::milliseconds(time_ms);
  return l;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scheduling and bin packing with cardinality-triggered unavailability"};
  app.require_subcommand(1);

  std::string eps_text = "1/2", input, output, solution, bound_text, config;
  long max_nodes = 0, time_ms = 0;

  auto* solve_sched = app.add_subcommand("solve-sched", "approximate minimum makespan");
  auto* solve_pack = app.add_subcommand("solve-pack", "approximate minimum bin count");
  for (auto* sub : {solve_sched, solve_pack}) {
    sub->add_option("--eps", eps_text, "accuracy 1/q")->required();
    sub->add_option("--input", input)->required();
    sub->add_option("--output", output);
  }
  auto* oracle_sched = app.add_subcommand("oracle-sched", "exact minimum makespan (small n)");
  auto* oracle_pack = app.add_subcommand("oracle-pack", "exact minimum bin count (small n)");
  for (auto* sub : {oracle_sched, oracle_pack}) {
    sub->add_option("--input", input)->required();
    sub->add_option("--output", output);
    sub->add_option("--max-nodes", max_nodes);
    sub->add_option("--time-ms", time_ms);
  }
  auto* verify = app.add_subcommand("verify", "check a solution file against an instance");
  verify->add_option("--input", input)->required();
  verify->add_option("--solution", solution)->required();
  verify->add_option("--bound", bound_text, "makespan bound for schedules");

  GeneratorSpec spec;
  std::string kind = "packing", dist = "uniform", U_text = "1";
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", kind)->check(CLI::IsMember({"scheduling", "packing"}));
  gen->add_option("--dist", dist)->check(CLI::IsMember({"uniform", "clustered", "adversarial"}));
  gen->add_option("--n", spec.n);
  gen->add_option("--m", spec.m);
  gen->add_option("--k", spec.k);
  gen->add_option("--U", U_text);
  gen->add_option("--seed", spec.seed);
  gen->add_option("--grid", spec.grid);
  gen->add_option("--output", output);

  auto* bench = app.add_subcommand("bench", "run a benchmark and write CSV");
  bench->add_option("--config", config)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_sched->parsed()) {
      auto inst = load_as<SchedulingInstance>(input, "scheduling");
      SupResult res = solve_scheduling(inst, Eps(parse_rational(eps_text)));
      emit(emit_solution(inst, res.schedule), output);
      return res.status == SupStatus::kNodeLimit ? kLimit : kOk;
    }
    if (solve_pack->parsed()) {
      auto inst = load_as<PackingInstance>(input, "packing");
      PackingResult res = solve_packing(inst, Eps(parse_rational(eps_text)));
      emit(emit_solution(inst, res.packing), output);
      return kOk;
    }
    if (oracle_sched->parsed()) {
      auto inst = load_as<SchedulingInstance>(input, "scheduling");
      MakespanResult res = exact_makespan(inst, limits_from(max_nodes, time_ms));
      if (res.status == OracleStatus::kExceeded) {
        std::cerr << "oracle limit exceeded\n";
        return kLimit;
      }
      emit(emit_solution(inst, res.schedule), output);
      return kOk;
    }
    if (oracle_pack->parsed()) {
      auto inst = load_as<PackingInstance>(input, "packing");
      BincountResult res = exact_bincount(inst, limits_from(max_nodes, time_ms));
      if (res.status == OracleStatus::kExceeded) {
        std::cerr << "oracle limit exceeded\n";
        return kLimit;
      }
      emit(emit_solution(inst, res.packing), output);
      return kOk;
    }
    if (verify->parsed()) {
      Instance inst = parse_instance(input);
      Solution sol = parse_solution(solution);
      Verification v;
      std::string value;
      if (const auto* s = std::get_if<SchedulingInstance>(&inst)) {
        const auto* sched = std::get_if<Schedule>(&sol);
        if (!sched) throw FormatError("field 'kind' must be schedule for a scheduling instance");
        Verification shape = verify_schedule(*s, *sched, 0);
        std::erase_if(shape.violations, [](const Violation& x) { return x.kind == Violation::Kind::kOverload; });
        if (shape.ok()) {
          const Rational ms = makespan(*s, *sched);
          value = to_string(ms);
          v = verify_schedule(*s, *sched, bound_text.empty() ? ms : parse_rational(bound_text));
        } else {
          v = shape;
        }
      } else {
        const auto* pack = std::get_if<Packing>(&sol);
        if (!pack) throw FormatError("field 'kind' must be packing for a packing instance");
        v = verify_packing(std::get<PackingInstance>(inst), *pack);
        value = std::to_string(pack->bins.size());
      }
      if (v.ok()) {
        std::cout << "ok value " << value << '\n';
        return kOk;
      }
      for (const auto& x : v.violations) std::cout << "violation: " << x.message << '\n';
      return kInvalid;
    }
    if (gen->parsed()) {
      spec.kind = parse_problem_kind(kind);
      spec.distribution = parse_distribution(dist);
      spec.U = parse_rational(U_text);
      emit(emit_instance(generate_instance(spec)), output);
      return kOk;
    }
    if (bench->parsed()) {
      std::filesystem::path path(config);
      BenchConfig cfg = parse_bench_config(read_file(path), path.parent_path());
      BenchReport report = run_benchmark(cfg);
      if (cfg.output) {
        std::ofstream out(*cfg.output);
        if (!out) throw std::runtime_error("cannot write " + cfg.output->string());
        write_csv(report, out);
      } else {
        write_csv(report, std::cout);
      }
      return report.any_violation() ? 1 : kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
