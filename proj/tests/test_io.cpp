#include <doctest.h>

#include <filesystem>

#include "unavail/bpu.hpp"
#include "unavail/generate.hpp"
#include "unavail/io.hpp"
#include "unavail/schedule_builder.hpp"

using namespace unavail;

TEST_CASE("packing instance parses exactly") {
  Instance inst = parse_instance_text("kind packing\nk 2\nU 1/2\nsizes 1/3 0.25 1\n");
  const auto& p = std::get<PackingInstance>(inst);
  CHECK(p.k == 2);
  CHECK(p.U == Rational(1, 2));
  REQUIRE(p.item_sizes.size() == 3);
  CHECK(p.item_sizes[0] == Rational(1, 3));
  CHECK(p.item_sizes[1] == Rational(1, 4));
}

TEST_CASE("errors name the field") {
  auto message = [](const std::string& text) {
    try {
      parse_instance_text(text);
    } catch (const FormatError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("kind packing\nk 2\nU 3/2\nsizes 1/2\n").find("'U'") != std::string::npos);
  CHECK(message("kind packing\nk x\nU 1/2\nsizes 1/2\n").find("'k'") != std::string::npos);
  CHECK(message("kind packing\nU 1/2\nsizes 1/2\n").find("'k'") != std::string::npos);
  CHECK(message("kind packing\nk 1\nU 1/2\nsizes 1/2 abc\n").find("'sizes'") != std::string::npos);
  CHECK(message("kind packing\nk 1\nU 1/2\nsizes 3/2\n").find("'sizes'") != std::string::npos);
  CHECK(message("kind scheduling\nk 1\nU 1/2\nsizes 1\n").find("'m'") != std::string::npos);
  CHECK(message("kind boxes\n").find("'kind'") != std::string::npos);
  CHECK(message("kind packing\nk 1\nU 0\nsizes\n").find("'U'") != std::string::npos);
}

TEST_CASE("comments and blank lines") {
  Instance inst = parse_instance_text("# header\n\nkind scheduling # trailing\nm 3\nk 1\nU 0\nsizes\n");
  const auto& s = std::get<SchedulingInstance>(inst);
  CHECK(s.m == 3);
  CHECK(s.job_sizes.empty());
}

TEST_CASE("emit then parse is the identity") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (auto kind : {ProblemKind::kScheduling, ProblemKind::kPacking}) {
      for (auto dist : {Distribution::kUniformGrid, Distribution::kClustered, Distribution::kAdversarial}) {
        GeneratorSpec spec{kind, seed % 12, 2, 1 + static_cast<long>(seed % 3), Rational(1, 3), dist, seed, 20};
        Instance inst = generate_instance(spec);
        const std::string text = emit_instance(inst);
        Instance back = parse_instance_text(text);
        CHECK(emit_instance(back) == text);
        if (kind == ProblemKind::kPacking) {
          CHECK(std::get<PackingInstance>(back).item_sizes == std::get<PackingInstance>(inst).item_sizes);
        } else {
          CHECK(std::get<SchedulingInstance>(back).job_sizes == std::get<SchedulingInstance>(inst).job_sizes);
        }
      }
    }
  }
}

TEST_CASE("generator is deterministic and handles n = 0") {
  GeneratorSpec spec{ProblemKind::kPacking, 15, 1, 2, Rational(1, 4), Distribution::kClustered, 99, 20};
  CHECK(emit_instance(generate_instance(spec)) == emit_instance(generate_instance(spec)));
  spec.seed = 100;
  CHECK(emit_instance(generate_instance(spec)) != emit_instance(generate_instance(GeneratorSpec{
                                                      ProblemKind::kPacking, 15, 1, 2, Rational(1, 4),
                                                      Distribution::kClustered, 99, 20})));
  spec.n = 0;
  Instance empty = generate_instance(spec);
  CHECK(std::get<PackingInstance>(empty).item_sizes.empty());
  CHECK_NOTHROW(parse_instance_text(emit_instance(empty)));
}

TEST_CASE("adversarial base size fills a bin with t k + 1 items") {
  for (long k : {1L, 2L, 3L}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      GeneratorSpec spec{ProblemKind::kPacking, 40, 1, k, Rational(1, 5), Distribution::kAdversarial, seed, 20};
      const auto p = std::get<PackingInstance>(generate_instance(spec));
      Rational smax = 0;
      for (const auto& s : p.item_sizes) smax = std::max(smax, s);
      // The base size fills a bin exactly with t k + 1 copies for some t.
      bool found = false;
      for (long t = 1; t <= 2; ++t) {
        const std::vector<Rational> bin(static_cast<std::size_t>(t * k + 1), smax);
        const Rational load = bin_load(bin, k, p.U);
        if (load == 1) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("solutions round trip and re-verify") {
  GeneratorSpec spec{ProblemKind::kPacking, 12, 1, 2, Rational(1, 3), Distribution::kUniformGrid, 5, 20};
  Instance inst = generate_instance(spec);
  const auto& p = std::get<PackingInstance>(inst);
  PackingResult r = solve_packing(p, Eps(Rational(1, 2)));
  Solution back = parse_solution_text(emit_solution(inst, r.packing));
  CHECK(verify_packing(p, std::get<Packing>(back)).ok());
  CHECK(std::get<Packing>(back).bins == r.packing.bins);

  GeneratorSpec sspec{ProblemKind::kScheduling, 7, 2, 2, Rational(1, 2), Distribution::kUniformGrid, 5, 20};
  Instance sinst = generate_instance(sspec);
  const auto& s = std::get<SchedulingInstance>(sinst);
  SupResult sr = solve_scheduling(s, Eps(Rational(1, 2)));
  Solution sback = parse_solution_text(emit_solution(sinst, sr.schedule));
  CHECK(verify_schedule(s, std::get<Schedule>(sback), sr.makespan).ok());
  CHECK_THROWS_AS(parse_solution_text("kind packing\nbin 1 x\n"), FormatError);
  CHECK_THROWS_AS(parse_solution_text("kind packing\nmachine 1\n"), FormatError);
}

TEST_CASE("files") {
  auto dir = std::filesystem::temp_directory_path() / "unavail_io_test";
  std::filesystem::create_directories(dir);
  write_file(dir / "a.txt", "kind packing\nk 1\nU 1\nsizes 1/2\n");
  CHECK(std::get<PackingInstance>(parse_instance(dir / "a.txt")).item_sizes.size() == 1);
  CHECK_THROWS(parse_instance(dir / "missing.txt"));
  std::filesystem::remove_all(dir);
}
