#pragma once

#include <cstdint>
#include <string>

#include "unavail/io.hpp"

namespace unavail {

enum class ProblemKind { kScheduling, kPacking };
enum class Distribution { kUniformGrid, kClustered, kAdversarial };

ProblemKind parse_problem_kind(const std::string& name);
Distribution parse_distribution(const std::string& name);
std::string to_string(ProblemKind kind);
std::string to_string(Distribution dist);

struct GeneratorSpec {
  ProblemKind kind = ProblemKind::kPacking;
  std::size_t n = 0;
  long m = 1;  // scheduling only
  long k = 1;
  Rational U = 1;
  Distribution distribution = Distribution::kUniformGrid;
  std::uint64_t seed = 0;
  long grid = 20;  // sizes are multiples of 1/grid before perturbation
};

// uniform: a/grid with a uniform in 1..grid.
// clustered: up to three centres on the grid, sizes within 1/(4 grid) of one.
// adversarial: sizes just below (1 - tU)/(tk + 1), so a bin holds exactly
// tk + 1 items, one past a multiple of k.
// Deterministic in its arguments; n = 0 yields an empty instance.
Instance generate_instance(const GeneratorSpec& spec);

}  // namespace unavail
