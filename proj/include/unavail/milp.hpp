#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unavail/lp.hpp"
#include "unavail/sup_eptas.hpp"

namespace unavail {

struct MILPModel {
  std::vector<Configuration> configs;
  long m = 1;
  long k = 1;
  Rational U = 0;
  Rational T = 0;
  Eps eps{Rational(1)};
  std::vector<Rational> large_sizes;
  std::vector<long> large_counts;
  IndexSet small_jobs;
  std::vector<Rational> small_sizes;     // p_j
  std::vector<Rational> small_modified;  // p_j + U/k
};

MILPModel build_milp(std::vector<Configuration> configs, const JobClassification& cls,
                     const RoundedInstance& inst, const Rational& T);

struct MILPSolution {
  std::vector<long> x;  // per configuration
  // Per small job (position in MILPModel::small_jobs): (configuration, value).
  std::vector<SparseVector> y;
  std::vector<SparseVector> z;
};

// Re-evaluates every constraint family exactly; empty when feasible.
std::vector<std::string> check_milp_solution(const MILPModel& model, const MILPSolution& sol);

enum class MilpStatus { kFeasible, kInfeasible, kNodeLimit };

struct MilpOutcome {
  MilpStatus status = MilpStatus::kInfeasible;
  MILPSolution solution;
  std::uint64_t nodes = 0;
};

struct MilpOptions {
  std::uint64_t max_nodes = 200'000;
};

// Depth-first branch and bound on x over an aggregated LP relaxation; the
// small-job fractions of an integral x are decided by an exact LP.
MilpOutcome solve_milp(const MILPModel& model, const MilpOptions& options = {});

// Configurations not dominated by another with the same alpha and at least
// as large beta, late capacity gamma'*(gamma+1) and delta. Indices into `configs`.
std::vector<std::size_t> undominated_configurations(const std::vector<Configuration>& configs);

}  // namespace unavail
