#pragma once

#include "unavail/bpu_case1.hpp"
#include "unavail/bpu_case2.hpp"

namespace unavail {

struct PackingResult {
  BpuCase which = BpuCase::kCaseI;
  Packing packing;
  Rational lp_objective = 0;
  std::size_t iterations = 0;
};

// Dispatches on kmax versus 1/eps^2.
PackingResult solve_packing(const PackingInstance& inst, const Eps& eps);

}  // namespace unavail
