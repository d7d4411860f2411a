#include "unavail/bpu.hpp"

namespace unavail {

PackingResult solve_packing(const PackingInstance& inst, const Eps& eps) {
  inst.validate();
  PackingResult out;
  out.which = choose_case(inst.k, inst.U, eps);
  if (out.which == BpuCase::kCaseI) {
    Case1Result r = solve_case1(inst, eps);
    out.packing = std::move(r.packing);
    out.lp_objective = r.lp_objective;
    out.iterations = r.iterations;
  } else {
    Case2Result r = solve_case2(inst, eps);
    out.packing = std::move(r.packing);
    out.lp_objective = r.lp_objective;
    out.iterations = r.iterations;
  }
  return out;
}

}  // namespace unavail
