#pragma once

#include <stdexcept>
#include <vector>

#include "unavail/milp.hpp"

namespace unavail {

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FractionalAssignment {
  std::vector<Rational> sizes;            // per job
  std::vector<SparseVector> u;            // per job: (machine, fraction)
  std::vector<Rational> capacity;         // t_i per machine
  std::vector<long> cardinality;          // c_i per machine
};

// Integral assignment (machine per job) with load <= t_i + largest size and
// at most c_i jobs on machine i. Jobs are sorted by non-increasing size and
// poured into unit slots per machine; a bipartite matching of jobs to slots
// gives the integral choice. Throws InvalidInput unless the fractions sum to
// one per job and respect every t_i and c_i.
std::vector<std::size_t> best_fit_round(const FractionalAssignment& fa);

struct BuildReport {
  Schedule schedule;
  std::vector<std::size_t> machine_config;  // configuration index per machine
  // Per machine: early and late small-job mass before rounding.
  std::vector<Rational> early_mass;
  std::vector<Rational> late_mass;
};

// Machines take configurations in index order; large jobs fill the alpha
// slots; small jobs are split by y/x and z/x and rounded by best_fit_round.
// Throws std::logic_error if the result exceeds (1+3eps)T on the rounded
// sizes.
BuildReport milp_to_schedule(const MILPSolution& sol, const MILPModel& model, const JobClassification& cls,
                             const RoundedInstance& inst);

// Upper bound on idle periods on a machine from its configuration and its
// late mass: delta-1 with no late mass, otherwise delta + floor((L-1)/k)
// with L = ceil(late mass).
long idle_period_bound(const Configuration& c, const Rational& late_mass, long k);

struct SupOptions {
  MilpOptions milp;
};

enum class SupStatus { kSolved, kNodeLimit };

struct SupResult {
  SupStatus status = SupStatus::kSolved;
  Schedule schedule;
  Rational T = 0;         // accepted search value
  Rational makespan = 0;  // on the original sizes
  std::size_t probes = 0;
};

// Full scheme: rounding, search over the candidate grid, MILP per probe and
// schedule construction. Throws std::logic_error if even the largest
// candidate is rejected.
SupResult solve_scheduling(const SchedulingInstance& inst, const Eps& eps, const SupOptions& options = {});

}  // namespace unavail
