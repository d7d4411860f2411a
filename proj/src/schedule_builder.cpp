#include "unavail/schedule_builder.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace unavail {

namespace {

void check_fractional(const FractionalAssignment& fa) {
  const std::size_t machines = fa.capacity.size();
  if (fa.cardinality.size() != machines) throw InvalidInput("capacity and cardinality lengths differ");
  if (fa.u.size() != fa.sizes.size()) throw InvalidInput("one fraction list per job is required");
  std::vector<Rational> load(machines), count(machines);
  for (std::size_t j = 0; j < fa.sizes.size(); ++j) {
    if (fa.sizes[j] < 0) throw InvalidInput("negative job size");
    Rational total = 0;
    for (const auto& [i, f] : fa.u[j]) {
      if (i >= machines) throw InvalidInput("fraction on unknown machine");
      if (f < 0 || f > 1) throw InvalidInput("fraction outside [0,1]");
      total += f;
      load[i] += f * fa.sizes[j];
      count[i] += f;
    }
    if (total != 1) throw InvalidInput("fractions of job " + std::to_string(j) + " sum to " + to_string(total));
  }
  for (std::size_t i = 0; i < machines; ++i) {
    if (load[i] > fa.capacity[i]) throw InvalidInput("machine " + std::to_string(i) + " exceeds t_i");
    if (count[i] > fa.cardinality[i]) throw InvalidInput("machine " + std::to_string(i) + " exceeds c_i");
  }
}

}  // namespace

std::vector<std::size_t> best_fit_round(const FractionalAssignment& fa) {
  check_fractional(fa);
  const std::size_t n = fa.sizes.size();
  const std::size_t machines = fa.capacity.size();

  std::vector<std::vector<std::pair<std::size_t, Rational>>> on_machine(machines);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [i, f] : fa.u[j]) {
      if (f > 0) on_machine[i].emplace_back(j, f);
    }
  }

  // Slots are numbered globally; slot_machine maps back.
  std::vector<std::size_t> slot_machine;
  std::vector<std::vector<std::size_t>> edges(n);
  for (std::size_t i = 0; i < machines; ++i) {
    auto& list = on_machine[i];
    std::sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
      if (fa.sizes[a.first] != fa.sizes[b.first]) return fa.sizes[a.first] > fa.sizes[b.first];
      return a.first < b.first;
    });
    Rational room = 0;
    for (const auto& [j, f] : list) {
      Rational left = f;
      while (left > 0) {
        if (room == 0) {
          slot_machine.push_back(i);
          room = 1;
        }
        Rational put = std::min(left, room);
        left -= put;
        room -= put;
        if (edges[j].empty() || edges[j].back() != slot_machine.size() - 1) {
          edges[j].push_back(slot_machine.size() - 1);
        }
      }
    }
  }

  // Kuhn's augmenting paths; a perfect matching exists because the slot
  // masses form a fractional one.
  std::vector<std::size_t> slot_owner(slot_machine.size(), n);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t j) {
    for (std::size_t s : edges[j]) {
      if (visited[s]) continue;
      visited[s] = 1;
      if (slot_owner[s] == n || augment(slot_owner[s])) {
        slot_owner[s] = j;
        return true;
      }
    }
    return false;
  };
  for (std::size_t j = 0; j < n; ++j) {
    visited.assign(slot_machine.size(), 0);
    if (!augment(j)) throw std::logic_error("no slot matching for job " + std::to_string(j));
  }

  std::vector<std::size_t> assign(n, machines);
  for (std::size_t s = 0; s < slot_machine.size(); ++s) {
    if (slot_owner[s] < n) assign[slot_owner[s]] = slot_machine[s];
  }

  Rational pi_max = 0;
  for (const auto& p : fa.sizes) pi_max = std::max(pi_max, p);
  std::vector<Rational> load(machines);
  std::vector<long> count(machines, 0);
  for (std::size_t j = 0; j < n; ++j) {
    load[assign[j]] += fa.sizes[j];
    ++count[assign[j]];
  }
  for (std::size_t i = 0; i < machines; ++i) {
    if (load[i] > fa.capacity[i] + pi_max || count[i] > fa.cardinality[i]) {
      throw std::logic_error("rounded assignment breaks the load or cardinality bound");
    }
  }
  return assign;
}

long idle_period_bound(const Configuration& c, const Rational& late_mass, long k) {
  if (late_mass == 0) return c.delta - 1;
  const long L = to_int64(ceil(late_mass));
  return c.delta + (L - 1) / k;
}

BuildReport milp_to_schedule(const MILPSolution& sol, const MILPModel& model, const JobClassification& cls,
                             const RoundedInstance& inst) {
  BuildReport rep;
  for (std::size_t c = 0; c < sol.x.size(); ++c) {
    for (long t = 0; t < sol.x[c]; ++t) rep.machine_config.push_back(c);
  }
  const std::size_t machines = rep.machine_config.size();
  if (machines != static_cast<std::size_t>(model.m)) throw std::logic_error("configuration counters do not sum to m");
  rep.schedule.machine_sets.assign(machines, {});

  std::vector<std::deque<Index>> by_size(cls.large_sizes.size());
  for (Index j : cls.large) {
    auto it = std::find(cls.large_sizes.begin(), cls.large_sizes.end(), inst.rounded_sizes[j]);
    by_size[static_cast<std::size_t>(it - cls.large_sizes.begin())].push_back(j);
  }
  for (std::size_t i = 0; i < machines; ++i) {
    const auto& cfg = model.configs[rep.machine_config[i]];
    for (std::size_t l = 0; l < by_size.size(); ++l) {
      for (long a = 0; a < cfg.alpha[l]; ++a) {
        if (by_size[l].empty()) throw std::logic_error("more large places than large jobs");
        rep.schedule.machine_sets[i].push_back(by_size[l].front());
        by_size[l].pop_front();
      }
    }
  }
  for (const auto& q : by_size) {
    if (!q.empty()) throw std::logic_error("large jobs left without a place");
  }

  std::vector<std::vector<std::size_t>> machines_of(sol.x.size());
  for (std::size_t i = 0; i < machines; ++i) machines_of[rep.machine_config[i]].push_back(i);

  const std::size_t ns = model.small_jobs.size();
  FractionalAssignment fa;
  fa.sizes = model.small_sizes;
  fa.u.assign(ns, {});
  fa.capacity.assign(machines, 0);
  fa.cardinality.assign(machines, 0);
  rep.early_mass.assign(machines, 0);
  rep.late_mass.assign(machines, 0);
  std::vector<Rational> mass(machines);
  for (std::size_t j = 0; j < ns; ++j) {
    std::vector<Rational> share(machines);
    auto spread = [&](const SparseVector& part, std::vector<Rational>& tally) {
      for (const auto& [c, v] : part) {
        Rational f = v / sol.x[c];
        for (std::size_t i : machines_of[c]) {
          share[i] += f;
          tally[i] += f;
        }
      }
    };
    spread(sol.y[j], rep.early_mass);
    spread(sol.z[j], rep.late_mass);
    for (std::size_t i = 0; i < machines; ++i) {
      if (share[i] == 0) continue;
      fa.u[j].emplace_back(i, share[i]);
      fa.capacity[i] += share[i] * model.small_sizes[j];
      mass[i] += share[i];
    }
  }
  for (std::size_t i = 0; i < machines; ++i) fa.cardinality[i] = to_int64(ceil(mass[i]));

  std::vector<std::size_t> placed = best_fit_round(fa);
  for (std::size_t j = 0; j < ns; ++j) rep.schedule.machine_sets[placed[j]].push_back(model.small_jobs[j]);
  canonicalize(inst.original, rep.schedule);

  const SchedulingInstance rounded = inst.rounded();
  const Rational bound = (1 + 3 * inst.eps.value()) * model.T;
  if (!verify_schedule(rounded, rep.schedule, bound).ok()) {
    throw std::logic_error("constructed schedule exceeds (1+3eps)T");
  }
  for (std::size_t i = 0; i < machines; ++i) {
    const auto& cfg = model.configs[rep.machine_config[i]];
    long idle = idle_periods(rep.schedule.machine_sets[i].size(), model.k);
    if (idle > idle_period_bound(cfg, rep.late_mass[i], model.k)) {
      throw std::logic_error("machine " + std::to_string(i) + " has more idle periods than its configuration allows");
    }
  }
  return rep;
}

SupResult solve_scheduling(const SchedulingInstance& inst, const Eps& eps, const SupOptions& options) {
  inst.validate();
  SupResult result;
  RoundedInstance rinst = round_sizes(inst, eps);
  std::vector<Rational> grid = candidate_grid(rinst);
  if (grid.empty()) {
    result.schedule = reference_schedule(rinst);
    canonicalize(inst, result.schedule);
    result.makespan = makespan(inst, result.schedule);
    return result;
  }

  bool limit_hit = false;
  Probe probe = [&](const Rational& T) -> std::optional<Schedule> {
    JobClassification cls;
    try {
      cls = classify_jobs(rinst, T);
    } catch (const ProbeInfeasible&) {
      return std::nullopt;
    }
    MILPModel model = build_milp(enumerate_configurations(cls, T, eps, inst.U), cls, rinst, T);
    MilpOutcome out = solve_milp(model, options.milp);
    if (out.status == MilpStatus::kNodeLimit) limit_hit = true;
    if (out.status != MilpStatus::kFeasible) return std::nullopt;
    return milp_to_schedule(out.solution, model, cls, rinst).schedule;
  };

  SearchResult found = binary_search(grid, probe);
  result.probes = found.probes;
  if (limit_hit) result.status = SupStatus::kNodeLimit;
  if (!found.found) {
    if (!limit_hit) throw std::logic_error("every candidate makespan was rejected");
    result.schedule = reference_schedule(rinst);
    canonicalize(inst, result.schedule);
  } else {
    result.schedule = std::move(found.schedule);
    result.T = found.T;
  }
  result.makespan = makespan(inst, result.schedule);
  return result;
}

}  // namespace unavail
