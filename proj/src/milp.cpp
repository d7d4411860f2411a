#include "unavail/milp.hpp"

#include <algorithm>
#include <map>

namespace unavail {

MILPModel build_milp(std::vector<Configuration> configs, const JobClassification& cls,
                     const RoundedInstance& inst, const Rational& T) {
  MILPModel model;
  model.configs = std::move(configs);
  model.m = inst.original.m;
  model.k = inst.original.k;
  model.U = inst.original.U;
  model.T = T;
  model.eps = inst.eps;
  model.large_sizes = cls.large_sizes;
  model.large_counts = cls.large_counts;
  model.small_jobs = cls.small;
  for (Index j : cls.small) {
    model.small_sizes.push_back(inst.rounded_sizes[j]);
    model.small_modified.push_back(inst.rounded_sizes[j] + model.U / model.k);
  }
  return model;
}

namespace {

Rational late_capacity(const Configuration& c) { return c.gamma_prime * (c.gamma + 1); }

Rational early_slots(const Configuration& c, long k) { return c.delta * k - c.large_count(); }

}  // namespace

std::vector<std::size_t> undominated_configurations(const std::vector<Configuration>& configs) {
  std::map<std::vector<long>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < configs.size(); ++i) groups[configs[i].alpha].push_back(i);
  std::vector<std::size_t> keep;
  for (const auto& [alpha, members] : groups) {
    for (std::size_t a : members) {
      const auto& ca = configs[a];
      bool dominated = false;
      for (std::size_t b : members) {
        if (a == b) continue;
        const auto& cb = configs[b];
        if (cb.beta < ca.beta || late_capacity(cb) < late_capacity(ca) || cb.delta < ca.delta) continue;
        bool equal = cb.beta == ca.beta && late_capacity(cb) == late_capacity(ca) && cb.delta == ca.delta;
        if (!equal || b < a) {
          dominated = true;
          break;
        }
      }
      if (!dominated) keep.push_back(a);
    }
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

std::vector<std::string> check_milp_solution(const MILPModel& model, const MILPSolution& sol) {
  std::vector<std::string> errors;
  const std::size_t nc = model.configs.size();
  const std::size_t ns = model.small_jobs.size();
  if (sol.x.size() != nc || sol.y.size() != ns || sol.z.size() != ns) {
    errors.emplace_back("solution dimensions do not match the model");
    return errors;
  }
  long machines = 0;
  for (long x : sol.x) {
    if (x < 0) errors.emplace_back("negative configuration counter");
    machines += x;
  }
  if (machines != model.m) errors.emplace_back("configuration counters do not sum to m");

  const Rational unit = model.eps.value() * model.T;
  std::vector<Rational> early_size(nc), late_size(nc), early_count(nc);
  auto scan = [&](const std::vector<SparseVector>& part, bool early, std::vector<Rational>& mass) {
    for (std::size_t j = 0; j < ns; ++j) {
      for (const auto& [c, v] : part[j]) {
        if (c >= nc) {
          errors.emplace_back("assignment to unknown configuration");
          continue;
        }
        if (v < 0 || v > 1) errors.emplace_back("assignment fraction outside [0,1]");
        mass[j] += v;
        if (early) {
          early_size[c] += v * model.small_sizes[j];
          early_count[c] += v;
        } else {
          late_size[c] += v * model.small_modified[j];
        }
      }
    }
  };
  std::vector<Rational> mass(ns);
  scan(sol.y, true, mass);
  scan(sol.z, false, mass);
  for (std::size_t j = 0; j < ns; ++j) {
    if (mass[j] != 1) errors.push_back("small job " + std::to_string(model.small_jobs[j]) + " not fully assigned");
  }
  for (std::size_t c = 0; c < nc && errors.empty(); ++c) {
    const auto& cfg = model.configs[c];
    if (early_size[c] > unit * sol.x[c] * (cfg.beta + 1)) {
      errors.push_back("early size budget exceeded at configuration " + std::to_string(c));
    }
    if (late_size[c] > unit * sol.x[c] * late_capacity(cfg)) {
      errors.push_back("late size budget exceeded at configuration " + std::to_string(c));
    }
    if (Rational(cfg.large_count() * sol.x[c]) + early_count[c] > Rational(sol.x[c] * cfg.delta * model.k)) {
      errors.push_back("early cardinality exceeded at configuration " + std::to_string(c));
    }
  }
  for (std::size_t l = 0; l < model.large_sizes.size(); ++l) {
    long places = 0;
    for (std::size_t c = 0; c < nc; ++c) places += model.configs[c].alpha[l] * sol.x[c];
    if (places != model.large_counts[l]) {
      errors.push_back("large size " + to_string(model.large_sizes[l]) + " has mismatched places");
    }
  }
  return errors;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const MILPModel& model, const MilpOptions& options) : model_(model), options_(options) {
    for (std::size_t c : undominated_configurations(model.configs)) {
      if (early_slots(model.configs[c], model.k) >= 0) usable_.push_back(c);
    }
    lb_.assign(usable_.size(), 0);
    ub_.assign(usable_.size(), model.m);
  }

  MilpOutcome run() {
    MilpOutcome out;
    std::optional<MILPSolution> sol = search();
    out.nodes = nodes_;
    if (sol) {
      out.status = MilpStatus::kFeasible;
      out.solution = std::move(*sol);
    } else {
      out.status = limit_hit_ ? MilpStatus::kNodeLimit : MilpStatus::kInfeasible;
    }
    return out;
  }

 private:
  // x over usable configurations, or nullopt if the relaxation at the current
  // bounds is infeasible.
  std::optional<std::vector<Rational>> relaxation() const {
    const std::size_t r = usable_.size();
    const std::size_t ns = model_.small_jobs.size();
    const Rational unit = model_.eps.value() * model_.T;
    LPModel lp;
    for (std::size_t c = 0; c < r + 2 * ns; ++c) lp.add_variable(0);
    auto Y = [&](std::size_t j) { return r + j; };
    auto Z = [&](std::size_t j) { return r + ns + j; };

    SparseVector all;
    for (std::size_t c = 0; c < r; ++c) all.emplace_back(c, 1);
    lp.add_row(all, Relation::kEqual, model_.m);
    for (std::size_t l = 0; l < model_.large_sizes.size(); ++l) {
      SparseVector row;
      for (std::size_t c = 0; c < r; ++c) {
        if (long a = model_.configs[usable_[c]].alpha[l]) row.emplace_back(c, a);
      }
      lp.add_row(row, Relation::kEqual, model_.large_counts[l]);
    }
    if (ns > 0) {
      SparseVector early, late, count;
      for (std::size_t c = 0; c < r; ++c) {
        const auto& cfg = model_.configs[usable_[c]];
        early.emplace_back(c, -unit * (cfg.beta + 1));
        if (cfg.gamma_prime) late.emplace_back(c, -unit * late_capacity(cfg));
        count.emplace_back(c, -early_slots(cfg, model_.k));
      }
      for (std::size_t j = 0; j < ns; ++j) {
        early.emplace_back(Y(j), model_.small_sizes[j]);
        late.emplace_back(Z(j), model_.small_modified[j]);
        count.emplace_back(Y(j), 1);
        lp.add_row({{Y(j), 1}, {Z(j), 1}}, Relation::kEqual, 1);
      }
      lp.add_row(early, Relation::kLessEqual, 0);
      lp.add_row(late, Relation::kLessEqual, 0);
      lp.add_row(count, Relation::kLessEqual, 0);
    }
    for (std::size_t c = 0; c < r; ++c) {
      if (lb_[c] > 0) lp.add_row({{c, 1}}, Relation::kGreaterEqual, lb_[c]);
      if (ub_[c] < model_.m) lp.add_row({{c, 1}}, Relation::kLessEqual, ub_[c]);
    }
    LpResult res = basic_feasible(lp);
    if (!res.optimal()) return std::nullopt;
    res.solution.values.resize(r);
    return res.solution.values;
  }

  // Decides (y, z) for a fixed integral x over usable configurations.
  std::optional<MILPSolution> leaf(const std::vector<long>& x) const {
    const std::size_t ns = model_.small_jobs.size();
    const Rational unit = model_.eps.value() * model_.T;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (x[c] > 0) support.push_back(c);
    }
    MILPSolution sol;
    sol.x.assign(model_.configs.size(), 0);
    for (std::size_t c : support) sol.x[usable_[c]] = x[c];
    sol.y.assign(ns, {});
    sol.z.assign(ns, {});
    if (ns == 0) return sol;

    const std::size_t s = support.size();
    LPModel lp;
    // Variable y(j, t) at 2*(j*s + t), z(j, t) right after it.
    for (std::size_t v = 0; v < 2 * ns * s; ++v) lp.add_variable(0);
    auto yv = [&](std::size_t j, std::size_t t) { return 2 * (j * s + t); };
    for (std::size_t j = 0; j < ns; ++j) {
      SparseVector row;
      for (std::size_t t = 0; t < s; ++t) {
        row.emplace_back(yv(j, t), 1);
        row.emplace_back(yv(j, t) + 1, 1);
      }
      lp.add_row(row, Relation::kEqual, 1);
    }
    for (std::size_t t = 0; t < s; ++t) {
      const auto& cfg = model_.configs[usable_[support[t]]];
      const long xc = x[support[t]];
      SparseVector early, late, count;
      for (std::size_t j = 0; j < ns; ++j) {
        early.emplace_back(yv(j, t), model_.small_sizes[j]);
        late.emplace_back(yv(j, t) + 1, model_.small_modified[j]);
        count.emplace_back(yv(j, t), 1);
      }
      lp.add_row(early, Relation::kLessEqual, unit * xc * (cfg.beta + 1));
      lp.add_row(late, Relation::kLessEqual, unit * xc * late_capacity(cfg));
      lp.add_row(count, Relation::kLessEqual, early_slots(cfg, model_.k) * xc);
    }
    LpResult res = basic_feasible(lp);
    if (!res.optimal()) return std::nullopt;
    for (std::size_t j = 0; j < ns; ++j) {
      for (std::size_t t = 0; t < s; ++t) {
        const std::size_t c = usable_[support[t]];
        if (const auto& v = res.solution.values[yv(j, t)]; v > 0) sol.y[j].emplace_back(c, v);
        if (const auto& v = res.solution.values[yv(j, t) + 1]; v > 0) sol.z[j].emplace_back(c, v);
      }
    }
    return sol;
  }

  std::optional<MILPSolution> search() {
    if (nodes_ >= options_.max_nodes) {
      limit_hit_ = true;
      return std::nullopt;
    }
    ++nodes_;
    auto relaxed = relaxation();
    if (!relaxed) return std::nullopt;
    const auto& xr = *relaxed;

    // Most fractional variable, lowest index on ties.
    std::size_t pick = xr.size();
    Rational best_gap = 0;
    for (std::size_t c = 0; c < xr.size(); ++c) {
      if (xr[c].get_den() == 1) continue;
      Rational f = xr[c] - Rational(floor(xr[c]));
      Rational gap = std::min(f, Rational(1 - f));
      if (pick == xr.size() || gap > best_gap) {
        pick = c;
        best_gap = gap;
      }
    }
    if (pick < xr.size()) {
      const long down = to_int64(floor(xr[pick]));
      return branch(pick, {{lb_[pick], down}, {down + 1, ub_[pick]}});
    }

    std::vector<long> x(xr.size());
    for (std::size_t c = 0; c < xr.size(); ++c) x[c] = to_int64(xr[c].get_num());
    if (auto sol = leaf(x)) return sol;

    // Integral but the small jobs do not fit: split the first unfixed
    // variable around its value.
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (lb_[c] == ub_[c]) continue;
      const long v = x[c];
      return branch(c, {{v, v}, {lb_[c], v - 1}, {v + 1, ub_[c]}});
    }
    return std::nullopt;
  }

  std::optional<MILPSolution> branch(std::size_t c, const std::vector<std::pair<long, long>>& ranges) {
    const long saved_lb = lb_[c];
    const long saved_ub = ub_[c];
    for (const auto& [lo, hi] : ranges) {
      if (lo > hi) continue;
      lb_[c] = lo;
      ub_[c] = hi;
      auto sol = search();
      if (sol || limit_hit_) {
        lb_[c] = saved_lb;
        ub_[c] = saved_ub;
        return sol;
      }
    }
    lb_[c] = saved_lb;
    ub_[c] = saved_ub;
    return std::nullopt;
  }

  const MILPModel& model_;
  MilpOptions options_;
  std::vector<std::size_t> usable_;
  std::vector<long> lb_;
  std::vector<long> ub_;
  std::uint64_t nodes_ = 0;
  bool limit_hit_ = false;
};

}  // namespace

MilpOutcome solve_milp(const MILPModel& model, const MilpOptions& options) {
  return BranchAndBound(model, options).run();
}

}  // namespace unavail
