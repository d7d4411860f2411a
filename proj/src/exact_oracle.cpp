#include "unavail/exact_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace unavail {

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
 public:
  explicit Budget(const OracleLimits& limits)
      : limits_(limits), deadline_(Clock::now() + limits.time_budget) {}

  // False once the node or time limit is hit.
  bool tick() {
    if (exceeded_) return false;
    if (++nodes_ > limits_.max_nodes) exceeded_ = true;
    if ((nodes_ & 0xfff) == 0 && Clock::now() > deadline_) exceeded_ = true;
    return !exceeded_;
  }
  bool exceeded() const { return exceeded_; }

 private:
  const OracleLimits& limits_;
  Clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

IndexSet sorted_indices(const std::vector<Rational>& sizes) {
  IndexSet order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  canonical_order(sizes, order);
  return order;
}

class MakespanSearch {
 public:
  MakespanSearch(const SchedulingInstance& inst, const OracleLimits& limits)
      : inst_(inst), budget_(limits), order_(sorted_indices(inst.job_sizes)) {
    const auto m = static_cast<std::size_t>(inst.m);
    sums_.assign(m, 0);
    counts_.assign(m, 0);
    assign_.assign(inst.n(), 0);
    suffix_.assign(order_.size() + 1, 0);
    for (std::size_t t = order_.size(); t-- > 0;) suffix_[t] = suffix_[t + 1] + inst.job_sizes[order_[t]];
  }

  MakespanResult run() {
    greedy_incumbent();
    lower_ = lower_bound();
    if (best_ > lower_) dfs(0, 0, 0);
    MakespanResult result;
    result.status = budget_.exceeded() ? OracleStatus::kExceeded : OracleStatus::kOptimal;
    result.makespan = best_;
    result.schedule.machine_sets.assign(static_cast<std::size_t>(inst_.m), {});
    for (std::size_t t = 0; t < order_.size(); ++t) {
      result.schedule.machine_sets[best_assign_[t]].push_back(order_[t]);
    }
    canonicalize(inst_, result.schedule);
    return result;
  }

 private:
  Rational increment(std::size_t machine, const Rational& p) const {
    if (counts_[machine] > 0 && counts_[machine] % inst_.k == 0) return p + inst_.U;
    return p;
  }

  Rational lower_bound() const {
    Rational lb = 0;
    for (const auto& p : inst_.job_sizes) lb = std::max(lb, p);
    lb = std::max(lb, Rational(suffix_[0] / inst_.m));
    if (inst_.n() > static_cast<std::size_t>(inst_.m * inst_.k)) lb = std::max(lb, inst_.U);
    return lb;
  }

  void greedy_incumbent() {
    for (std::size_t t = 0; t < order_.size(); ++t) {
      const Rational& p = inst_.job_sizes[order_[t]];
      std::size_t pick = 0;
      Rational pick_load;
      for (std::size_t i = 0; i < sums_.size(); ++i) {
        Rational load = sums_[i] + increment(i, p);
        if (i == 0 || load < pick_load) {
          pick = i;
          pick_load = load;
        }
      }
      sums_[pick] = pick_load;
      ++counts_[pick];
      assign_[t] = pick;
    }
    best_ = 0;
    for (const auto& s : sums_) best_ = std::max(best_, s);
    best_assign_ = assign_;
    std::fill(sums_.begin(), sums_.end(), Rational(0));
    std::fill(counts_.begin(), counts_.end(), 0L);
  }

  // `opened` machines are in use; `current` is their largest load.
  void dfs(std::size_t t, std::size_t opened, const Rational& current) {
    if (!budget_.tick()) return;
    if (t == order_.size()) {
      if (current < best_) {
        best_ = current;
        best_assign_ = assign_;
      }
      return;
    }
    Rational total = suffix_[t];
    for (std::size_t i = 0; i < opened; ++i) total += sums_[i];
    if (std::max(current, Rational(total / inst_.m)) >= best_) return;

    const Rational& p = inst_.job_sizes[order_[t]];
    const std::size_t limit = std::min(opened + 1, sums_.size());
    for (std::size_t i = 0; i < limit; ++i) {
      bool duplicate = false;
      for (std::size_t h = 0; h < i && !duplicate; ++h) {
        duplicate = sums_[h] == sums_[i] && counts_[h] == counts_[i];
      }
      if (duplicate) continue;
      Rational load = sums_[i] + increment(i, p);
      if (load >= best_) continue;
      Rational saved = sums_[i];
      sums_[i] = load;
      ++counts_[i];
      assign_[t] = i;
      dfs(t + 1, std::max(opened, i + 1), std::max(current, load));
      --counts_[i];
      sums_[i] = saved;
      if (budget_.exceeded() || best_ <= lower_) return;
    }
  }

  const SchedulingInstance& inst_;
  Budget budget_;
  IndexSet order_;
  std::vector<Rational> sums_;
  std::vector<long> counts_;
  std::vector<std::size_t> assign_;
  std::vector<std::size_t> best_assign_;
  std::vector<Rational> suffix_;
  Rational best_;
  Rational lower_;
};

class BincountSearch {
 public:
  BincountSearch(const PackingInstance& inst, const OracleLimits& limits)
      : inst_(inst), budget_(limits), order_(sorted_indices(inst.item_sizes)) {
    assign_.assign(order_.size(), 0);
  }

  BincountResult run() {
    first_fit_incumbent();
    lower_ = lower_bound();
    if (best_ > lower_) dfs(0);
    BincountResult result;
    result.status = budget_.exceeded() ? OracleStatus::kExceeded : OracleStatus::kOptimal;
    result.bins = static_cast<long>(best_);
    result.packing.bins.assign(best_, {});
    for (std::size_t t = 0; t < order_.size(); ++t) {
      result.packing.bins[best_assign_[t]].push_back(order_[t]);
    }
    canonicalize(inst_, result.packing);
    return result;
  }

 private:
  Rational added_load(std::size_t bin, const Rational& s) const {
    if (counts_[bin] > 0 && counts_[bin] % inst_.k == 0) return s + inst_.U;
    return s;
  }

  std::size_t lower_bound() const {
    if (order_.empty()) return 0;
    Rational total = 0;
    for (const auto& s : inst_.item_sizes) total += s;
    auto by_size = static_cast<std::size_t>(to_int64(ceil(total)));
    auto cap = static_cast<std::size_t>(kmax(inst_.k, inst_.U));
    std::size_t by_count = (order_.size() + cap - 1) / cap;
    return std::max({by_size, by_count, std::size_t{1}});
  }

  void first_fit_incumbent() {
    for (std::size_t t = 0; t < order_.size(); ++t) {
      const Rational& s = inst_.item_sizes[order_[t]];
      std::size_t b = 0;
      for (; b < loads_.size(); ++b) {
        if (loads_[b] + added_load(b, s) <= 1) break;
      }
      if (b == loads_.size()) {
        loads_.push_back(0);
        counts_.push_back(0);
      }
      loads_[b] += added_load(b, s);
      ++counts_[b];
      assign_[t] = b;
    }
    best_ = loads_.size();
    best_assign_ = assign_;
    loads_.clear();
    counts_.clear();
  }

  void dfs(std::size_t t) {
    if (!budget_.tick()) return;
    if (t == order_.size()) {
      if (loads_.size() < best_) {
        best_ = loads_.size();
        best_assign_ = assign_;
      }
      return;
    }
    const Rational& s = inst_.item_sizes[order_[t]];
    for (std::size_t b = 0; b < loads_.size(); ++b) {
      bool duplicate = false;
      for (std::size_t h = 0; h < b && !duplicate; ++h) {
        duplicate = loads_[h] == loads_[b] && counts_[h] == counts_[b];
      }
      if (duplicate) continue;
      Rational load = loads_[b] + added_load(b, s);
      if (load > 1) continue;
      Rational saved = loads_[b];
      loads_[b] = load;
      ++counts_[b];
      assign_[t] = b;
      dfs(t + 1);
      --counts_[b];
      loads_[b] = saved;
      if (budget_.exceeded() || best_ <= lower_) return;
    }
    if (loads_.size() + 1 < best_) {
      loads_.push_back(s);
      counts_.push_back(1);
      assign_[t] = loads_.size() - 1;
      dfs(t + 1);
      loads_.pop_back();
      counts_.pop_back();
    }
  }

  const PackingInstance& inst_;
  Budget budget_;
  IndexSet order_;
  std::vector<Rational> loads_;
  std::vector<long> counts_;
  std::vector<std::size_t> assign_;
  std::vector<std::size_t> best_assign_;
  std::size_t best_ = 0;
  std::size_t lower_ = 0;
};

}  // namespace

MakespanResult exact_makespan(const SchedulingInstance& inst, const OracleLimits& limits) {
  inst.validate();
  if (inst.n() > limits.max_jobs) return {};
  return MakespanSearch(inst, limits).run();
}

BincountResult exact_bincount(const PackingInstance& inst, const OracleLimits& limits) {
  inst.validate();
  if (inst.n() > limits.max_jobs) return {};
  return BincountSearch(inst, limits).run();
}

}  // namespace unavail
