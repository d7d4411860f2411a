#include "unavail/bpu_case1.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace unavail {

long BinConfigI::count() const { return std::accumulate(alpha.begin(), alpha.end(), 0L); }

BinConfigI make_config_case1(std::vector<long> alpha, long k) {
  BinConfigI c{std::move(alpha), 0};
  c.delta = idle_periods(static_cast<std::size_t>(c.count()), k);
  return c;
}

bool config_feasible_case1(const BinConfigI& c, std::span<const Rational> sizes, long k, const Rational& U) {
  if (c.alpha.size() != sizes.size()) return false;
  const long items = c.count();
  if (items < 1 || items > kmax(k, U)) return false;
  if (c.delta != idle_periods(static_cast<std::size_t>(items), k)) return false;
  Rational load = U * c.delta;
  for (std::size_t z = 0; z < sizes.size(); ++z) {
    if (c.alpha[z] < 0) return false;
    load += sizes[z] * c.alpha[z];
  }
  return load <= 1;
}

Case1Master build_master_case1(const GroupedItems& g, long k, const Rational& U) {
  Case1Master master;
  for (std::size_t z = 0; z < g.sizes.size(); ++z) master.lp.add_row({}, Relation::kGreaterEqual, g.counts[z]);
  const long cap = kmax(k, U);
  for (std::size_t z = 0; z < g.sizes.size(); ++z) {
    std::vector<long> alpha(g.sizes.size(), 0);
    alpha[z] = max_copies(g.sizes[z], k, U, cap);
    master.configs.push_back(make_config_case1(alpha, k));
    master.lp.add_column(1, {{z, alpha[z]}});
  }
  return master;
}

namespace {

// Best multiset of exactly `need` items within `room`.
class CardinalityKnapsack {
 public:
  CardinalityKnapsack(const std::vector<Rational>& values, std::span<const Rational> sizes)
      : values_(values), sizes_(sizes), suffix_max_(values.size() + 1, 0) {
    for (std::size_t z = values.size(); z-- > 0;) suffix_max_[z] = std::max(suffix_max_[z + 1], values[z]);
  }

  std::optional<std::pair<std::vector<long>, Rational>> solve(long need, const Rational& room) {
    found_ = false;
    current_.assign(values_.size(), 0);
    dfs(0, need, room, 0);
    if (!found_) return std::nullopt;
    return std::make_pair(best_, best_value_);
  }

 private:
  void dfs(std::size_t z, long need, const Rational& room, const Rational& value) {
    if (need == 0) {
      if (!found_ || value > best_value_) {
        found_ = true;
        best_value_ = value;
        best_ = current_;
      }
      return;
    }
    if (z == values_.size()) return;
    if (found_ && value + suffix_max_[z] * need <= best_value_) return;
    // Take as many of this size as possible first.
    long most = need;
    if (sizes_[z] > 0) most = std::min(most, to_int64(floor(room / sizes_[z])));
    for (long t = most; t >= 0; --t) {
      current_[z] = t;
      dfs(z + 1, need - t, room - sizes_[z] * t, value + values_[z] * t);
    }
    current_[z] = 0;
  }

  const std::vector<Rational>& values_;
  std::span<const Rational> sizes_;
  std::vector<Rational> suffix_max_;
  std::vector<long> current_;
  std::vector<long> best_;
  Rational best_value_;
  bool found_ = false;
};

}  // namespace

std::optional<PricedConfigI> price_case1(const std::vector<Rational>& duals, std::span<const Rational> sizes,
                                         long n, long k, const Rational& U) {
  if (sizes.empty()) return std::nullopt;
  CardinalityKnapsack knap(duals, sizes);
  std::optional<PricedConfigI> best;
  const long limit = std::min(n, kmax(k, U));
  for (long a = 1; a <= limit; ++a) {
    Rational room = 1 - U * idle_periods(static_cast<std::size_t>(a), k);
    if (room < 0) break;
    auto sol = knap.solve(a, room);
    if (!sol || sol->second <= 1) continue;
    if (!best || sol->second > best->value) best = PricedConfigI{make_config_case1(sol->first, k), sol->second};
  }
  if (best && !config_feasible_case1(best->config, sizes, k, U)) {
    throw std::logic_error("pricing produced an infeasible configuration");
  }
  return best;
}

Packing pack_case1(const std::vector<long>& copies, const std::vector<BinConfigI>& configs, const GroupedItems& g,
                   const PackingInstance& inst) {
  std::vector<const BinConfigI*> bin_config;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    for (long t = 0; t < copies[c]; ++t) bin_config.push_back(&configs[c]);
  }
  Packing pack;
  pack.bins.assign(bin_config.size(), {});
  for (std::size_t z = 0; z < g.sizes.size(); ++z) {
    std::deque<Index> supply(g.members[z].begin(), g.members[z].end());
    for (std::size_t b = 0; b < bin_config.size() && !supply.empty(); ++b) {
      for (long t = 0; t < bin_config[b]->alpha[z] && !supply.empty(); ++t) {
        pack.bins[b].push_back(supply.front());
        supply.pop_front();
      }
    }
    if (!supply.empty()) throw std::logic_error("items of a size class left unpacked");
  }
  std::erase_if(pack.bins, [](const IndexSet& b) { return b.empty(); });
  for (Index i : g.class1) pack.bins.push_back({i});
  canonicalize(inst, pack);
  if (!verify_packing(inst, pack).ok()) throw std::logic_error("case I packing is infeasible");
  return pack;
}

Case1Result solve_case1(const PackingInstance& inst, const Eps& eps) {
  inst.validate();
  Case1Result result;
  IndexSet all(inst.n());
  std::iota(all.begin(), all.end(), 0);
  GroupedItems g = linear_grouping(inst.item_sizes, all, eps);
  result.class1_bins = g.class1.size();

  Case1Master master = build_master_case1(g, inst.k, inst.U);
  std::vector<long> copies;
  if (!g.sizes.empty()) {
    const long grouped = std::accumulate(g.counts.begin(), g.counts.end(), 0L);
    PricingOracle oracle = [&](const std::vector<Rational>& duals) -> std::optional<Column> {
      auto priced = price_case1(duals, g.sizes, grouped, inst.k, inst.U);
      if (!priced) return std::nullopt;
      Column col;
      for (std::size_t z = 0; z < g.sizes.size(); ++z) {
        if (priced->config.alpha[z] > 0) col.entries.emplace_back(z, priced->config.alpha[z]);
      }
      master.configs.push_back(priced->config);
      return col;
    };
    ColumnGenResult cg = column_generation(master.lp, oracle, eps);
    if (cg.status != ColumnGenStatus::kConverged) throw std::logic_error("case I column generation did not converge");
    result.lp_objective = cg.solution.objective;
    result.support = cg.solution.positive_support();
    result.iterations = cg.iterations;
    for (const auto& x : cg.solution.values) {
      copies.push_back(to_int64(ceil(x)));
      result.rounding_overhead += Rational(ceil(x)) - x;
    }
  }
  result.lp_rows = master.lp.num_rows();
  result.columns = master.configs.size();
  result.packing = pack_case1(copies, master.configs, g, inst);
  return result;
}

}  // namespace unavail
