#include "unavail/bpu_case2.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace unavail {

long BinConfigII::large_count() const { return std::accumulate(alpha.begin(), alpha.end(), 0L); }

Rational config_load_case2(const BinConfigII& c, std::span<const Rational> sizes, const Eps& eps, const Rational& U) {
  Rational load = 0;
  for (std::size_t z = 0; z < c.alpha.size(); ++z) load += sizes[z] * c.alpha[z];
  load += eps.value() * (c.gamma_prime * c.gamma);
  load += U * (c.delta - 1 + c.gamma_prime);
  return load;
}

Rational early_budget(const BinConfigII& c, std::span<const Rational> sizes, const Eps& eps, const Rational& U) {
  return 1 - config_load_case2(c, sizes, eps, U);
}

Rational late_budget(const BinConfigII& c, const Eps& eps) {
  return eps.value() * (c.gamma_prime * (c.gamma + 1));
}

long count_budget(const BinConfigII& c, long k) { return c.delta * k - c.large_count(); }

bool config_valid_case2(const BinConfigII& c, std::span<const Rational> sizes, long k, const Rational& U,
                        const Eps& eps, long n) {
  const long inv = eps.inverse();
  if (c.alpha.size() != sizes.size()) return false;
  if (c.gamma_prime != 0 && c.gamma_prime != 1) return false;
  if (c.gamma < 0 || c.gamma > inv || (c.gamma_prime == 0 && c.gamma != 0)) return false;
  if (c.delta < 1 || c.delta > std::max(n, 1L)) return false;
  if (c.gamma_prime == 1 && c.delta < inv) return false;
  for (long a : c.alpha) {
    if (a < 0) return false;
  }
  const long large = c.large_count();
  if (large > c.delta * k || large > n) return false;
  return config_load_case2(c, sizes, eps, U) <= 1;
}

Rational modified_size(const Rational& s, long k, const Rational& U) {
  if (U <= 0) throw std::invalid_argument("modified sizes need U > 0");
  return s + U / k;
}

Rational bpu2_load(std::span<const Rational> sizes, long k, const Rational& U, const Eps& eps) {
  if (sizes.empty()) return 0;
  const auto early = static_cast<std::size_t>(k * eps.inverse());
  if (sizes.size() <= early) return bin_load(sizes, k, U);
  Rational total = 0;
  for (const auto& s : sizes) total += s;
  Rational late = static_cast<long>(sizes.size() - early);
  return total + late * U / k + U * eps.inverse();
}

std::size_t Case2Master::early_row(long eta) const { return num_sizes + small.size() + 3 * static_cast<std::size_t>(eta); }
std::size_t Case2Master::late_row(long eta) const { return early_row(eta) + 1; }
std::size_t Case2Master::count_row(long eta) const { return early_row(eta) + 2; }
std::size_t Case2Master::v_var(std::size_t i, long eta) const {
  return 2 * (i * static_cast<std::size_t>(inv + 1) + static_cast<std::size_t>(eta));
}
std::size_t Case2Master::w_var(std::size_t i, long eta) const { return v_var(i, eta) + 1; }

SparseVector Case2Master::column(const BinConfigII& c, std::span<const Rational> sizes, long k, const Rational& U,
                                 const Eps& eps) const {
  SparseVector col;
  for (std::size_t z = 0; z < c.alpha.size(); ++z) {
    if (c.alpha[z] != 0) col.emplace_back(z, c.alpha[z]);
  }
  col.emplace_back(early_row(c.gamma), early_budget(c, sizes, eps, U));
  col.emplace_back(late_row(c.gamma), late_budget(c, eps));
  col.emplace_back(count_row(c.gamma), count_budget(c, k));
  return col;
}

Case2Master build_master_case2(const GroupedItems& g, const PackingInstance& inst, const IndexSet& small,
                               const Eps& eps) {
  Case2Master m;
  m.num_sizes = g.sizes.size();
  m.inv = eps.inverse();
  m.small = small;
  for (Index i : small) {
    m.small_sizes.push_back(inst.item_sizes[i]);
    m.small_modified.push_back(modified_size(inst.item_sizes[i], inst.k, inst.U));
  }
  for (std::size_t z = 0; z < g.sizes.size(); ++z) m.lp.add_row({}, Relation::kGreaterEqual, g.counts[z]);
  for (std::size_t i = 0; i < small.size(); ++i) m.lp.add_row({}, Relation::kGreaterEqual, 1);
  for (long eta = 0; eta <= m.inv; ++eta) {
    for (int r = 0; r < 3; ++r) m.lp.add_row({}, Relation::kGreaterEqual, 0);
  }
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (long eta = 0; eta <= m.inv; ++eta) {
      m.lp.add_column(0, {{m.small_row(i), 1}, {m.early_row(eta), -m.small_sizes[i]}, {m.count_row(eta), -1}});
      m.lp.add_column(0, {{m.small_row(i), 1}, {m.late_row(eta), -m.small_modified[i]}});
    }
  }
  const long n = static_cast<long>(inst.n());
  auto add = [&](BinConfigII c) {
    if (!config_valid_case2(c, g.sizes, inst.k, inst.U, eps, n)) throw std::logic_error("invalid initial configuration");
    m.config_vars.push_back(m.lp.add_column(1, m.column(c, g.sizes, inst.k, inst.U, eps)));
    m.configs.push_back(std::move(c));
  };
  for (std::size_t z = 0; z < g.sizes.size(); ++z) {
    BinConfigII c;
    c.alpha.assign(g.sizes.size(), 0);
    c.alpha[z] = max_copies(g.sizes[z], inst.k, inst.U, n);
    c.delta = (c.alpha[z] + inst.k - 1) / inst.k;
    add(std::move(c));
  }
  BinConfigII empty;
  empty.alpha.assign(g.sizes.size(), 0);
  add(std::move(empty));
  return m;
}

Case2Duals split_duals(const Case2Master& master, const std::vector<Rational>& duals) {
  Case2Duals d;
  d.lambda.assign(duals.begin(), duals.begin() + static_cast<long>(master.num_sizes));
  for (std::size_t i = 0; i < master.small.size(); ++i) d.mu.push_back(duals[master.small_row(i)]);
  for (long eta = 0; eta <= master.inv; ++eta) {
    d.nu.push_back(duals[master.early_row(eta)]);
    d.xi.push_back(duals[master.late_row(eta)]);
    d.rho.push_back(duals[master.count_row(eta)]);
  }
  return d;
}

Rational dual_lhs(const BinConfigII& c, const Case2Duals& d, std::span<const Rational> sizes, long k,
                  const Rational& U, const Eps& eps) {
  Rational lhs = 0;
  for (std::size_t z = 0; z < c.alpha.size(); ++z) lhs += d.lambda[z] * c.alpha[z];
  const auto eta = static_cast<std::size_t>(c.gamma);
  lhs += d.nu[eta] * early_budget(c, sizes, eps, U);
  lhs += d.xi[eta] * late_budget(c, eps);
  lhs += d.rho[eta] * count_budget(c, k);
  return lhs;
}

RoundedIp solve_rounded_ip(const std::vector<Rational>& profit, const Rational& nu, std::span<const Rational> sizes,
                           long count_bound, const Rational& capacity, long n, const Eps& eps) {
  const std::size_t h = sizes.size();
  RoundedIp out{std::vector<long>(h, 0), 0};
  if (capacity < 0 || count_bound <= 0 || h == 0) return out;

  // Integer weights in units of eps*capacity/n; capacity itself is n/eps units.
  std::vector<long> weight(h, 0);
  std::vector<Rational> value(h);
  long W = 0;
  if (capacity == 0) {
    for (std::size_t z = 0; z < h; ++z) {
      weight[z] = sizes[z] == 0 ? 0 : -1;
      value[z] = profit[z];
    }
  } else {
    const Rational unit = eps.value() * capacity / std::max(n, 1L);
    W = std::max(n, 1L) * eps.inverse();
    for (std::size_t z = 0; z < h; ++z) {
      weight[z] = to_int64(floor(sizes[z] / unit));
      value[z] = profit[z] - nu * unit * weight[z];
    }
  }

  const auto A = static_cast<std::size_t>(count_bound);
  const auto cols = static_cast<std::size_t>(W) + 1;
  std::vector<Rational> dp((A + 1) * cols, Rational(0));
  // take: item index, or kFewer (one count unused), kLighter (one unit unused).
  constexpr int kNone = -1, kFewer = -2, kLighter = -3;
  std::vector<int> take((A + 1) * cols, kNone);
  auto at = [&](std::size_t a, std::size_t w) { return a * cols + w; };
  for (std::size_t a = 1; a <= A; ++a) {
    for (std::size_t w = 0; w < cols; ++w) {
      dp[at(a, w)] = dp[at(a - 1, w)];
      take[at(a, w)] = kFewer;
      if (w > 0 && dp[at(a, w - 1)] > dp[at(a, w)]) {
        dp[at(a, w)] = dp[at(a, w - 1)];
        take[at(a, w)] = kLighter;
      }
      for (std::size_t z = 0; z < h; ++z) {
        if (weight[z] < 0 || weight[z] > static_cast<long>(w) || value[z] <= 0) continue;
        Rational cand = dp[at(a - 1, w - static_cast<std::size_t>(weight[z]))] + value[z];
        if (cand > dp[at(a, w)]) {
          dp[at(a, w)] = cand;
          take[at(a, w)] = static_cast<int>(z);
        }
      }
    }
  }
  std::size_t a = A;
  std::size_t w = cols - 1;
  while (a > 0) {
    const int t = take[at(a, w)];
    if (t == kFewer) {
      --a;
    } else if (t == kLighter) {
      --w;
    } else {
      const auto z = static_cast<std::size_t>(t);
      ++out.alpha[z];
      w -= static_cast<std::size_t>(weight[z]);
      --a;
    }
  }
  for (std::size_t z = 0; z < h; ++z) out.value += value[z] * out.alpha[z];
  return out;
}

namespace {

// Exact best multiset of at most `count` sizes within `room` under `value`.
class ExactLarge {
 public:
  ExactLarge(const std::vector<Rational>& value, std::span<const Rational> sizes)
      : value_(value), sizes_(sizes), suffix_max_(value.size() + 1, 0) {
    for (std::size_t z = value.size(); z-- > 0;) suffix_max_[z] = std::max(suffix_max_[z + 1], value[z]);
  }

  std::pair<std::vector<long>, Rational> solve(long count, const Rational& room) {
    best_.assign(value_.size(), 0);
    best_value_ = 0;
    current_.assign(value_.size(), 0);
    dfs(0, count, room, 0);
    return {best_, best_value_};
  }

 private:
  void dfs(std::size_t z, long count, const Rational& room, const Rational& value) {
    if (value > best_value_) {
      best_value_ = value;
      best_ = current_;
    }
    if (z == value_.size() || count == 0) return;
    if (value + suffix_max_[z] * count <= best_value_) return;
    if (value_[z] > 0 && sizes_[z] <= room) {
      long most = count;
      if (sizes_[z] > 0) most = std::min(most, to_int64(floor(room / sizes_[z])));
      for (long t = most; t >= 1; --t) {
        current_[z] = t;
        dfs(z + 1, count - t, room - sizes_[z] * t, value + value_[z] * t);
      }
      current_[z] = 0;
    }
    dfs(z + 1, count, room, value);
  }

  const std::vector<Rational>& value_;
  std::span<const Rational> sizes_;
  std::vector<Rational> suffix_max_;
  std::vector<long> current_;
  std::vector<long> best_;
  Rational best_value_;
};

}  // namespace

std::optional<PricedConfigII> price_case2(const Case2Duals& duals, std::span<const Rational> sizes, long k,
                                          const Rational& U, const Eps& eps, long n) {
  const long inv = eps.inverse();
  const std::size_t h = sizes.size();
  std::optional<PricedConfigII> best;
  for (int gp = 0; gp <= 1; ++gp) {
    for (long gamma = 0; gamma <= (gp ? inv : 0); ++gamma) {
      const auto eta = static_cast<std::size_t>(gamma);
      const Rational& nu = duals.nu[eta];
      const Rational& rho = duals.rho[eta];
      std::vector<Rational> profit(h), exact_value(h);
      for (std::size_t z = 0; z < h; ++z) {
        profit[z] = duals.lambda[z] - rho;
        exact_value[z] = profit[z] - nu * sizes[z];
      }
      ExactLarge exact(exact_value, sizes);
      for (long delta = gp ? inv : 1; delta <= std::max(n, 1L); ++delta) {
        const Rational R = 1 - eps.value() * (gp * gamma) - U * (delta - 1 + gp);
        if (R < 0) break;
        const long A = std::min({inv, delta * k, n});
        const Rational K = nu * R + duals.xi[eta] * eps.value() * (gp * (gamma + 1)) + rho * (delta * k);

        RoundedIp rip = solve_rounded_ip(profit, nu, sizes, A, R, n, eps);
        if (rip.value + K <= 1) continue;

        auto [alpha, value] = exact.solve(A, R);
        if (value + K <= 1) continue;

        BinConfigII c{alpha, delta, gamma, gp};
        if (!config_valid_case2(c, sizes, k, U, eps, n)) throw std::logic_error("pricing built an invalid configuration");
        Rational lhs = dual_lhs(c, duals, sizes, k, U, eps);
        if (lhs != value + K) throw std::logic_error("dual constraint evaluation mismatch");
        if (!best || lhs > best->lhs) best = PricedConfigII{std::move(c), lhs};
      }
    }
  }
  return best;
}

std::vector<DeltaBin> assign_large_case2(const std::vector<long>& copies, const std::vector<BinConfigII>& configs,
                                         const GroupedItems& g, const PackingInstance& inst, const Eps& eps) {
  std::vector<DeltaBin> bins;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    for (long t = 0; t < copies[c]; ++t) {
      DeltaBin b;
      b.config = c;
      b.early_room = early_budget(configs[c], g.sizes, eps, inst.U);
      b.early_slots = count_budget(configs[c], inst.k);
      b.late_room = late_budget(configs[c], eps);
      bins.push_back(std::move(b));
    }
  }
  for (std::size_t z = 0; z < g.sizes.size(); ++z) {
    std::deque<Index> supply(g.members[z].begin(), g.members[z].end());
    for (auto& b : bins) {
      for (long t = 0; t < configs[b.config].alpha[z] && !supply.empty(); ++t) {
        b.large.push_back(supply.front());
        supply.pop_front();
      }
    }
    if (!supply.empty()) throw std::logic_error("large items left without a slot");
  }
  return bins;
}

namespace {

bool fits(const PackingInstance& inst, const IndexSet& items) {
  return items.empty() || packing_bin_load(inst, items) <= 1;
}

// Consecutive chunks of `per_bin` entries of `groups`, each chunk split by
// first fit when it does not fit as one bin.
std::vector<IndexSet> chunked(const PackingInstance& inst, const std::vector<IndexSet>& groups, std::size_t per_bin) {
  std::vector<IndexSet> out;
  for (std::size_t g = 0; g < groups.size(); g += per_bin) {
    IndexSet merged;
    for (std::size_t h = g; h < std::min(groups.size(), g + per_bin); ++h) {
      merged.insert(merged.end(), groups[h].begin(), groups[h].end());
    }
    canonical_order(inst.item_sizes, merged);
    if (fits(inst, merged)) {
      out.push_back(std::move(merged));
    } else {
      for (auto& b : first_fit(inst, merged)) out.push_back(std::move(b));
    }
  }
  return out;
}

// The fewer bins of the fixed-size chunking and first fit decreasing.
std::vector<IndexSet> pack_spill(const PackingInstance& inst, const std::vector<IndexSet>& groups, std::size_t per_bin) {
  std::vector<IndexSet> a = chunked(inst, groups, per_bin);
  IndexSet all;
  for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
  canonical_order(inst.item_sizes, all);
  std::vector<IndexSet> b = first_fit(inst, all);
  return b.size() < a.size() ? b : a;
}

}  // namespace

SmallAssignment assign_small_case2(const std::vector<DeltaBin>& bins, const IndexSet& small,
                                   const PackingInstance& inst, const Eps& eps) {
  SmallAssignment out;
  const std::size_t ns = small.size();
  const std::size_t nb = bins.size();
  std::vector<IndexSet> contents(nb);
  for (std::size_t b = 0; b < nb; ++b) contents[b] = bins[b].large;

  // Bins of one configuration share their budgets; the system is written per
  // block of such bins with the budgets scaled by the block size.
  std::vector<std::size_t> block_config;
  std::vector<std::vector<std::size_t>> block_bins;
  for (std::size_t b = 0; b < nb; ++b) {
    auto it = std::find(block_config.begin(), block_config.end(), bins[b].config);
    if (it == block_config.end()) {
      block_config.push_back(bins[b].config);
      block_bins.emplace_back();
      it = block_config.end() - 1;
    }
    block_bins[static_cast<std::size_t>(it - block_config.begin())].push_back(b);
  }
  const std::size_t nk = block_bins.size();

  IndexSet leftovers;
  if (ns > 0) {
    LPModel lp;
    std::vector<std::size_t> early_row(nk), count_row(nk), late_row(nk), item_row(ns);
    for (std::size_t c = 0; c < nk; ++c) {
      const DeltaBin& ref = bins[block_bins[c].front()];
      const long q = static_cast<long>(block_bins[c].size());
      early_row[c] = lp.add_row({}, Relation::kLessEqual, ref.early_room * q);
      count_row[c] = lp.add_row({}, Relation::kLessEqual, ref.early_slots * q);
      late_row[c] = lp.add_row({}, Relation::kLessEqual, ref.late_room * q);
    }
    for (std::size_t i = 0; i < ns; ++i) item_row[i] = lp.add_row({}, Relation::kEqual, 1);
    struct Var {
      std::size_t item, block;
      bool late;
    };
    std::vector<Var> vars;
    for (std::size_t i = 0; i < ns; ++i) {
      const Rational& s = inst.item_sizes[small[i]];
      const Rational ms = modified_size(s, inst.k, inst.U);
      for (std::size_t c = 0; c < nk; ++c) {
        const DeltaBin& ref = bins[block_bins[c].front()];
        if (ref.early_slots > 0 && (ref.early_room > 0 || s == 0)) {
          lp.add_column(0, {{item_row[i], 1}, {early_row[c], s}, {count_row[c], 1}});
          vars.push_back({i, c, false});
        }
        if (ref.late_room > 0) {
          lp.add_column(0, {{item_row[i], 1}, {late_row[c], ms}});
          vars.push_back({i, c, true});
        }
      }
    }
    out.lp_rows = lp.num_rows();
    LpResult res = basic_feasible(lp);
    std::vector<Rational> values;
    std::vector<char> uncovered(ns, 0);
    if (res.optimal()) {
      values = res.solution.values;
      out.lp_support = res.solution.positive_support();
    } else {
      // Aggregated budgets do not always split per configuration; let items go uncovered.
      LPModel slack = lp;
      std::vector<std::size_t> r(ns);
      for (std::size_t i = 0; i < ns; ++i) r[i] = slack.add_column(1, {{item_row[i], 1}});
      LpResult sres = solve_lp(slack);
      if (!sres.optimal()) throw std::logic_error("small-item system with slack must be feasible");
      values = sres.solution.values;
      out.lp_support = sres.solution.positive_support();
      for (std::size_t i = 0; i < ns; ++i) {
        if (values[r[i]] == 1) {
          uncovered[i] = 1;
          ++out.uncovered_items;
        }
      }
      values.resize(vars.size());
    }

    std::vector<IndexSet> early(nk), late(nk);
    std::vector<char> placed(ns, 0);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (values[v] != 1) continue;
      (vars[v].late ? late : early)[vars[v].block].push_back(small[vars[v].item]);
      placed[vars[v].item] = 1;
    }
    for (std::size_t i = 0; i < ns; ++i) {
      if (!placed[i]) {
        leftovers.push_back(small[i]);
        if (!uncovered[i]) ++out.fractional_items;
      }
    }

    // Deal each block's items round robin in non-increasing size. A bin then
    // exceeds its size budget by less than its first item, which goes back.
    auto deal = [&](std::size_t c, IndexSet& items, bool is_late) {
      canonical_order(inst.item_sizes, items);
      const auto& members = block_bins[c];
      const std::size_t q = members.size();
      for (std::size_t j = 0; j < q; ++j) {
        const DeltaBin& bin = bins[members[j]];
        IndexSet mine;
        Rational used = 0;
        for (std::size_t t = j; t < items.size(); t += q) {
          mine.push_back(items[t]);
          used += is_late ? modified_size(inst.item_sizes[items[t]], inst.k, inst.U) : inst.item_sizes[items[t]];
        }
        if (mine.empty()) continue;
        if (!is_late && static_cast<long>(mine.size()) > bin.early_slots) {
          throw std::logic_error("round robin broke an early count budget");
        }
        if (used > (is_late ? bin.late_room : bin.early_room)) {
          leftovers.push_back(mine.front());
          ++out.dealt_overflow;
          mine.erase(mine.begin());
        }
        contents[members[j]].insert(contents[members[j]].end(), mine.begin(), mine.end());
      }
    };
    for (std::size_t c = 0; c < nk; ++c) {
      deal(c, early[c], false);
      deal(c, late[c], true);
    }
  }

  // Repair overfull bins by shedding their smallest small items first.
  std::vector<char> is_small(inst.n(), 0);
  for (Index i : small) is_small[i] = 1;
  std::vector<IndexSet> shed_groups;
  for (auto& items : contents) {
    if (fits(inst, items)) continue;
    ++out.repaired_bins;
    IndexSet smalls;
    for (Index i : items) {
      if (is_small[i]) smalls.push_back(i);
    }
    canonical_order(inst.item_sizes, smalls);  // largest first; shed from the back
    IndexSet shed;
    while (!fits(inst, items)) {
      if (smalls.empty()) throw std::logic_error("repaired bin still overflows without small items");
      Index victim = smalls.back();
      smalls.pop_back();
      std::erase(items, victim);
      shed.push_back(victim);
    }
    shed_groups.push_back(std::move(shed));
  }

  const long inv = eps.inverse();
  std::vector<IndexSet> leftover_groups;
  canonical_order(inst.item_sizes, leftovers);
  for (Index i : leftovers) leftover_groups.push_back({i});
  const auto per_leftover_bin = static_cast<std::size_t>(std::max(1L, inv / 2));
  const auto per_shed_bin = static_cast<std::size_t>(std::max(1L, inv / 4));
  std::vector<IndexSet> left_bins = pack_spill(inst, leftover_groups, per_leftover_bin);
  std::vector<IndexSet> shed_bins = pack_spill(inst, shed_groups, per_shed_bin);
  out.leftover_bins = left_bins.size();
  out.shed_bins = shed_bins.size();

  for (auto& b : contents) {
    if (!b.empty()) out.packing.bins.push_back(std::move(b));
  }
  for (auto& b : left_bins) out.packing.bins.push_back(std::move(b));
  for (auto& b : shed_bins) out.packing.bins.push_back(std::move(b));
  canonicalize(inst, out.packing);
  return out;
}

bool late_bins_have_light_block(const PackingInstance& inst, const Packing& pack, const Eps& eps) {
  const auto early = static_cast<std::size_t>(inst.k * eps.inverse());
  for (const auto& items : pack.bins) {
    if (items.size() <= early) continue;
    if (inst.U > eps.value()) return false;
    IndexSet sorted = items;
    canonical_order(inst.item_sizes, sorted);
    // The k smallest early items are the last k of the first k/eps.
    Rational block = inst.U;
    for (std::size_t t = early - static_cast<std::size_t>(inst.k); t < early; ++t) block += inst.item_sizes[sorted[t]];
    if (block > eps.value()) return false;
  }
  return true;
}

Case2Result solve_case2(const PackingInstance& inst, const Eps& eps) {
  inst.validate();
  Case2Result result;
  ItemClassification cls = classify_items(inst, eps);
  GroupedItems g = linear_grouping(inst.item_sizes, cls.large, eps);
  result.class1_bins = g.class1.size();
  const long n = static_cast<long>(inst.n());

  std::vector<long> copies;
  std::vector<BinConfigII> configs;
  if (!g.sizes.empty() || !cls.small.empty()) {
    Case2Master master = build_master_case2(g, inst, cls.small, eps);
    PricingOracle oracle = [&](const std::vector<Rational>& duals) -> std::optional<Column> {
      Case2Duals d = split_duals(master, duals);
      auto priced = price_case2(d, g.sizes, inst.k, inst.U, eps, n);
      if (!priced) return std::nullopt;
      Column col{1, master.column(priced->config, g.sizes, inst.k, inst.U, eps)};
      master.config_vars.push_back(master.lp.num_variables());
      master.configs.push_back(priced->config);
      return col;
    };
    ColumnGenResult cg = column_generation(master.lp, oracle, eps);
    if (cg.status != ColumnGenStatus::kConverged) throw std::logic_error("case II column generation did not converge");
    result.lp_objective = cg.solution.objective;
    result.lp_rows = master.lp.num_rows();
    result.support = cg.solution.positive_support();
    result.iterations = cg.iterations;
    for (std::size_t c = 0; c < master.configs.size(); ++c) {
      const Rational& u = cg.solution.values[master.config_vars[c]];
      if (u > 0) ++result.config_support;
      copies.push_back(to_int64(ceil(u)));
      result.rounding_overhead += Rational(ceil(u)) - u;
    }
    configs = master.configs;
  }

  std::vector<DeltaBin> bins = assign_large_case2(copies, configs, g, inst, eps);
  result.delta_bins = bins.size();
  result.small = assign_small_case2(bins, cls.small, inst, eps);
  result.packing = result.small.packing;
  for (Index i : g.class1) result.packing.bins.push_back({i});
  canonicalize(inst, result.packing);
  if (!verify_packing(inst, result.packing).ok()) throw std::logic_error("case II packing is infeasible");
  if (!late_bins_have_light_block(inst, result.packing, eps)) {
    throw std::logic_error("a bin with late items lacks a light block of k early items");
  }
  return result;
}

}  // namespace unavail
