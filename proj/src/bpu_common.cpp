#include "unavail/bpu_common.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace unavail {

BpuCase choose_case(long k, const Rational& U, const Eps& eps) {
  const long inv = eps.inverse();
  return kmax(k, U) <= inv * inv ? BpuCase::kCaseI : BpuCase::kCaseII;
}

ItemClassification classify_items(const PackingInstance& inst, const Eps& eps) {
  ItemClassification out;
  for (Index i = 0; i < inst.n(); ++i) {
    (inst.item_sizes[i] < eps.value() ? out.small : out.large).push_back(i);
  }
  return out;
}

std::size_t GroupedItems::size_index(const Rational& z) const {
  auto it = std::find(sizes.begin(), sizes.end(), z);
  if (it == sizes.end()) throw std::out_of_range("size not in the grouped instance");
  return static_cast<std::size_t>(it - sizes.begin());
}

GroupedItems linear_grouping(std::span<const Rational> sizes, const IndexSet& items, const Eps& eps) {
  GroupedItems g;
  const long inv = eps.inverse();
  const std::size_t classes = static_cast<std::size_t>(inv * inv * inv);
  IndexSet sorted = items;
  canonical_order(sizes, sorted);

  const std::size_t n = sorted.size();
  const std::size_t q = n / classes;
  const std::size_t r = n % classes;
  g.classes.assign(classes, {});
  g.rounded.assign(sizes.begin(), sizes.end());
  std::size_t pos = 0;
  for (std::size_t c = 0; c < classes; ++c) {
    const std::size_t len = q + (c < r ? 1 : 0);
    g.classes[c].assign(sorted.begin() + static_cast<long>(pos), sorted.begin() + static_cast<long>(pos + len));
    pos += len;
  }
  g.class1 = g.classes[0];
  for (std::size_t c = 1; c < classes; ++c) {
    const auto& cls = g.classes[c];
    if (cls.empty()) continue;
    const Rational top = sizes[cls.front()];
    for (Index i : cls) g.rounded[i] = top;
    if (g.sizes.empty() || g.sizes.back() != top) {
      g.sizes.push_back(top);
      g.counts.push_back(0);
      g.members.emplace_back();
    }
    g.counts.back() += static_cast<long>(cls.size());
    g.members.back().insert(g.members.back().end(), cls.begin(), cls.end());
  }
  return g;
}

long max_copies(const Rational& z, long k, const Rational& U, long cap) {
  long t = 1;
  while (t < cap && z * (t + 1) + U * (t / k) <= 1) ++t;
  return t;
}

std::vector<IndexSet> first_fit(const PackingInstance& inst, const IndexSet& items) {
  std::vector<IndexSet> bins;
  std::vector<Rational> load;
  for (Index i : items) {
    const Rational& s = inst.item_sizes[i];
    std::size_t b = 0;
    for (; b < bins.size(); ++b) {
      Rational extra = bins[b].size() % static_cast<std::size_t>(inst.k) == 0 ? s + inst.U : s;
      if (load[b] + extra <= 1) {
        load[b] += extra;
        break;
      }
    }
    if (b == bins.size()) {
      bins.emplace_back();
      load.push_back(s);
    }
    bins[b].push_back(i);
  }
  return bins;
}

Packing first_fit_decreasing(const PackingInstance& inst) {
  IndexSet order(inst.n());
  std::iota(order.begin(), order.end(), 0);
  canonical_order(inst.item_sizes, order);
  Packing p{first_fit(inst, order)};
  canonicalize(inst, p);
  return p;
}

}  // namespace unavail
