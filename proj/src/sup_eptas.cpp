#include "unavail/sup_eptas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace unavail {

SchedulingInstance RoundedInstance::rounded() const {
  SchedulingInstance r = original;
  r.job_sizes = rounded_sizes;
  return r;
}

long ceil_log(const Rational& value, const Rational& base) {
  if (value <= 0) throw std::invalid_argument("ceil_log needs a positive value");
  if (base <= 1) throw std::invalid_argument("ceil_log needs base > 1");
  // Floating-point guess, then exact correction.
  double guess = std::ceil(std::log(to_double(value)) / std::log(to_double(base)));
  long e = std::isfinite(guess) ? static_cast<long>(guess) : 0;
  while (pow(base, e) < value) ++e;
  while (pow(base, e - 1) >= value) --e;
  return e;
}

RoundedInstance round_sizes(const SchedulingInstance& inst, const Eps& eps) {
  inst.validate();
  RoundedInstance r{inst, {}, eps};
  r.rounded_sizes.reserve(inst.n());
  const Rational base = eps.one_plus();
  for (const auto& p : inst.job_sizes) {
    r.rounded_sizes.push_back(p == 0 ? Rational(0) : pow(base, ceil_log(p, base)));
  }
  return r;
}

MakespanBounds makespan_bounds(const RoundedInstance& inst) {
  const auto& sizes = inst.rounded_sizes;
  const auto& orig = inst.original;
  MakespanBounds b{0, 0};
  Rational total = 0;
  for (const auto& p : sizes) {
    total += p;
    b.lower = std::max(b.lower, p);
  }
  b.lower = std::max(b.lower, Rational(total / orig.m));
  if (sizes.size() > static_cast<std::size_t>(orig.m * orig.k)) b.lower = std::max(b.lower, orig.U);
  b.upper = total + orig.U * idle_periods(sizes.size(), orig.k);
  return b;
}

Rational reformulated_makespan(const RoundedInstance& inst, const Schedule& sched) {
  Rational best = 0;
  for (const auto& jobs : sched.machine_sets) {
    IndexSet sorted = jobs;
    canonical_order(inst.rounded_sizes, sorted);
    auto sizes = gather(inst.rounded_sizes, sorted);
    best = std::max(best, reformulated_load(sizes, inst.original.k, inst.original.U, inst.eps));
  }
  return best;
}

Schedule reference_schedule(const RoundedInstance& inst) {
  const auto m = static_cast<std::size_t>(inst.original.m);
  IndexSet order(inst.rounded_sizes.size());
  std::iota(order.begin(), order.end(), 0);
  canonical_order(inst.rounded_sizes, order);

  Schedule round_robin;
  round_robin.machine_sets.assign(m, {});
  for (std::size_t t = 0; t < order.size(); ++t) round_robin.machine_sets[t % m].push_back(order[t]);
  if (order.size() <= m * static_cast<std::size_t>(inst.original.k)) return round_robin;

  Schedule single;
  single.machine_sets.assign(m, {});
  single.machine_sets[0] = order;
  if (reformulated_makespan(inst, single) < reformulated_makespan(inst, round_robin)) return single;
  return round_robin;
}

std::vector<Rational> candidate_grid(const RoundedInstance& inst) {
  MakespanBounds b = makespan_bounds(inst);
  std::vector<Rational> grid;
  if (b.lower == 0) return grid;
  const Rational base = inst.eps.one_plus();
  Rational top = std::max(b.upper, reformulated_makespan(inst, reference_schedule(inst)));
  const long lo = ceil_log(b.lower, base);
  const long hi = std::max(lo, ceil_log(top, base));
  for (long e = lo; e <= hi; ++e) grid.push_back(pow(base, e));
  return grid;
}

SearchResult binary_search(const std::vector<Rational>& candidates, const Probe& probe) {
  SearchResult result;
  if (candidates.empty()) return result;
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  std::optional<Schedule> at_hi;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    ++result.probes;
    if (auto s = probe(candidates[mid])) {
      hi = mid;
      at_hi = std::move(s);
    } else {
      lo = mid + 1;
    }
  }
  if (!at_hi) {
    ++result.probes;
    at_hi = probe(candidates[hi]);
    if (!at_hi) return result;
  }
  result.found = true;
  result.T = candidates[hi];
  result.schedule = std::move(*at_hi);
  return result;
}

JobClassification classify_jobs(const RoundedInstance& inst, const Rational& T) {
  JobClassification cls;
  cls.T = T;
  const Rational threshold = inst.eps.value() * T;
  const auto& sizes = inst.rounded_sizes;
  IndexSet order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  canonical_order(sizes, order);
  for (Index j : order) {
    if (sizes[j] > T) {
      throw ProbeInfeasible("job " + std::to_string(j) + " of size " + to_string(sizes[j]) +
                            " exceeds T = " + to_string(T));
    }
    if (sizes[j] < threshold) {
      cls.small.push_back(j);
      continue;
    }
    cls.large.push_back(j);
    if (cls.large_sizes.empty() || cls.large_sizes.back() != sizes[j]) {
      cls.large_sizes.push_back(sizes[j]);
      cls.large_counts.push_back(0);
    }
    ++cls.large_counts.back();
  }
  std::sort(cls.small.begin(), cls.small.end());
  std::sort(cls.large.begin(), cls.large.end());
  return cls;
}

Rational reformulated_load(std::span<const Rational> sizes, long k, const Rational& U, const Eps& eps) {
  if (sizes.empty()) return 0;
  const auto early = static_cast<std::size_t>(k * eps.inverse());
  if (sizes.size() <= early) return schedule_load(sizes, k, U);
  Rational total = 0;
  for (const auto& p : sizes) total += p;
  Rational late = static_cast<long>(sizes.size() - early);
  return total + late * U / k + U * eps.inverse();
}

long Configuration::large_count() const { return std::accumulate(alpha.begin(), alpha.end(), 0L); }

Rational configuration_load(const Configuration& c, std::span<const Rational> large_sizes,
                            const Rational& T, const Eps& eps, const Rational& U) {
  Rational load = 0;
  for (std::size_t l = 0; l < c.alpha.size(); ++l) load += large_sizes[l] * c.alpha[l];
  const Rational unit = eps.value() * T;
  load += unit * c.beta;
  load += unit * (c.gamma_prime * c.gamma);
  load += U * (c.delta - 1 + c.gamma_prime);
  return load;
}

std::vector<Configuration> enumerate_configurations(const JobClassification& cls, const Rational& T,
                                                    const Eps& eps, const Rational& U) {
  const long inv = eps.inverse();
  const std::size_t h = cls.large_sizes.size();
  const Rational unit = eps.value() * T;
  std::vector<Configuration> out;

  std::vector<long> alpha(h, 0);
  for (;;) {
    Rational large = 0;
    for (std::size_t l = 0; l < h; ++l) large += cls.large_sizes[l] * alpha[l];
    if (large <= T) {
      for (long beta = 0; beta <= inv; ++beta) {
        Rational with_beta = large + unit * beta;
        if (with_beta > T) break;
        for (int gp = 0; gp <= 1; ++gp) {
          for (long gamma = 0; gamma <= (gp ? inv : 0); ++gamma) {
            Rational base = with_beta + unit * (gp * gamma);
            for (long delta = 1; delta <= inv + 1; ++delta) {
              if (base + U * (delta - 1 + gp) > T) break;
              out.push_back({alpha, beta, gamma, gp, delta});
            }
          }
        }
      }
    }
    // Odometer over alpha with the last size fastest.
    std::size_t pos = h;
    while (pos > 0) {
      --pos;
      if (alpha[pos] < inv) {
        ++alpha[pos];
        break;
      }
      alpha[pos] = 0;
      if (pos == 0) return out;
    }
    if (h == 0) return out;
  }
}

}  // namespace unavail
