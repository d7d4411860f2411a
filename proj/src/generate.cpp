#include "unavail/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace unavail {

ProblemKind parse_problem_kind(const std::string& name) {
  if (name == "scheduling") return ProblemKind::kScheduling;
  if (name == "packing") return ProblemKind::kPacking;
  throw std::invalid_argument("unknown problem kind '" + name + "'");
}

Distribution parse_distribution(const std::string& name) {
  if (name == "uniform") return Distribution::kUniformGrid;
  if (name == "clustered") return Distribution::kClustered;
  if (name == "adversarial") return Distribution::kAdversarial;
  throw std::invalid_argument("unknown distribution '" + name + "'");
}

std::string to_string(ProblemKind kind) { return kind == ProblemKind::kScheduling ? "scheduling" : "packing"; }

std::string to_string(Distribution dist) {
  switch (dist) {
    case Distribution::kUniformGrid: return "uniform";
    case Distribution::kClustered: return "clustered";
    case Distribution::kAdversarial: return "adversarial";
  }
  return "uniform";
}

namespace {

// Integers in [lo, hi] from raw engine output, identical on every platform.
long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

std::vector<Rational> sizes_for(const GeneratorSpec& spec, std::mt19937_64& rng) {
  const long g = spec.grid;
  std::vector<Rational> sizes;
  sizes.reserve(spec.n);
  switch (spec.distribution) {
    case Distribution::kUniformGrid:
      for (std::size_t i = 0; i < spec.n; ++i) sizes.emplace_back(draw(rng, 1, g), g);
      break;
    case Distribution::kClustered: {
      const long centres = std::clamp<long>(static_cast<long>(spec.n), 1, 3);
      std::vector<long> c;
      for (long j = 0; j < centres; ++j) c.push_back(draw(rng, 1, g));
      for (std::size_t i = 0; i < spec.n; ++i) {
        long a = 4 * c[static_cast<std::size_t>(draw(rng, 0, centres - 1))] + draw(rng, -1, 1);
        a = std::clamp<long>(a, 1, 4 * g);
        sizes.emplace_back(a, 4 * g);
      }
      break;
    }
    case Distribution::kAdversarial: {
      long t = draw(rng, 1, 2);
      while (t > 0 && 1 - spec.U * t <= 0) --t;
      const long per = t * spec.k + 1;
      const Rational base = (1 - spec.U * t) / per;
      for (std::size_t i = 0; i < spec.n; ++i) {
        Rational s = base - base * Rational(draw(rng, 0, 3), 8 * g);
        s.canonicalize();
        sizes.push_back(s);
      }
      break;
    }
  }
  for (auto& s : sizes) s.canonicalize();
  return sizes;
}

}  // namespace

Instance generate_instance(const GeneratorSpec& spec) {
  if (spec.k < 1) throw std::invalid_argument("k must be positive");
  if (spec.grid < 1) throw std::invalid_argument("grid must be positive");
  std::mt19937_64 rng(spec.seed);
  if (spec.kind == ProblemKind::kScheduling) {
    if (spec.U < 0) throw std::invalid_argument("U must be nonnegative");
    SchedulingInstance inst{sizes_for(spec, rng), spec.m, spec.k, spec.U};
    inst.validate();
    return inst;
  }
  if (spec.U <= 0 || spec.U > 1) throw std::invalid_argument("U must lie in (0,1]");
  PackingInstance inst{sizes_for(spec, rng), spec.k, spec.U};
  inst.validate();
  return inst;
}

}  // namespace unavail
