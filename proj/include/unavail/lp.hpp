#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "unavail/rational.hpp"

namespace unavail {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Sense { kMinimize, kMaximize };

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

struct LPRow {
  SparseVector coeffs;  // (variable, coefficient)
  Relation relation = Relation::kLessEqual;
  Rational rhs = 0;
};

// All variables are nonnegative. Rows and variables keep the index they were
// created with.
class LPModel {
 public:
  explicit LPModel(Sense sense = Sense::kMinimize) : sense_(sense) {}

  std::size_t add_variable(const Rational& cost = 0);
  std::size_t add_row(SparseVector coeffs, Relation relation, const Rational& rhs);
  // Appends a variable with the given entries per row.
  std::size_t add_column(const Rational& cost, const SparseVector& entries_by_row);

  Sense sense() const { return sense_; }
  std::size_t num_variables() const { return costs_.size(); }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<Rational>& costs() const { return costs_; }
  const std::vector<LPRow>& rows() const { return rows_; }

  // Activity of a row at a point.
  Rational activity(std::size_t row, const std::vector<Rational>& values) const;
  bool satisfied(const std::vector<Rational>& values) const;

 private:
  Sense sense_;
  std::vector<Rational> costs_;
  std::vector<LPRow> rows_;
};

struct BasicSolution {
  std::vector<Rational> values;  // one per variable
  std::vector<std::size_t> basis;  // basic structural variables
  Rational objective = 0;
  // Row prices y with reduced cost c_j - y.A_j, nonnegative for every column
  // at a minimisation optimum (nonpositive at a maximisation optimum).
  std::vector<Rational> duals;

  std::size_t positive_support() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  BasicSolution solution;
  std::size_t pivots = 0;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

// Two-phase tableau simplex in exact arithmetic. Pivots by steepest reduced
// cost and falls back to Bland's rule during degenerate stretches, so it
// always terminates.
LpResult solve_lp(const LPModel& model);

// Phase one only: any basic feasible point, objective ignored.
LpResult basic_feasible(const LPModel& model);

// Reduced cost of a column against row prices.
Rational reduced_cost(const Rational& cost, const SparseVector& entries_by_row,
                      const std::vector<Rational>& duals);

struct Column {
  Rational cost = 1;
  SparseVector entries;  // (row, coefficient)
};

// Given the current row prices, returns a column whose reduced cost is
// negative, or nullopt when none improves by more than the oracle's factor.
using PricingOracle = std::function<std::optional<Column>(const std::vector<Rational>&)>;

enum class ColumnGenStatus { kConverged, kInfeasible, kIterationLimit };

struct ColumnGenResult {
  ColumnGenStatus status = ColumnGenStatus::kInfeasible;
  BasicSolution solution;
  std::size_t iterations = 0;
  std::size_t columns_added = 0;
  // objective / (1 + eps): a lower bound on the full LP when the oracle's
  // certificate is (1+eps)-approximate.
  Rational lower_bound = 0;
};

// Restricted-master loop for a minimisation master. Every returned column is
// re-checked for a strictly negative reduced cost and appended to `master`.
// Throws std::logic_error if the oracle returns a non-improving column.
ColumnGenResult column_generation(LPModel& master, const PricingOracle& oracle,
                                  const Eps& eps, std::size_t max_iterations = 5000);

}  // namespace unavail
