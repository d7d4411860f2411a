#include "unavail/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace unavail {

std::size_t LPModel::add_variable(const Rational& cost) {
  costs_.push_back(cost);
  return costs_.size() - 1;
}

std::size_t LPModel::add_row(SparseVector coeffs, Relation relation, const Rational& rhs) {
  for (const auto& [var, coeff] : coeffs) {
    if (var >= costs_.size()) throw std::out_of_range("row references unknown variable");
  }
  rows_.push_back({std::move(coeffs), relation, rhs});
  return rows_.size() - 1;
}

std::size_t LPModel::add_column(const Rational& cost, const SparseVector& entries_by_row) {
  for (const auto& [row, coeff] : entries_by_row) {
    if (row >= rows_.size()) throw std::out_of_range("column references unknown row");
  }
  std::size_t var = add_variable(cost);
  for (const auto& [row, coeff] : entries_by_row) {
    if (coeff != 0) rows_[row].coeffs.emplace_back(var, coeff);
  }
  return var;
}

Rational LPModel::activity(std::size_t row, const std::vector<Rational>& values) const {
  Rational total = 0;
  for (const auto& [var, coeff] : rows_[row].coeffs) total += coeff * values[var];
  return total;
}

bool LPModel::satisfied(const std::vector<Rational>& values) const {
  if (values.size() != costs_.size()) return false;
  for (const auto& v : values) {
    if (v < 0) return false;
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational a = activity(i, values);
    switch (rows_[i].relation) {
      case Relation::kLessEqual:
        if (a > rows_[i].rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (a < rows_[i].rhs) return false;
        break;
      case Relation::kEqual:
        if (a != rows_[i].rhs) return false;
        break;
    }
  }
  return true;
}

std::size_t BasicSolution::positive_support() const {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](const Rational& v) { return v > 0; }));
}

Rational reduced_cost(const Rational& cost, const SparseVector& entries_by_row,
                      const std::vector<Rational>& duals) {
  Rational rc = cost;
  for (const auto& [row, coeff] : entries_by_row) rc -= duals.at(row) * coeff;
  return rc;
}

namespace {

// Dense tableau over structural, slack/surplus and artificial columns. The
// last entry of every row is the right-hand side; row `m` holds reduced
// costs with the negated objective in its last entry.
class Tableau {
 public:
  explicit Tableau(const LPModel& model) : model_(model) {
    const std::size_t m = model.num_rows();
    n_ = model.num_variables();
    sign_.assign(m, 1);
    std::vector<Relation> rel(m);
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = model.rows()[i];
      rel[i] = row.relation;
      if (row.rhs < 0) {
        sign_[i] = -1;
        if (rel[i] == Relation::kLessEqual) {
          rel[i] = Relation::kGreaterEqual;
        } else if (rel[i] == Relation::kGreaterEqual) {
          rel[i] = Relation::kLessEqual;
        }
      }
      if (rel[i] != Relation::kEqual) ++slacks;
      if (rel[i] != Relation::kLessEqual) ++artificials;
    }
    first_artificial_ = n_ + slacks;
    cols_ = first_artificial_ + artificials;
    rhs_ = cols_;
    rows_.assign(m + 1, std::vector<Rational>(cols_ + 1));
    basis_.assign(m, 0);
    init_col_.assign(m, 0);

    std::size_t next_slack = n_;
    std::size_t next_art = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = model.rows()[i];
      for (const auto& [var, coeff] : row.coeffs) rows_[i][var] += sign_[i] * coeff;
      rows_[i][rhs_] = sign_[i] * row.rhs;
      if (rel[i] == Relation::kLessEqual) {
        rows_[i][next_slack] = 1;
        basis_[i] = init_col_[i] = next_slack++;
      } else {
        if (rel[i] == Relation::kGreaterEqual) rows_[i][next_slack++] = -1;
        rows_[i][next_art] = 1;
        basis_[i] = init_col_[i] = next_art++;
      }
    }
  }

  std::size_t pivots() const { return pivots_; }

  // Returns false if the model is infeasible.
  bool phase_one() {
    if (first_artificial_ == cols_) return true;
    const std::size_t m = basis_.size();
    auto& obj = rows_[m];
    std::fill(obj.begin(), obj.end(), Rational(0));
    for (std::size_t j = first_artificial_; j < cols_; ++j) obj[j] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (rows_[i][j] != 0) obj[j] -= rows_[i][j];
      }
    }
    if (!iterate(cols_)) throw std::logic_error("phase one cannot be unbounded");
    if (obj[rhs_] != 0) return false;
    // Drive zero-valued artificials out of the basis where possible; a row
    // with no structural or slack entry left is redundant and keeps its
    // artificial at zero forever.
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
    return true;
  }

  // Returns false if unbounded.
  bool phase_two() {
    const std::size_t m = basis_.size();
    auto& obj = rows_[m];
    std::fill(obj.begin(), obj.end(), Rational(0));
    const bool maximize = model_.sense() == Sense::kMaximize;
    for (std::size_t j = 0; j < n_; ++j) obj[j] = maximize ? -model_.costs()[j] : model_.costs()[j];
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t b = basis_[i];
      if (b >= n_ || obj[b] == 0) continue;
      Rational cb = obj[b];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (rows_[i][j] != 0) obj[j] -= cb * rows_[i][j];
      }
    }
    return iterate(first_artificial_);
  }

  BasicSolution extract(bool with_duals) const {
    const std::size_t m = basis_.size();
    BasicSolution sol;
    sol.values.assign(n_, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] < n_) {
        sol.values[basis_[i]] = rows_[i][rhs_];
        sol.basis.push_back(basis_[i]);
      }
    }
    std::sort(sol.basis.begin(), sol.basis.end());
    for (std::size_t j = 0; j < n_; ++j) sol.objective += model_.costs()[j] * sol.values[j];
    if (with_duals) {
      const bool maximize = model_.sense() == Sense::kMaximize;
      sol.duals.assign(m, 0);
      for (std::size_t i = 0; i < m; ++i) {
        Rational y = -rows_[m][init_col_[i]];
        y *= sign_[i];
        sol.duals[i] = maximize ? Rational(-y) : y;
      }
    }
    return sol;
  }

 private:
  static constexpr std::size_t kDegenerateRun = 50;

  // Simplex iterations on columns [0, allowed). False on unboundedness.
  bool iterate(std::size_t allowed) {
    const std::size_t m = basis_.size();
    const auto& obj = rows_[m];
    std::size_t degenerate = 0;
    for (;;) {
      const bool bland = degenerate >= kDegenerateRun;
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (obj[j] >= 0) continue;
        if (enter == allowed || (!bland && obj[j] < obj[enter])) enter = j;
        if (bland) break;
      }
      if (enter == allowed) return true;

      std::size_t leave = m;
      Rational best_ratio;
      for (std::size_t i = 0; i < m; ++i) {
        const Rational& a = rows_[i][enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i][rhs_] / a;
        if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m) return false;
      degenerate = best_ratio == 0 ? degenerate + 1 : 0;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    auto& prow = rows_[r];
    Rational inv = 1 / prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (prow[j] == 0) continue;
      prow[j] *= inv;
      nz.push_back(j);
    }
    Rational f;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      f = rows_[i][c];
      auto& row = rows_[i];
      for (std::size_t j : nz) row[j] -= f * prow[j];
    }
    basis_[r] = c;
  }

  const LPModel& model_;
  std::size_t n_ = 0;
  std::size_t first_artificial_ = 0;
  std::size_t cols_ = 0;
  std::size_t rhs_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> init_col_;
  std::vector<int> sign_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpResult solve_lp(const LPModel& model) {
  Tableau t(model);
  LpResult result;
  if (!t.phase_one()) {
    result.status = LpStatus::kInfeasible;
  } else if (!t.phase_two()) {
    result.status = LpStatus::kUnbounded;
  } else {
    result.status = LpStatus::kOptimal;
    result.solution = t.extract(true);
  }
  result.pivots = t.pivots();
  return result;
}

LpResult basic_feasible(const LPModel& model) {
  Tableau t(model);
  LpResult result;
  if (t.phase_one()) {
    result.status = LpStatus::kOptimal;
    result.solution = t.extract(false);
  }
  result.pivots = t.pivots();
  return result;
}

ColumnGenResult column_generation(LPModel& master, const PricingOracle& oracle, const Eps& eps,
                                  std::size_t max_iterations) {
  if (master.sense() != Sense::kMinimize) {
    throw std::invalid_argument("column generation expects a minimisation master");
  }
  ColumnGenResult result;
  result.status = ColumnGenStatus::kIterationLimit;
  for (result.iterations = 0; result.iterations < max_iterations; ++result.iterations) {
    LpResult lp = solve_lp(master);
    if (lp.status == LpStatus::kInfeasible) {
      result.status = ColumnGenStatus::kInfeasible;
      return result;
    }
    if (lp.status == LpStatus::kUnbounded) throw std::logic_error("restricted master is unbounded");
    result.solution = std::move(lp.solution);
    std::optional<Column> column = oracle(result.solution.duals);
    if (!column) {
      result.status = ColumnGenStatus::kConverged;
      result.lower_bound = result.solution.objective / eps.one_plus();
      return result;
    }
    if (reduced_cost(column->cost, column->entries, result.solution.duals) >= 0) {
      throw std::logic_error("pricing oracle returned a column with nonnegative reduced cost");
    }
    master.add_column(column->cost, column->entries);
    ++result.columns_added;
  }
  return result;
}

}  // namespace unavail
