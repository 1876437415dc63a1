#pragma once

#include <optional>
#include <vector>

#include "cutsig/rational.hpp"

namespace cutsig {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Outcome of an exact LP solve in standard equality form
///   min c^T x  subject to  A x = b,  x >= 0.
///
/// Optimal carries a basic optimal solution (at most rows(A) nonzeros).
/// Infeasible carries a Farkas row functional y with y^T A <= 0 and
/// y^T b > 0, which certifies emptiness of the feasible region.
template <typename Scalar>
struct LpSolution {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  LpStatus status;
  Vector x;
  Scalar objective{};
  Vector farkas;
};

/**
 * Dense two-phase primal simplex over an exact ordered field.
 *
 * Pricing follows Dantzig's most-negative-reduced-cost rule (ties broken
 * toward the lowest column index) while the objective is strictly moving.
 * Degeneracy is policed by Bland's anti-cycling rule: after rows(A)
 * consecutive pivots without objective change the entering rule drops to
 * smallest index and stays there until the objective moves again. Bases
 * are finite, so a non-terminating run would eventually pivot
 * degenerately forever, trip the switch, and continue as pure Bland
 * pivoting, which cannot cycle; termination is therefore guaranteed. The
 * ratio test always breaks ties by the lowest basic variable index, as
 * Bland's rule requires. No step depends on anything but the tableau
 * state, so the entire pivot sequence is deterministic — identical
 * inputs produce identical bases, solutions and certificates.
 *
 * Phase I minimizes the sum of one artificial variable per row (rows with
 * negative right-hand side are negated first). A positive Phase-I optimum
 * proves infeasibility, and the Phase-I duals, read off the reduced costs
 * of the artificial columns, provide the Farkas functional. At a zero
 * optimum any artificial still basic is pivoted out degenerately; rows
 * that admit no such pivot are redundant and dropped before Phase II.
 *
 * The tableau is dense. Column counts here grow exponentially in the
 * ground-set size, so callers bound their instance sizes rather than rely
 * on sparsity.
 */
template <typename Scalar>
class SimplexSolver {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  LpSolution<Scalar> solve(const Matrix& A, const Vector& b, const Vector& c) {
    rows_ = A.rows();
    structural_ = A.cols();
    cols_ = structural_ + rows_;  // artificials appended

    tableau_.resize(rows_, cols_ + 1);
    tableau_.setZero();
    tableau_.leftCols(structural_) = A;
    sign_.assign(rows_, 1);
    for (Index r = 0; r < rows_; ++r) {
      if (sgn(b[r]) < 0) {
        sign_[r] = -1;
        tableau_.row(r).head(structural_) = -tableau_.row(r).head(structural_);
        tableau_(r, cols_) = -b[r];
      } else {
        tableau_(r, cols_) = b[r];
      }
      tableau_(r, structural_ + r) = Scalar(1);
    }
    basis_.resize(rows_);
    for (Index r = 0; r < rows_; ++r) basis_[r] = structural_ + r;
    row_active_.assign(rows_, true);

    // Phase I: reduced costs under unit costs on the artificial basis.
    reduced_.resize(cols_);
    objective_ = Scalar(0);
    for (Index j = 0; j < cols_; ++j) {
      Scalar sum(0);
      for (Index r = 0; r < rows_; ++r) sum += tableau_(r, j);
      reduced_[j] = (j < structural_ ? Scalar(0) : Scalar(1)) - sum;
    }
    for (Index r = 0; r < rows_; ++r) objective_ += tableau_(r, cols_);

    iterate(cols_);

    LpSolution<Scalar> solution;
    if (sgn(objective_) > 0) {
      solution.status = LpStatus::Infeasible;
      solution.farkas.resize(rows_);
      for (Index r = 0; r < rows_; ++r) {
        // Dual value of row r; undo the row negation applied to b < 0.
        Scalar y = Scalar(1) - reduced_[structural_ + r];
        solution.farkas[r] = sign_[r] < 0 ? Scalar(-y) : y;
      }
      return solution;
    }

    expel_artificials();

    // Phase II: reduced costs under the real objective.
    for (Index j = 0; j < structural_; ++j) {
      Scalar z = c[j];
      for (Index r = 0; r < rows_; ++r) {
        if (!row_active_[r]) continue;
        if (basis_[r] < structural_ && sgn(c[basis_[r]]) != 0 && sgn(tableau_(r, j)) != 0) {
          z -= c[basis_[r]] * tableau_(r, j);
        }
      }
      reduced_[j] = z;
    }
    objective_ = Scalar(0);
    for (Index r = 0; r < rows_; ++r) {
      if (row_active_[r] && basis_[r] < structural_) {
        objective_ += c[basis_[r]] * tableau_(r, cols_);
      }
    }

    if (!iterate(structural_)) {
      solution.status = LpStatus::Unbounded;
      return solution;
    }

    solution.status = LpStatus::Optimal;
    solution.x = Vector::Zero(structural_);
    for (Index r = 0; r < rows_; ++r) {
      if (row_active_[r] && basis_[r] < structural_) {
        solution.x[basis_[r]] = tableau_(r, cols_);
      }
    }
    solution.objective = objective_;
    return solution;
  }

 private:
  /// Pivots until optimality over columns [0, column_limit).
  /// Returns false when an entering column proves the LP unbounded.
  /// Dantzig pricing with the Bland fallback described on the class.
  bool iterate(Index column_limit) {
    Index stall = 0;
    bool bland = false;
    Scalar last_objective = objective_;
    for (;;) {
      Index entering = -1;
      if (bland) {
        for (Index j = 0; j < column_limit; ++j) {
          if (sgn(reduced_[j]) < 0) {
            entering = j;
            break;
          }
        }
      } else {
        for (Index j = 0; j < column_limit; ++j) {
          if (sgn(reduced_[j]) < 0 &&
              (entering < 0 || reduced_[j] < reduced_[entering])) {
            entering = j;
          }
        }
      }
      if (entering < 0) return true;

      Index leaving = -1;
      Scalar best_ratio;
      for (Index r = 0; r < rows_; ++r) {
        if (!row_active_[r] || sgn(tableau_(r, entering)) <= 0) continue;
        Scalar ratio = tableau_(r, cols_) / tableau_(r, entering);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);

      if (objective_ == last_objective) {
        if (++stall >= rows_) bland = true;
      } else {
        last_objective = objective_;
        stall = 0;
        bland = false;
      }
    }
  }

  void pivot(Index row, Index col) {
    const Scalar inverse = Scalar(1) / tableau_(row, col);
    for (Index k = 0; k <= cols_; ++k) {
      if (sgn(tableau_(row, k)) != 0) tableau_(row, k) *= inverse;
    }
    for (Index r = 0; r < rows_; ++r) {
      if (r == row || !row_active_[r]) continue;
      eliminate(tableau_.row(r), row, col);
    }
    const Scalar factor = reduced_[col];
    if (sgn(factor) != 0) {
      for (Index k = 0; k < cols_; ++k) {
        if (sgn(tableau_(row, k)) != 0) reduced_[k] -= factor * tableau_(row, k);
      }
      // The objective moves by z_col * theta, theta being the freshly
      // scaled right-hand side of the pivot row.
      objective_ += factor * tableau_(row, cols_);
    }
    basis_[row] = col;
  }

  template <typename Row>
  void eliminate(Row target, Index pivot_row, Index pivot_col) {
    const Scalar factor = target[pivot_col];
    if (sgn(factor) == 0) return;
    for (Index k = 0; k <= cols_; ++k) {
      if (sgn(tableau_(pivot_row, k)) != 0) target[k] -= factor * tableau_(pivot_row, k);
    }
  }

  /// After a zero Phase-I optimum, removes artificials from the basis.
  /// Each such row carries value 0, so the swap pivots are degenerate; a
  /// row with no structural pivot candidate is a redundant constraint.
  void expel_artificials() {
    for (Index r = 0; r < rows_; ++r) {
      if (basis_[r] < structural_) continue;
      Index col = -1;
      for (Index j = 0; j < structural_; ++j) {
        if (sgn(tableau_(r, j)) != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(r, col);
      } else {
        row_active_[r] = false;
      }
    }
  }

  Index rows_ = 0;
  Index structural_ = 0;
  Index cols_ = 0;
  Matrix tableau_;        // rows x (cols + 1), right-hand side last
  Vector reduced_;        // reduced cost per column
  Scalar objective_{};    // objective value of the current basis
  std::vector<Index> basis_;
  std::vector<bool> row_active_;
  std::vector<int> sign_;  // row negations applied to make b >= 0
};

/// Convenience front end for min c^T x s.t. A x = b, x >= 0.
template <typename Scalar>
LpSolution<Scalar> solve_equality_lp(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& A,
                                     const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b,
                                     const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c) {
  if (A.rows() != b.size() || A.cols() != c.size()) {
    throw std::invalid_argument("LP dimension mismatch");
  }
  SimplexSolver<Scalar> solver;
  return solver.solve(A, b, c);
}

enum class RowRelation { Eq, Le, Ge };

/// Row-form problem: optimize c^T x subject to A x (=|<=|>=) b, x >= 0.
/// Slack and surplus columns are appended internally; solutions report the
/// structural part only.
template <typename Scalar>
struct RowFormLp {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> A;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> b;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> c;
  std::vector<RowRelation> relations;
  bool maximize = false;
};

template <typename Scalar>
LpSolution<Scalar> solve_row_form(const RowFormLp<Scalar>& lp) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Index rows = lp.A.rows();
  const Index structural = lp.A.cols();
  if (lp.b.size() != rows || static_cast<Index>(lp.relations.size()) != rows ||
      lp.c.size() != structural) {
    throw std::invalid_argument("LP dimension mismatch");
  }
  Index extra = 0;
  for (RowRelation rel : lp.relations) {
    if (rel != RowRelation::Eq) ++extra;
  }
  Matrix A = Matrix::Zero(rows, structural + extra);
  A.leftCols(structural) = lp.A;
  Index next = structural;
  for (Index r = 0; r < rows; ++r) {
    if (lp.relations[r] == RowRelation::Le) {
      A(r, next++) = Scalar(1);
    } else if (lp.relations[r] == RowRelation::Ge) {
      A(r, next++) = Scalar(-1);
    }
  }
  Vector c = Vector::Zero(structural + extra);
  for (Index j = 0; j < structural; ++j) {
    c[j] = lp.maximize ? Scalar(-lp.c[j]) : lp.c[j];
  }
  LpSolution<Scalar> solution = solve_equality_lp<Scalar>(A, lp.b, c);
  if (solution.status == LpStatus::Optimal) {
    solution.x.conservativeResize(structural);
    if (lp.maximize) solution.objective = -solution.objective;
  }
  return solution;
}

}  // namespace cutsig
