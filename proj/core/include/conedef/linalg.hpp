#pragma once

#include "conedef/rational.hpp"

#include <optional>
#include <vector>

namespace conedef {

using QVec = std::vector<Rat>;

/// Dense exact rational matrix.  Desk-scale dimensions only; every
/// operation is exact and deterministic (pivots chosen in fixed order).
class QMat {
public:
  QMat() = default;
  QMat(int rows, int cols) : rows_(rows), cols_(cols),
      m_(rows, QVec(cols, Rat(0))) {}

  static QMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return m_[i][j]; }
  const Rat& at(int i, int j) const { return m_[i][j]; }
  const QVec& row(int i) const { return m_[i]; }

  QMat operator*(const QMat& o) const;
  QVec apply(const QVec& v) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat scaled(const Rat& s) const;
  bool operator==(const QMat& o) const;
  bool is_zero() const;

  QMat transposed() const;

  /// Column-appends.
  static QMat hcat(const QMat& a, const QMat& b);
  static QMat from_columns(const std::vector<QVec>& cols, int rows);
  QVec column(int j) const;

  int rank() const;

  /// Reduced row echelon form (deterministic; leftmost pivots).
  QMat rref() const;

  /// Basis of the kernel {x : Mx = 0}, deterministic order.
  std::vector<QVec> kernel() const;

  /// Basis of the column space, reduced deterministically (columns of the
  /// RREF of the transpose, transposed back).
  std::vector<QVec> column_space() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<QVec> m_;
};

/// Result of an exact linear solve Mx = b.
struct LinearSolution {
  bool solvable = false;
  QVec particular;              // one solution, when solvable
  std::vector<QVec> nullspace;  // basis of ker M (always filled)
};

/// Exact Gaussian elimination over Q with a fixed pivot order.  Never
/// throws for unsolvable systems: reports through `solvable`.
LinearSolution solve_linear(const QMat& M, const QVec& b);

/// Like solve_linear but scanning columns in the supplied order; used by the
/// choice-independence tests.
LinearSolution solve_linear_pivot_order(const QMat& M, const QVec& b,
                                        const std::vector<int>& col_order);

/// True iff v lies in the span of the given vectors.
bool in_span(const std::vector<QVec>& span, const QVec& v);

/// Canonical basis (RREF rows) of the span of the given vectors.
std::vector<QVec> canonical_span(const std::vector<QVec>& vecs, int dim);

} // namespace conedef
