#include "conedef/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace conedef {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (m_[i][k] == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o.m_[k][j] != 0) r.m_[i][j] += m_[i][k] * o.m_[k][j];
    }
  return r;
}

QVec QMat::apply(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("vector length mismatch");
  QVec r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (m_[i][j] != 0 && v[j] != 0) r[i] += m_[i][j] * v[j];
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  QMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.m_[i][j] = m_[i][j] + o.m_[i][j];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  QMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.m_[i][j] = m_[i][j] - o.m_[i][j];
  return r;
}

QMat QMat::scaled(const Rat& s) const {
  QMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.m_[i][j] = m_[i][j] * s;
  return r;
}

bool QMat::operator==(const QMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && m_ == o.m_;
}

bool QMat::is_zero() const {
  for (const auto& row : m_)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

QMat QMat::transposed() const {
  QMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.m_[j][i] = m_[i][j];
  return r;
}

QMat QMat::hcat(const QMat& a, const QMat& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hcat shape mismatch");
  QMat r(a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) r.m_[i][j] = a.m_[i][j];
    for (int j = 0; j < b.cols_; ++j) r.m_[i][a.cols_ + j] = b.m_[i][j];
  }
  return r;
}

QMat QMat::from_columns(const std::vector<QVec>& cols, int rows) {
  QMat r(rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows)
      throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < rows; ++i) r.m_[i][j] = cols[j][i];
  }
  return r;
}

QVec QMat::column(int j) const {
  QVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = m_[i][j];
  return v;
}

namespace {

// In-place elimination; returns pivot columns (in processing order).
std::vector<int> eliminate(std::vector<QVec>& m, int rows, int cols,
                           const std::vector<int>& col_order) {
  std::vector<int> pivot_cols;
  int r = 0;
  for (int cidx : col_order) {
    if (r >= rows) break;
    int prow = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][cidx] != 0) { prow = i; break; }
    if (prow < 0) continue;
    std::swap(m[r], m[prow]);
    Rat inv = 1 / m[r][cidx];
    for (int j = 0; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][cidx] == 0) continue;
      Rat f = m[i][cidx];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(cidx);
    ++r;
  }
  return pivot_cols;
}

} // namespace

int QMat::rank() const {
  auto m = m_;
  std::vector<int> order(cols_);
  std::iota(order.begin(), order.end(), 0);
  return static_cast<int>(eliminate(m, rows_, cols_, order).size());
}

QMat QMat::rref() const {
  QMat r = *this;
  std::vector<int> order(cols_);
  std::iota(order.begin(), order.end(), 0);
  std::vector<QVec> m = r.m_;
  eliminate(m, rows_, cols_, order);
  r.m_ = std::move(m);
  return r;
}

std::vector<QVec> QMat::kernel() const {
  auto sol = solve_linear(*this, QVec(rows_, Rat(0)));
  return sol.nullspace;
}

std::vector<QVec> QMat::column_space() const {
  std::vector<QVec> cols;
  for (int j = 0; j < cols_; ++j) cols.push_back(column(j));
  return canonical_span(cols, rows_);
}

LinearSolution solve_linear(const QMat& M, const QVec& b) {
  std::vector<int> order(M.cols());
  std::iota(order.begin(), order.end(), 0);
  return solve_linear_pivot_order(M, b, order);
}

LinearSolution solve_linear_pivot_order(const QMat& M, const QVec& b,
                                        const std::vector<int>& col_order) {
  const int rows = M.rows(), cols = M.cols();
  if (static_cast<int>(b.size()) != rows)
    throw std::invalid_argument("rhs length mismatch");
  // augmented system
  std::vector<QVec> m(rows, QVec(cols + 1, Rat(0)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = M.at(i, j);
    m[i][cols] = b[i];
  }
  auto pivots = eliminate(m, rows, cols + 1, col_order);

  LinearSolution out;
  std::vector<int> pivot_of_col(cols, -1);
  for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<int>(r);

  // inconsistent iff some row is (0..0 | nonzero)
  out.solvable = true;
  for (int i = static_cast<int>(pivots.size()); i < rows; ++i)
    if (m[i][cols] != 0) { out.solvable = false; break; }

  if (out.solvable) {
    out.particular.assign(cols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r)
      out.particular[pivots[r]] = m[r][cols];
  }

  // nullspace: one basis vector per free column, in fixed column order
  for (int j = 0; j < cols; ++j) {
    if (pivot_of_col[j] >= 0) continue;
    QVec v(cols, Rat(0));
    v[j] = 1;
    for (int c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -m[pivot_of_col[c]][j];
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

bool in_span(const std::vector<QVec>& span, const QVec& v) {
  if (span.empty()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  QMat m = QMat::from_columns(span, static_cast<int>(v.size()));
  return solve_linear(m, v).solvable;
}

std::vector<QVec> canonical_span(const std::vector<QVec>& vecs, int dim) {
  if (vecs.empty()) return {};
  std::vector<QVec> m = vecs;
  for (auto& r : m)
    if (static_cast<int>(r.size()) != dim)
      throw std::invalid_argument("span vector length mismatch");
  std::vector<int> order(dim);
  std::iota(order.begin(), order.end(), 0);
  auto pivots = eliminate(m, static_cast<int>(m.size()), dim, order);
  m.resize(pivots.size());
  return m;
}

} // namespace conedef
