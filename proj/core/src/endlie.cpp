#include "conedef/endlie.hpp"

namespace conedef {

Operator::Operator(SpacePtr sp, ArtinPtr alg, int deg)
    : sp_(std::move(sp)), alg_(std::move(alg)), deg_(deg),
      m_(sp_->dim(), std::vector<ArtinElem>(sp_->dim(), ArtinElem(alg_))) {}

Operator Operator::identity(SpacePtr sp, ArtinPtr alg) {
  Operator f(std::move(sp), alg, 0);
  for (int i = 0; i < f.sp_->dim(); ++i)
    f.m_[i][i] = ArtinElem::scalar(alg, Rat(1));
  return f;
}

Operator Operator::from_graded_map(const GradedMap& f, ArtinPtr alg) {
  if (f.source() != f.target())
    throw std::invalid_argument("operator from non-endo map");
  Operator out(f.source(), alg, f.shift());
  for (int i = 0; i < out.sp_->dim(); ++i)
    for (int j = 0; j < out.sp_->dim(); ++j)
      if (f.matrix().at(i, j) != 0)
        out.m_[i][j] = ArtinElem::scalar(alg, f.matrix().at(i, j));
  return out;
}

Vec Operator::apply(const Vec& v) const {
  if (v.space() != sp_) throw std::invalid_argument("operator applied to wrong space");
  Vec out(sp_, v.ring());
  for (int j = 0; j < sp_->dim(); ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < sp_->dim(); ++i)
      if (!m_[i][j].is_zero()) out[i] = out[i] + m_[i][j] * v[j];
  }
  return out;
}

Operator Operator::compose(const Operator& o) const {
  if (sp_ != o.sp_) throw std::invalid_argument("operator composition mismatch");
  Operator out(sp_, alg_, deg_ + o.deg_);
  const int n = sp_->dim();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (m_[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!o.m_[k][j].is_zero())
          out.m_[i][j] = out.m_[i][j] + m_[i][k] * o.m_[k][j];
    }
  return out;
}

Operator Operator::operator+(const Operator& o) const {
  if (sp_ != o.sp_) throw std::invalid_argument("operator sum mismatch");
  if (deg_ != o.deg_) {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    throw std::invalid_argument("sum of operators of different degrees");
  }
  Operator out = *this;
  for (int i = 0; i < sp_->dim(); ++i)
    for (int j = 0; j < sp_->dim(); ++j)
      out.m_[i][j] = out.m_[i][j] + o.m_[i][j];
  return out;
}

Operator Operator::operator-(const Operator& o) const { return *this + (-o); }

Operator Operator::operator-() const {
  Operator out = *this;
  for (auto& row : out.m_)
    for (auto& x : row) x = -x;
  return out;
}

Operator Operator::operator*(const Rat& s) const {
  Operator out = *this;
  for (auto& row : out.m_)
    for (auto& x : row) x = x * s;
  return out;
}

Operator Operator::scaled(const ArtinElem& s) const {
  Operator out = *this;
  for (auto& row : out.m_)
    for (auto& x : row) x = x * s;
  return out;
}

bool Operator::operator==(const Operator& o) const {
  return sp_ == o.sp_ && m_ == o.m_;
}

bool Operator::is_zero() const {
  for (const auto& row : m_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

bool Operator::in_max_ideal() const {
  for (const auto& row : m_)
    for (const auto& x : row)
      if (!x.is_zero() && !x.in_max_ideal()) return false;
  return true;
}

std::vector<std::string> Operator::structure_violations() const {
  std::vector<std::string> out;
  for (int i = 0; i < sp_->dim(); ++i)
    for (int j = 0; j < sp_->dim(); ++j)
      if (!m_[i][j].is_zero() && sp_->degree(i) != sp_->degree(j) + deg_)
        out.push_back("entry (" + (*sp_)[i].name + "," + (*sp_)[j].name +
                      ") breaks declared degree");
  return out;
}

Operator Operator::homogeneous_part(const Operator& raw, int deg) {
  Operator out(raw.sp_, raw.alg_, deg);
  for (int i = 0; i < raw.sp_->dim(); ++i)
    for (int j = 0; j < raw.sp_->dim(); ++j)
      if (raw.sp_->degree(i) == raw.sp_->degree(j) + deg)
        out.m_[i][j] = raw.m_[i][j];
  return out;
}

Operator Operator::graded_part(int k) const {
  Operator out = *this;
  for (auto& row : out.m_)
    for (auto& x : row) x = x.graded_part(k);
  return out;
}

QMat Operator::residue_matrix() const {
  QMat out(sp_->dim(), sp_->dim());
  for (int i = 0; i < sp_->dim(); ++i)
    for (int j = 0; j < sp_->dim(); ++j) out.at(i, j) = m_[i][j].residue();
  return out;
}

EndLie::EndLie(SpacePtr sp, GradedMap d) : sp_(std::move(sp)), dV_(std::move(d)) {
  if (dV_.source() != sp_ || dV_.target() != sp_ || dV_.shift() != 1)
    throw std::invalid_argument("EndLie needs a shift +1 endomap");
  if (!(dV_.matrix() * dV_.matrix()).is_zero())
    throw std::invalid_argument("EndLie differential does not square to zero");
}

Operator EndLie::diff(const Operator& f) const {
  auto d = d_as_operator(f.ring());
  int s = f.degree() % 2 ? -1 : 1;
  return d.compose(f) - f.compose(d) * Rat(s);
}

Operator EndLie::bracket(const Operator& f, const Operator& g) const {
  int s = (f.degree() * g.degree()) % 2 ? -1 : 1;
  return f.compose(g) - g.compose(f) * Rat(s);
}

Operator EndLie::matrix_unit(ArtinPtr alg, int i, int j) const {
  Operator f(sp_, std::move(alg), sp_->degree(i) - sp_->degree(j));
  f.at(i, j) = ArtinElem::scalar(f.ring(), Rat(1));
  return f;
}

Operator exp_operator(const Operator& a) {
  if (!a.in_max_ideal())
    throw std::invalid_argument("exp requires coefficients in the maximal ideal");
  const int N = a.ring()->nilpotency_index();
  Operator out = Operator::identity(a.space(), a.ring());
  Operator pow = a;
  for (int k = 1; k < N && !pow.is_zero(); ++k) {
    out = out + pow * (1 / factorial(k));
    pow = pow.compose(a);
  }
  return out;
}

Operator gauge_action_by_conjugation(const EndLie& E, const Operator& a,
                                     const Operator& y) {
  auto d = E.d_as_operator(y.ring());
  auto ea = exp_operator(a);
  auto eainv = exp_operator(-a);
  auto conj = ea.compose(d + y).compose(eainv) - d;
  return Operator::homogeneous_part(conj, 1);
}

namespace {

// rational coordinates of an operator in the matrix-unit basis, (i,j) row-major
QVec unit_coords(const Operator& f) {
  const int n = f.space()->dim();
  QVec out(n * n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i * n + j] = f.at(i, j).residue();
  return out;
}

} // namespace

Dgla to_dgla(const EndLie& E) {
  const int n = E.space()->dim();
  auto q = ArtinAlgebra::rationals();
  std::vector<BasisElem> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      basis.push_back({"E_" + std::to_string(i) + "_" + std::to_string(j),
                       E.space()->degree(i) - E.space()->degree(j), {}});
  auto sp = GradedSpace::make(std::move(basis));
  QMat dmat(n * n, n * n);
  std::vector<std::vector<QVec>> br(n * n, std::vector<QVec>(n * n));
  std::vector<Operator> units;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) units.push_back(E.matrix_unit(q, i, j));
  for (int a = 0; a < n * n; ++a) {
    auto da = unit_coords(E.diff(units[a]));
    for (int r = 0; r < n * n; ++r) dmat.at(r, a) = da[r];
    for (int b = 0; b < n * n; ++b)
      br[a][b] = unit_coords(E.bracket(units[a], units[b]));
  }
  return Dgla(DglaData{sp, GradedMap(sp, sp, 1, std::move(dmat)), std::move(br)});
}

} // namespace conedef
