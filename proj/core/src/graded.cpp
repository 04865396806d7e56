#include "conedef/graded.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace conedef {

std::shared_ptr<const GradedSpace> GradedSpace::make(std::vector<BasisElem> basis) {
  auto sp = std::shared_ptr<GradedSpace>(new GradedSpace());
  bool any_bideg = false, all_bideg = true;
  for (const auto& b : basis) {
    if (b.bideg) {
      any_bideg = true;
      if (b.bideg->first + b.bideg->second != b.deg)
        throw std::invalid_argument("bidegree of '" + b.name +
                                    "' does not sum to its degree");
    } else {
      all_bideg = false;
    }
  }
  if (any_bideg && !all_bideg)
    throw std::invalid_argument("either all or no basis elements carry bidegrees");
  for (size_t i = 0; i < basis.size(); ++i) {
    if (sp->index_.count(basis[i].name))
      throw std::invalid_argument("duplicate basis name '" + basis[i].name + "'");
    sp->index_[basis[i].name] = static_cast<int>(i);
  }
  sp->basis_ = std::move(basis);
  sp->bigraded_ = any_bideg;
  return sp;
}

std::optional<int> GradedSpace::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> GradedSpace::indices_of_degree(int deg) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].deg == deg) out.push_back(i);
  return out;
}

std::vector<int> GradedSpace::degrees_present() const {
  std::set<int> degs;
  for (const auto& b : basis_) degs.insert(b.deg);
  return {degs.begin(), degs.end()};
}

Vec::Vec(SpacePtr sp, ArtinPtr alg)
    : sp_(std::move(sp)), alg_(std::move(alg)),
      c_(sp_->dim(), ArtinElem(alg_)) {}

Vec::Vec(SpacePtr sp, std::vector<ArtinElem> coords)
    : sp_(std::move(sp)), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != sp_->dim())
    throw std::invalid_argument("coordinate vector length mismatch");
  if (c_.empty()) throw std::invalid_argument("empty space");
  alg_ = c_[0].algebra();
}

Vec Vec::basis(SpacePtr sp, ArtinPtr alg, int idx) {
  Vec v(std::move(sp), alg);
  v.c_[idx] = ArtinElem::scalar(alg, Rat(1));
  return v;
}

bool Vec::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const ArtinElem& x) { return x.is_zero(); });
}

bool Vec::in_max_ideal() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const ArtinElem& x) { return x.is_zero() || x.in_max_ideal(); });
}

std::optional<int> Vec::degree() const {
  std::optional<int> d;
  for (int i = 0; i < dim(); ++i) {
    if (c_[i].is_zero()) continue;
    int di = sp_->degree(i);
    if (d && *d != di) return std::nullopt;
    d = di;
  }
  return d;
}

bool Vec::homogeneous_of_degree(int d) const {
  for (int i = 0; i < dim(); ++i)
    if (!c_[i].is_zero() && sp_->degree(i) != d) return false;
  return true;
}

Vec Vec::operator+(const Vec& o) const {
  Vec r = *this;
  for (int i = 0; i < dim(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Vec Vec::operator-(const Vec& o) const { return *this + (-o); }

Vec Vec::operator-() const {
  Vec r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Vec Vec::operator*(const Rat& s) const {
  Vec r = *this;
  for (auto& x : r.c_) x = x * s;
  return r;
}

Vec Vec::scaled(const ArtinElem& s) const {
  Vec r = *this;
  for (auto& x : r.c_) x = x * s;
  return r;
}

bool Vec::operator==(const Vec& o) const { return c_ == o.c_; }

Vec Vec::graded_part(int k) const {
  Vec r = *this;
  for (auto& x : r.c_) x = x.graded_part(k);
  return r;
}

QVec Vec::flatten() const {
  const int da = alg_->dim();
  QVec out;
  out.reserve(static_cast<size_t>(da) * dim());
  for (int m = 0; m < da; ++m)
    for (int i = 0; i < dim(); ++i) out.push_back(c_[i].coeff(m));
  return out;
}

Vec Vec::unflatten(SpacePtr sp, ArtinPtr alg, const QVec& flat) {
  const int da = alg->dim();
  const int dv = sp->dim();
  if (static_cast<int>(flat.size()) != da * dv)
    throw std::invalid_argument("flattened length mismatch");
  Vec v(sp, alg);
  for (int i = 0; i < dv; ++i) {
    std::vector<Rat> cs(da);
    for (int m = 0; m < da; ++m) cs[m] = flat[static_cast<size_t>(m) * dv + i];
    v.c_[i] = ArtinElem(alg, std::move(cs));
  }
  return v;
}

std::string Vec::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < dim(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c_[i].str() << ")*" << (*sp_)[i].name;
  }
  if (first) return "0";
  return out.str();
}

GradedMap::GradedMap(SpacePtr src, SpacePtr dst, int shift, QMat matrix)
    : src_(std::move(src)), dst_(std::move(dst)), shift_(shift),
      m_(std::move(matrix)) {
  if (m_.rows() != dst_->dim() || m_.cols() != src_->dim())
    throw std::invalid_argument("graded map matrix shape mismatch");
  auto bad = structure_violations();
  if (!bad.empty())
    throw std::invalid_argument("graded map violates degree structure: " + bad[0]);
}

GradedMap GradedMap::zero(SpacePtr src, SpacePtr dst, int shift) {
  QMat m(dst->dim(), src->dim());
  return GradedMap(std::move(src), std::move(dst), shift, std::move(m));
}

GradedMap GradedMap::identity(SpacePtr sp) {
  QMat m = QMat::identity(sp->dim());
  return GradedMap(sp, sp, 0, std::move(m));
}

Vec GradedMap::apply(const Vec& v) const {
  if (v.space() != src_)
    throw std::invalid_argument("graded map applied to wrong space");
  Vec out(dst_, v.ring());
  for (int j = 0; j < src_->dim(); ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < dst_->dim(); ++i)
      if (m_.at(i, j) != 0) out[i] = out[i] + v[j] * m_.at(i, j);
  }
  return out;
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
  if (inner.dst_ != src_) throw std::invalid_argument("composition mismatch");
  return GradedMap(inner.src_, dst_, shift_ + inner.shift_, m_ * inner.m_);
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
  if (o.shift_ != shift_ || o.src_ != src_ || o.dst_ != dst_)
    throw std::invalid_argument("graded map sum mismatch");
  return GradedMap(src_, dst_, shift_, m_ + o.m_);
}

GradedMap GradedMap::operator-(const GradedMap& o) const {
  return *this + o.scaled(Rat(-1));
}

GradedMap GradedMap::scaled(const Rat& s) const {
  return GradedMap(src_, dst_, shift_, m_.scaled(s));
}

bool GradedMap::operator==(const GradedMap& o) const {
  return src_ == o.src_ && dst_ == o.dst_ && shift_ == o.shift_ && m_ == o.m_;
}

std::vector<std::string> GradedMap::structure_violations() const {
  std::vector<std::string> out;
  for (int i = 0; i < dst_->dim(); ++i)
    for (int j = 0; j < src_->dim(); ++j)
      if (m_.at(i, j) != 0 && dst_->degree(i) != src_->degree(j) + shift_)
        out.push_back("entry (" + (*dst_)[i].name + ", " + (*src_)[j].name +
                      ") breaks shift " + std::to_string(shift_));
  return out;
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
  if (perm.size() != degrees.size())
    throw std::invalid_argument("koszul_sign: length mismatch");
  const int n = static_cast<int>(perm.size());
  {
    std::vector<bool> seen(n, false);
    for (int p : perm) {
      if (p < 0 || p >= n || seen[p])
        throw std::invalid_argument("koszul_sign: not a permutation");
      seen[p] = true;
    }
  }
  int sign = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (perm[i] > perm[j] && (degrees[perm[i]] % 2) && (degrees[perm[j]] % 2))
        sign = -sign;
  return sign;
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

Complex::Complex(SpacePtr sp, GradedMap diff) : space(std::move(sp)), d(std::move(diff)) {
  if (d.source() != space || d.target() != space || d.shift() != 1)
    throw std::invalid_argument("complex differential must be a shift +1 endomap");
  if (!(d.matrix() * d.matrix()).is_zero())
    throw std::invalid_argument("differential does not square to zero");
}

Cohomology::Cohomology(const Complex& c) : cx_(c), proj_(0, 0) {
  const auto sp = c.space;
  const int n = sp->dim();
  const QMat& d = c.d.matrix();
  auto rats = ArtinAlgebra::rationals();

  std::vector<QVec> proj_rows;
  for (int deg : sp->degrees_present()) {
    auto idx = sp->indices_of_degree(deg);
    // restrict d to this degree
    QMat dn(n, static_cast<int>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j)
      for (int i = 0; i < n; ++i) dn.at(i, static_cast<int>(j)) = d.at(i, idx[j]);
    auto Z = dn.kernel(); // coords within idx
    // image of d from the previous degree, expressed within idx coords
    std::vector<QVec> B;
    for (int j = 0; j < n; ++j) {
      if (sp->degree(j) != deg - 1) continue;
      QVec col(idx.size(), Rat(0));
      bool nonzero = false;
      for (size_t i = 0; i < idx.size(); ++i) {
        col[i] = d.at(idx[i], j);
        if (col[i] != 0) nonzero = true;
      }
      if (nonzero) B.push_back(std::move(col));
    }
    B = canonical_span(B, static_cast<int>(idx.size()));

    // representatives: kernel vectors independent modulo B
    std::vector<QVec> chosen = B;
    std::vector<QVec> reps_local;
    for (const auto& z : Z) {
      if (in_span(chosen, z)) continue;
      chosen.push_back(z);
      reps_local.push_back(z);
    }

    // functionals: coordinates w.r.t. [reps | B | complement], first block
    std::vector<QVec> cols = reps_local;
    cols.insert(cols.end(), B.begin(), B.end());
    for (size_t j = 0; j < idx.size(); ++j) {
      QVec e(idx.size(), Rat(0));
      e[j] = 1;
      if (!in_span(cols, e)) cols.push_back(std::move(e));
    }
    QMat T = QMat::from_columns(cols, static_cast<int>(idx.size()));
    // invert T (square by construction)
    QMat Tinv(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j) {
      QVec e(idx.size(), Rat(0));
      e[j] = 1;
      auto sol = solve_linear(T, e);
      for (size_t i = 0; i < idx.size(); ++i) Tinv.at(static_cast<int>(i), static_cast<int>(j)) = sol.particular[i];
    }

    for (size_t r = 0; r < reps_local.size(); ++r) {
      ClassInfo info;
      info.deg = deg;
      info.name = "H" + std::to_string(deg) + "_" + std::to_string(r);
      Vec rep(sp, rats);
      std::optional<std::pair<int, int>> bid;
      bool bid_ok = sp->bigraded();
      for (size_t i = 0; i < idx.size(); ++i) {
        rep[idx[i]] = ArtinElem::scalar(rats, reps_local[r][i]);
        if (bid_ok && reps_local[r][i] != 0) {
          auto b = (*sp)[idx[i]].bideg;
          if (!bid) bid = b;
          else if (bid != b) bid_ok = false;
        }
      }
      if (bid_ok && bid) info.bideg = bid;
      classes_.push_back(std::move(info));
      reps_.push_back(std::move(rep));
      QVec row(n, Rat(0));
      for (size_t i = 0; i < idx.size(); ++i) row[idx[i]] = Tinv.at(static_cast<int>(r), static_cast<int>(i));
      proj_rows.push_back(std::move(row));
    }
  }
  proj_ = QMat(static_cast<int>(proj_rows.size()), n);
  for (size_t r = 0; r < proj_rows.size(); ++r)
    for (int j = 0; j < n; ++j) proj_.at(static_cast<int>(r), j) = proj_rows[r][j];
}

int Cohomology::dim_in_degree(int deg) const {
  int c = 0;
  for (const auto& cl : classes_)
    if (cl.deg == deg) ++c;
  return c;
}

bool Cohomology::is_closed(const Vec& v) const {
  return cx_.d.apply(v).is_zero();
}

std::vector<ArtinElem> Cohomology::project(const Vec& closed) const {
  if (!is_closed(closed))
    throw std::invalid_argument("projection of a non-closed vector");
  std::vector<ArtinElem> out;
  out.reserve(classes_.size());
  for (int r = 0; r < dim(); ++r) {
    ArtinElem acc(closed.ring());
    for (int j = 0; j < closed.dim(); ++j)
      if (proj_.at(r, j) != 0) acc = acc + closed[j] * proj_.at(r, j);
    out.push_back(std::move(acc));
  }
  return out;
}

} // namespace conedef
