#include "conedef/models.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace conedef {

namespace {

std::string bideg_str(int p, int q) {
  std::ostringstream os;
  os << "(" << p << "," << q << ")";
  return os.str();
}

/// Graded commutator a b - (-1)^{da db} b a on plain matrices.
QMat gbracket(const QMat& a, int da, const QMat& b, int db) {
  QMat ab = a * b;
  QMat ba = b * a;
  return (da * db) % 2 ? ab + ba : ab - ba;
}

}  // namespace

BigradedAlgebraModel::BigradedAlgebraModel(SpacePtr space, GradedMap del,
                                           GradedMap delbar,
                                           std::vector<std::vector<QVec>> product,
                                           int unit_index)
    : sp_(std::move(space)),
      del_(std::move(del)),
      delbar_(std::move(delbar)),
      d_(del_ + delbar_),
      prod_(std::move(product)),
      unit_(unit_index) {
  if (!sp_->bigraded())
    throw std::invalid_argument("form model requires a bigraded space");
  if (del_.source() != sp_ || del_.target() != sp_ || del_.shift() != 1 ||
      delbar_.source() != sp_ || delbar_.target() != sp_ || delbar_.shift() != 1)
    throw std::invalid_argument("differentials must be shift +1 endomaps of the model space");
  const int n = sp_->dim();
  if (static_cast<int>(prod_.size()) != n)
    throw std::invalid_argument("product table has wrong size");
  for (const auto& row : prod_) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("product table has wrong size");
    for (const auto& v : row)
      if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("product table has wrong size");
  }
  if (unit_ < 0 || unit_ >= n)
    throw std::invalid_argument("unit index out of range");
  end_ = std::make_shared<EndLie>(sp_, d_);
}

Vec BigradedAlgebraModel::multiply(const Vec& x, const Vec& y) const {
  if (x.space() != sp_ || y.space() != sp_)
    throw std::invalid_argument("multiply: element of a different space");
  Vec out(sp_, x.ring());
  const int n = sp_->dim();
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const ArtinElem c = x[i] * y[j];
      for (int k = 0; k < n; ++k)
        if (prod_[i][j][k] != 0)
          out[k] = out[k] + c * prod_[i][j][k];
    }
  }
  return out;
}

Vec BigradedAlgebraModel::unit(ArtinPtr alg) const {
  return Vec::basis(sp_, std::move(alg), unit_);
}

CheckReport BigradedAlgebraModel::check() const {
  CheckReport rep;
  const int n = sp_->dim();
  auto bideg = [&](int i) { return *(*sp_)[i].bideg; };

  // Bihomogeneity of the two differentials.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [p, q] = bideg(j);
      if (del_.matrix().at(i, j) != 0 && bideg(i) != std::make_pair(p + 1, q))
        rep.violations.push_back("del is not of bidegree (1,0) at entry " +
                                 (*sp_)[i].name + " <- " + (*sp_)[j].name);
      if (delbar_.matrix().at(i, j) != 0 && bideg(i) != std::make_pair(p, q + 1))
        rep.violations.push_back("delbar is not of bidegree (0,1) at entry " +
                                 (*sp_)[i].name + " <- " + (*sp_)[j].name);
    }

  if (!(del_.matrix() * del_.matrix()).is_zero())
    rep.violations.push_back("del^2 != 0");
  if (!(delbar_.matrix() * delbar_.matrix()).is_zero())
    rep.violations.push_back("delbar^2 != 0");
  if (!(del_.matrix() * delbar_.matrix() + delbar_.matrix() * del_.matrix())
           .is_zero())
    rep.violations.push_back("del delbar + delbar del != 0");

  // Unit.
  if (bideg(unit_) != std::make_pair(0, 0))
    rep.violations.push_back("unit is not of bidegree (0,0)");
  for (int j = 0; j < n && rep.violations.size() < 32; ++j)
    for (int k = 0; k < n; ++k) {
      const Rat want(j == k ? 1 : 0);
      if (prod_[unit_][j][k] != want || prod_[j][unit_][k] != want) {
        rep.violations.push_back("unit law fails against " + (*sp_)[j].name);
        break;
      }
    }

  // Graded commutativity.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const int sgn = (sp_->degree(i) * sp_->degree(j)) % 2 ? -1 : 1;
      for (int k = 0; k < n; ++k)
        if (prod_[i][j][k] != prod_[j][i][k] * Rat(sgn)) {
          rep.violations.push_back("graded commutativity fails at " +
                                   (*sp_)[i].name + " * " + (*sp_)[j].name);
          break;
        }
    }

  // Graded Leibniz for both differentials (sparse loops over the tables).
  auto leibniz = [&](const QMat& D, const char* label) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        QVec lhs = D.apply(prod_[i][j]);
        QVec rhs(n, Rat(0));
        for (int k = 0; k < n; ++k) {
          if (D.at(k, i) != 0)
            for (int l = 0; l < n; ++l)
              rhs[l] = rhs[l] + D.at(k, i) * prod_[k][j][l];
          if (D.at(k, j) != 0) {
            const Rat s(sp_->degree(i) % 2 ? -1 : 1);
            for (int l = 0; l < n; ++l)
              rhs[l] = rhs[l] + s * D.at(k, j) * prod_[i][k][l];
          }
        }
        if (lhs != rhs) {
          rep.violations.push_back(std::string(label) + " Leibniz fails at " +
                                   (*sp_)[i].name + " * " + (*sp_)[j].name);
          return;
        }
      }
  };
  leibniz(del_.matrix(), "del");
  leibniz(delbar_.matrix(), "delbar");

  // Associativity, exploiting that products expand to few basis terms.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVec lhs(n, Rat(0)), rhs(n, Rat(0));
        for (int l = 0; l < n; ++l) {
          if (prod_[i][j][l] != 0)
            for (int m = 0; m < n; ++m)
              lhs[m] = lhs[m] + prod_[i][j][l] * prod_[l][k][m];
          if (prod_[j][k][l] != 0)
            for (int m = 0; m < n; ++m)
              rhs[m] = rhs[m] + prod_[j][k][l] * prod_[i][l][m];
        }
        if (lhs != rhs) {
          rep.violations.push_back("associativity fails at (" + (*sp_)[i].name +
                                   ", " + (*sp_)[j].name + ", " + (*sp_)[k].name + ")");
          if (rep.violations.size() > 40) return rep;
        }
      }
  return rep;
}

BigradedAlgebraModel build_dot_square_algebra(const DotSquareSpec& spec) {
  std::vector<BasisElem> basis;
  for (size_t k = 0; k < spec.dots.size(); ++k) {
    auto [p, q] = spec.dots[k];
    basis.push_back({"dot" + std::to_string(k), p + q, {{p, q}}});
  }
  int unit = -1;
  for (size_t k = 0; k < spec.dots.size(); ++k)
    if (spec.dots[k] == std::make_pair(0, 0)) {
      unit = static_cast<int>(k);
      break;
    }
  if (unit < 0) throw std::invalid_argument("spec has no dot at (0,0) to serve as unit");

  struct SquareIdx { int c, dc, dbc, ddbc; };
  std::vector<SquareIdx> sq;
  for (size_t k = 0; k < spec.squares.size(); ++k) {
    auto [p, q] = spec.squares[k];
    const std::string s = "sq" + std::to_string(k);
    SquareIdx ix;
    ix.c = static_cast<int>(basis.size());
    basis.push_back({s, p + q, {{p, q}}});
    ix.dc = static_cast<int>(basis.size());
    basis.push_back({s + "_d", p + q + 1, {{p + 1, q}}});
    ix.dbc = static_cast<int>(basis.size());
    basis.push_back({s + "_db", p + q + 1, {{p, q + 1}}});
    ix.ddbc = static_cast<int>(basis.size());
    basis.push_back({s + "_ddb", p + q + 2, {{p + 1, q + 1}}});
    sq.push_back(ix);
  }

  auto sp = GradedSpace::make(basis);
  const int n = sp->dim();
  QMat dl(n, n), db(n, n);
  for (const auto& ix : sq) {
    dl.at(ix.dc, ix.c) = Rat(1);
    dl.at(ix.ddbc, ix.dbc) = Rat(-1);
    db.at(ix.dbc, ix.c) = Rat(1);
    db.at(ix.ddbc, ix.dc) = Rat(1);
  }

  std::vector<std::vector<QVec>> prod(n, std::vector<QVec>(n, QVec(n, Rat(0))));
  for (int j = 0; j < n; ++j) {
    prod[unit][j][j] = Rat(1);
    prod[j][unit][j] = Rat(1);
  }
  prod[unit][unit][unit] = Rat(1);

  return BigradedAlgebraModel(sp, GradedMap(sp, sp, 1, dl),
                              GradedMap(sp, sp, 1, db), std::move(prod), unit);
}

DotSquareSpec random_dot_square_spec(std::uint64_t seed) {
  std::mt19937_64 g(seed);
  DotSquareSpec spec;
  spec.dots.emplace_back(0, 0);
  const int extra_dots = static_cast<int>(g() % 3);
  for (int k = 0; k < extra_dots; ++k)
    spec.dots.emplace_back(static_cast<int>(g() % 4), static_cast<int>(g() % 4));
  const int squares = 1 + static_cast<int>(g() % 3);
  for (int k = 0; k < squares; ++k)
    spec.squares.emplace_back(static_cast<int>(g() % 3), static_cast<int>(g() % 3));
  return spec;
}

LemmaReport check_deldelbar_lemma(const BigradedAlgebraModel& m) {
  LemmaReport rep;
  const auto& sp = m.space();
  const int n = sp->dim();
  const auto q_ring = ArtinAlgebra::rationals();

  const QMat& dl = m.del().matrix();
  const QMat& db = m.delbar().matrix();
  const QMat& d = m.d().matrix();
  const std::vector<QVec> ddb_cols = (dl * db).column_space();

  std::set<std::pair<int, int>> bidegs;
  for (int i = 0; i < n; ++i) bidegs.insert(*(*sp)[i].bideg);

  for (auto [p, q] : bidegs) {
    std::vector<int> block;
    for (int i = 0; i < n; ++i)
      if (*(*sp)[i].bideg == std::make_pair(p, q)) block.push_back(i);

    // x supported on the (p,q) block with del x = delbar x = 0.
    QMat cons(2 * n, static_cast<int>(block.size()));
    for (size_t c = 0; c < block.size(); ++c)
      for (int r = 0; r < n; ++r) {
        cons.at(r, static_cast<int>(c)) = dl.at(r, block[c]);
        cons.at(n + r, static_cast<int>(c)) = db.at(r, block[c]);
      }
    std::vector<QVec> closed;
    for (const QVec& k : cons.kernel()) {
      QVec full(n, Rat(0));
      for (size_t c = 0; c < block.size(); ++c) full[block[c]] = k[c];
      closed.push_back(full);
    }
    if (closed.empty()) continue;

    // Intersect with im d via the kernel of [closed | -d].
    QMat K = QMat::from_columns(closed, n);
    QMat joint = QMat::hcat(K, d.scaled(Rat(-1)));
    std::vector<QVec> inter;
    for (const QVec& u : joint.kernel()) {
      QVec coeffs(closed.size());
      for (size_t c = 0; c < closed.size(); ++c) coeffs[c] = u[c];
      inter.push_back(K.apply(coeffs));
    }
    for (const QVec& v : canonical_span(inter, n)) {
      if (in_span(ddb_cols, v)) continue;
      rep.violations.push_back("lemma fails at bidegree " + bideg_str(p, q));
      if (!rep.witness) {
        std::vector<ArtinElem> coords;
        for (const Rat& r : v) coords.push_back(ArtinElem::scalar(q_ring, r));
        rep.witness = Vec(sp, std::move(coords));
      }
      break;
    }
  }
  return rep;
}

PolyModel::PolyModel(SpacePtr space, FormModelPtr forms,
                     std::vector<std::pair<int, int>> bidegrees,
                     std::vector<std::vector<QVec>> wedge_table,
                     std::vector<std::vector<QVec>> sn_table, GradedMap D,
                     std::vector<GradedMap> contraction_table)
    : sp_(std::move(space)),
      forms_(std::move(forms)),
      bideg_(std::move(bidegrees)),
      wedge_(std::move(wedge_table)),
      sn_(std::move(sn_table)),
      D_(std::move(D)),
      contr_(std::move(contraction_table)) {
  const int n = sp_->dim();
  if (static_cast<int>(bideg_.size()) != n ||
      static_cast<int>(contr_.size()) != n)
    throw std::invalid_argument("polyvector tables have wrong size");
  if (D_.source() != sp_ || D_.target() != sp_ || D_.shift() != 1)
    throw std::invalid_argument("D must be a shift +1 endomap");
  for (int i = 0; i < n; ++i) {
    if (bideg_[i].first + bideg_[i].second + 1 != sp_->degree(i))
      throw std::invalid_argument("shifted grading mismatch at " + (*sp_)[i].name);
    if (contr_[i].source() != forms_->space() ||
        contr_[i].target() != forms_->space() ||
        contr_[i].shift() != sp_->degree(i) - 1)
      throw std::invalid_argument("contraction shape mismatch at " + (*sp_)[i].name);
  }
}

namespace {

Vec table_product(const SpacePtr& sp, const std::vector<std::vector<QVec>>& tab,
                  const Vec& x, const Vec& y) {
  if (x.space() != sp || y.space() != sp)
    throw std::invalid_argument("product: element of a different space");
  Vec out(sp, x.ring());
  const int n = sp->dim();
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const ArtinElem c = x[i] * y[j];
      for (int k = 0; k < n; ++k)
        if (tab[i][j][k] != 0) out[k] = out[k] + c * tab[i][j][k];
    }
  }
  return out;
}

}  // namespace

Vec PolyModel::wedge(const Vec& x, const Vec& y) const {
  return table_product(sp_, wedge_, x, y);
}

Vec PolyModel::sn_bracket(const Vec& x, const Vec& y) const {
  return table_product(sp_, sn_, x, y);
}

Vec PolyModel::mc_residual(const Vec& xi) const {
  return D_.apply(xi) + sn_bracket(xi, xi) * Rat(1, 2);
}

Operator PolyModel::contraction(const Vec& xi) const {
  if (xi.space() != sp_)
    throw std::invalid_argument("contraction: element of a different space");
  const int deg = xi.degree().value_or(1);
  Operator out(forms_->space(), xi.ring(), deg - 1);
  for (int k = 0; k < sp_->dim(); ++k) {
    if (xi[k].is_zero()) continue;
    const QMat& ck = contr_[k].matrix();
    for (int i = 0; i < ck.rows(); ++i)
      for (int j = 0; j < ck.cols(); ++j)
        if (ck.at(i, j) != 0)
          out.at(i, j) = out.at(i, j) + xi[k] * ck.at(i, j);
  }
  return out;
}

Operator PolyModel::iterated_contraction(const std::vector<Vec>& xs) const {
  if (xs.empty())
    throw std::invalid_argument("iterated contraction needs at least one argument");
  Operator out = contraction(xs[0]);
  for (size_t k = 1; k < xs.size(); ++k) out = out.compose(contraction(xs[k]));
  return out;
}

namespace {

/// Torus symbol bookkeeping: form symbols 0..n-1 are dz_{i+1}, n..2n-1 are
/// dzb_{j+1}; polyvector symbols 0..n-1 are dzb_{j+1}, n..2n-1 are v_{i+1}.
int merge_sign(unsigned a, unsigned b) {
  int inv = 0;
  for (unsigned bit = b; bit; bit &= bit - 1)
    inv += __builtin_popcount(a >> (__builtin_ctz(bit) + 1));
  return inv % 2 ? -1 : 1;
}

std::vector<std::vector<QVec>> exterior_table(
    const std::vector<unsigned>& masks,
    const std::map<unsigned, int>& index) {
  const int n = static_cast<int>(masks.size());
  std::vector<std::vector<QVec>> tab(n, std::vector<QVec>(n, QVec(n, Rat(0))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (masks[i] & masks[j]) continue;
      tab[i][j][index.at(masks[i] | masks[j])] = Rat(merge_sign(masks[i], masks[j]));
    }
  return tab;
}

}  // namespace

ModelPair dot_square_model_pair(const DotSquareSpec& spec) {
  auto forms = std::make_shared<BigradedAlgebraModel>(build_dot_square_algebra(spec));
  const auto& fsp = forms->space();

  // Candidate generators: ordered dot pairs (p,q) -> (p-1,q+1), kept only
  // while sources and targets stay disjoint (composites must vanish).
  std::vector<std::pair<int, int>> pairs;  // (source dot idx, target dot idx)
  std::vector<bool> is_src(fsp->dim(), false), is_dst(fsp->dim(), false);
  for (size_t a = 0; a < spec.dots.size(); ++a)
    for (size_t b = 0; b < spec.dots.size(); ++b) {
      if (spec.dots[b] != std::make_pair(spec.dots[a].first - 1,
                                         spec.dots[a].second + 1))
        continue;
      const int ia = *fsp->index_of("dot" + std::to_string(a));
      const int ib = *fsp->index_of("dot" + std::to_string(b));
      if (is_dst[ia] || is_src[ib]) continue;
      is_src[ia] = is_dst[ib] = true;
      pairs.emplace_back(ia, ib);
    }

  std::vector<BasisElem> basis;
  for (size_t k = 0; k < pairs.size(); ++k)
    basis.push_back({"q" + std::to_string(k), 1, std::nullopt});
  auto psp = GradedSpace::make(std::move(basis));
  const int pd = psp->dim();
  std::vector<std::pair<int, int>> bidegs(pd, {-1, 1});
  std::vector<std::vector<QVec>> wedge(pd, std::vector<QVec>(pd, QVec(pd, Rat(0))));
  auto sn = wedge;
  std::vector<GradedMap> contr;
  for (int k = 0; k < pd; ++k) {
    QMat m(fsp->dim(), fsp->dim());
    m.at(pairs[k].second, pairs[k].first) = Rat(1);
    contr.emplace_back(fsp, fsp, 0, std::move(m));
  }
  auto poly = std::make_shared<PolyModel>(psp, forms, std::move(bidegs),
                                          std::move(wedge), std::move(sn),
                                          GradedMap::zero(psp, psp, 1),
                                          std::move(contr));
  return {std::move(forms), std::move(poly)};
}

ModelPair build_torus_model(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("torus dimension must be 1..3");
  const int g = 2 * n;

  // Forms: exterior algebra on dz_1..dz_n, dzb_1..dzb_n.
  std::vector<unsigned> fmask;
  for (unsigned m = 0; m < (1u << g); ++m) fmask.push_back(m);
  std::sort(fmask.begin(), fmask.end(), [&](unsigned a, unsigned b) {
    const int da = __builtin_popcount(a), dbm = __builtin_popcount(b);
    const int pa = __builtin_popcount(a & ((1u << n) - 1));
    const int pb = __builtin_popcount(b & ((1u << n) - 1));
    return std::tie(da, pa, a) < std::tie(dbm, pb, b);
  });
  auto fname = [&](unsigned m) {
    std::string s;
    for (int t = 0; t < g; ++t)
      if (m >> t & 1) {
        if (!s.empty()) s += "^";
        s += t < n ? "dz" + std::to_string(t + 1) : "dzb" + std::to_string(t - n + 1);
      }
    return s.empty() ? std::string("1") : s;
  };
  std::vector<BasisElem> fbasis;
  std::map<unsigned, int> findex;
  for (size_t i = 0; i < fmask.size(); ++i) {
    const unsigned m = fmask[i];
    const int p = __builtin_popcount(m & ((1u << n) - 1));
    const int q = __builtin_popcount(m >> n);
    fbasis.push_back({fname(m), p + q, {{p, q}}});
    findex[m] = static_cast<int>(i);
  }
  auto fsp = GradedSpace::make(fbasis);
  auto forms = std::make_shared<BigradedAlgebraModel>(
      fsp, GradedMap::zero(fsp, fsp, 1), GradedMap::zero(fsp, fsp, 1),
      exterior_table(fmask, findex), findex.at(0));

  // Polyvectors: exterior algebra on dzb_1..dzb_n, v_1..v_n with the
  // shifted grading deg = a + b + 1.
  std::vector<unsigned> pmask;
  for (unsigned m = 0; m < (1u << g); ++m) pmask.push_back(m);
  auto pbideg = [&](unsigned m) {
    return std::make_pair(-__builtin_popcount(m >> n),
                          __builtin_popcount(m & ((1u << n) - 1)));
  };
  std::sort(pmask.begin(), pmask.end(), [&](unsigned x, unsigned y) {
    auto [ax, bx] = pbideg(x);
    auto [ay, by] = pbideg(y);
    const int dx = ax + bx, dy = ay + by;
    return std::tie(dx, ax, x) < std::tie(dy, ay, y);
  });
  auto pname = [&](unsigned m) {
    std::string s;
    for (int t = 0; t < g; ++t)
      if (m >> t & 1) {
        if (!s.empty()) s += "^";
        s += t < n ? "dzb" + std::to_string(t + 1) : "v" + std::to_string(t - n + 1);
      }
    return s.empty() ? std::string("1") : s;
  };
  std::vector<BasisElem> pbasis;
  std::map<unsigned, int> pindex;
  std::vector<std::pair<int, int>> pbidegs;
  for (size_t i = 0; i < pmask.size(); ++i) {
    auto [a, b] = pbideg(pmask[i]);
    pbasis.push_back({pname(pmask[i]), a + b + 1, std::nullopt});
    pbidegs.emplace_back(a, b);
    pindex[pmask[i]] = static_cast<int>(i);
  }
  auto psp = GradedSpace::make(pbasis);
  const int pd = psp->dim();

  // Generator contractions on forms: dzb_j multiplies, v_i contracts dz_i.
  std::vector<GradedMap> gen(g);
  for (int t = 0; t < g; ++t) {
    const bool mult = t < n;                     // polyvector symbol kind
    const int fs = mult ? n + t : t - n;         // form symbol acted on
    QMat m(fsp->dim(), fsp->dim());
    for (int j = 0; j < fsp->dim(); ++j) {
      const unsigned F = fmask[j];
      const bool has = F >> fs & 1;
      if (mult == has) continue;
      const unsigned G = mult ? F | (1u << fs) : F & ~(1u << fs);
      const int sgn = __builtin_popcount(F & ((1u << fs) - 1)) % 2 ? -1 : 1;
      m.at(findex.at(G), j) = Rat(sgn);
    }
    gen[t] = GradedMap(fsp, fsp, mult ? 1 : -1, m);
  }
  std::vector<GradedMap> contr(pd);
  for (int i = 0; i < pd; ++i) {
    GradedMap op = GradedMap::identity(fsp);
    for (int t = g - 1; t >= 0; --t)
      if (pmask[i] >> t & 1) op = gen[t].compose(op);
    contr[i] = op;
  }

  std::vector<std::vector<QVec>> sn(pd, std::vector<QVec>(pd, QVec(pd, Rat(0))));
  auto poly = std::make_shared<PolyModel>(
      psp, forms, pbidegs, exterior_table(pmask, pindex), std::move(sn),
      GradedMap::zero(psp, psp, 1), std::move(contr));
  return {forms, poly};
}

CheckReport cartan_identities_check(const PolyModel& p) {
  CheckReport rep;
  const auto& sp = p.space();
  const int pd = sp->dim();
  const QMat& dl = p.forms()->del().matrix();
  const QMat& db = p.forms()->delbar().matrix();

  auto icomb = [&](const QVec& coords) {
    QMat out(p.forms()->space()->dim(), p.forms()->space()->dim());
    for (int k = 0; k < pd; ++k)
      if (coords[k] != 0)
        out = out + p.contraction_of_basis(k).matrix().scaled(coords[k]);
    return out;
  };
  auto cdeg = [&](int k) { return sp->degree(k) - 1; };

  for (int k = 0; k < pd; ++k) {
    const QMat& ik = p.contraction_of_basis(k).matrix();
    const QMat lhs = icomb(p.D().matrix().column(k));
    if (!(lhs + gbracket(db, 1, ik, cdeg(k))).is_zero())
      rep.violations.push_back("i_D identity fails at " + (*sp)[k].name);
  }

  for (int k = 0; k < pd; ++k) {
    const QMat& ik = p.contraction_of_basis(k).matrix();
    for (int l = 0; l < pd; ++l) {
      const QMat& il = p.contraction_of_basis(l).matrix();
      const QMat inner = gbracket(dl, 1, il, cdeg(l));
      if (!(icomb(p.sn_coords(k, l)) - gbracket(ik, cdeg(k), inner, cdeg(l) + 1)).is_zero())
        rep.violations.push_back("bracket identity fails at (" + (*sp)[k].name +
                                 ", " + (*sp)[l].name + ")");
      if (!gbracket(ik, cdeg(k), il, cdeg(l)).is_zero())
        rep.violations.push_back("contraction commutator fails at (" +
                                 (*sp)[k].name + ", " + (*sp)[l].name + ")");
      if (!(icomb(p.wedge_coords(k, l)) - ik * il).is_zero())
        rep.violations.push_back("multiplicativity fails at (" + (*sp)[k].name +
                                 ", " + (*sp)[l].name + ")");
      if (rep.violations.size() > 40) return rep;
    }
  }
  return rep;
}

}  // namespace conedef
