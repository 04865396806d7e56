#include "conedef/period.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace conedef {

namespace {

QVec flatten_qmat(const QMat& m) {
  QVec out;
  out.reserve(m.rows() * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  return out;
}

/// Rows annihilating the span of the given vectors.
std::vector<QVec> annihilator(const std::vector<QVec>& span, int n) {
  return QMat::from_columns(span, n).transposed().kernel();
}

LinearSolution psolve(const QMat& M, const QVec& b, bool reverse) {
  if (!reverse) return solve_linear(M, b);
  std::vector<int> order(M.cols());
  for (int j = 0; j < M.cols(); ++j) order[j] = M.cols() - 1 - j;
  return solve_linear_pivot_order(M, b, order);
}

/// Monomial components (graded by ring basis index) of an operator's
/// matrix.
QMat monomial_part(const Operator& f, int mono) {
  const int n = f.space()->dim();
  QMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = f.at(i, j).coeff(mono);
  return out;
}

/// f(span K) <= span P for every monomial component of f.
bool maps_into(const Operator& f, const std::vector<QVec>& K,
               const std::vector<QVec>& P) {
  for (int mono = 0; mono < f.ring()->dim(); ++mono) {
    const QMat part = monomial_part(f, mono);
    if (part.is_zero()) continue;
    for (const QVec& v : K)
      if (!in_span(P, part.apply(v))) return false;
  }
  return true;
}

ArtinElem artin_inverse(const ArtinElem& u) {
  const ArtinPtr& A = u.algebra();
  if (u.residue() == 0) throw std::invalid_argument("inverting a non-unit");
  const Rat c = Rat(1) / u.residue();
  ArtinElem x = ArtinElem::scalar(A, c);
  ArtinElem n = ArtinElem::scalar(A, Rat(1)) - u * x;  // in m_A
  ArtinElem inv = x;
  ArtinElem pw = x;
  for (int k = 1; k < A->nilpotency_index(); ++k) {
    pw = pw * n;
    inv = inv + pw;
  }
  return inv;
}

Vec lift_rational(const Vec& q, const ArtinPtr& ring) {
  Vec out(q.space(), ring);
  for (int i = 0; i < q.dim(); ++i)
    out[i] = ArtinElem::scalar(ring, q[i].residue());
  return out;
}

QVec rational_coords(const Vec& q) {
  QVec out(q.dim());
  for (int i = 0; i < q.dim(); ++i) out[i] = q[i].residue();
  return out;
}

/// Q-basis of the underlying rational space of the A-span of the given
/// coordinate columns over the cohomology basis.
std::vector<QVec> module_flat_span(const std::vector<std::vector<ArtinElem>>& cols,
                                   const ArtinPtr& ring, int h) {
  std::vector<QVec> flat;
  for (const auto& col : cols)
    for (int mono = 0; mono < ring->dim(); ++mono) {
      const ArtinElem scale = ArtinElem(
          ring, [&] {
            std::vector<Rat> cs(ring->dim(), Rat(0));
            cs[mono] = Rat(1);
            return cs;
          }());
      QVec v(h * ring->dim(), Rat(0));
      bool nonzero = false;
      for (int r = 0; r < h; ++r) {
        const ArtinElem e = col[r] * scale;
        for (int mi = 0; mi < ring->dim(); ++mi) {
          v[mi * h + r] = e.coeff(mi);
          if (e.coeff(mi) != 0) nonzero = true;
        }
      }
      if (nonzero) flat.push_back(std::move(v));
    }
  return canonical_span(flat, h * ring->dim());
}

}  // namespace

Operator EndSubalgebra::realize(const Vec& x, const SpacePtr& forms_space) const {
  if (x.space() != lie->space())
    throw std::invalid_argument("realize: coordinates over the wrong space");
  const int deg = x.degree().value_or(ops.empty() ? 0 : 1);
  Operator out(forms_space, x.ring(), deg);
  for (size_t k = 0; k < ops.size(); ++k) {
    if (x[static_cast<int>(k)].is_zero()) continue;
    const QMat& ck = ops[k].matrix();
    for (int i = 0; i < ck.rows(); ++i)
      for (int j = 0; j < ck.cols(); ++j)
        if (ck.at(i, j) != 0)
          out.at(i, j) = out.at(i, j) + x[static_cast<int>(k)] * ck.at(i, j);
  }
  return out;
}

bool EndSubalgebra::contains(const Operator& f) const {
  std::vector<QVec> span;
  for (const auto& op : ops) span.push_back(flatten_qmat(op.matrix()));
  const int n = f.space()->dim();
  for (int mono = 0; mono < f.ring()->dim(); ++mono) {
    const QMat part = monomial_part(f, mono);
    if (part.is_zero()) continue;
    QVec v = flatten_qmat(part);
    (void)n;
    if (!in_span(span, v)) return false;
  }
  return true;
}

namespace {

EndSubalgebra build_constrained_subalgebra(
    const BigradedAlgebraModel& model, const std::string& prefix,
    const std::vector<std::pair<std::vector<QVec>, std::vector<QVec>>>& conditions) {
  const SpacePtr& sp = model.space();
  const int n = sp->dim();

  // Per-shift solve: unknowns are the matrix entries of an operator of
  // that degree; each condition (K, ann) imposes ann . f . v = 0 for all
  // v in K.
  std::set<int> shifts;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) shifts.insert(sp->degree(i) - sp->degree(j));

  std::vector<BasisElem> basis;
  std::vector<GradedMap> ops;
  for (int s : shifts) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (sp->degree(i) == sp->degree(j) + s) slots.emplace_back(i, j);
    if (slots.empty()) continue;

    std::vector<QVec> rows;
    for (const auto& [K, ann] : conditions)
      for (const QVec& v : K)
        for (const QVec& r : ann) {
          QVec row(slots.size(), Rat(0));
          for (size_t t = 0; t < slots.size(); ++t)
            row[t] = r[slots[t].first] * v[slots[t].second];
          rows.push_back(std::move(row));
        }
    QMat C(static_cast<int>(rows.size()), static_cast<int>(slots.size()));
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t t = 0; t < slots.size(); ++t)
        C.at(static_cast<int>(r), static_cast<int>(t)) = rows[r][t];

    int k = 0;
    for (const QVec& sol : C.kernel()) {
      QMat mat(n, n);
      for (size_t t = 0; t < slots.size(); ++t)
        mat.at(slots[t].first, slots[t].second) = sol[t];
      basis.push_back({prefix + std::to_string(s) + "_" + std::to_string(k++), s,
                       std::nullopt});
      ops.emplace_back(sp, sp, s, mat);
    }
  }

  // Abstract copy: structure constants in the computed basis, with closure
  // under d and bracket verified by the coordinate solves themselves.
  auto lsp = GradedSpace::make(basis);
  const int ld = lsp->dim();
  std::vector<QVec> flat;
  for (const auto& op : ops) flat.push_back(flatten_qmat(op.matrix()));
  QMat span = QMat::from_columns(flat, n * n);
  auto coords = [&](const QMat& mat, const std::string& what) {
    auto sol = solve_linear(span, flatten_qmat(mat));
    if (!sol.solvable)
      throw std::logic_error("subalgebra " + prefix + " not closed under " + what);
    return sol.particular;
  };

  const QMat& dmat = model.d().matrix();
  QMat dl_struct(ld, ld);
  std::vector<std::vector<QVec>> bracket(ld, std::vector<QVec>(ld));
  for (int i = 0; i < ld; ++i) {
    const QMat& fi = ops[i].matrix();
    const int si = ops[i].shift();
    QMat dfi = (si % 2) ? dmat * fi + fi * dmat : dmat * fi - fi * dmat;
    QVec dc = coords(dfi, "the differential");
    for (int r = 0; r < ld; ++r) dl_struct.at(r, i) = dc[r];
    for (int j = 0; j < ld; ++j) {
      const QMat& fj = ops[j].matrix();
      const int sj = ops[j].shift();
      QMat br = (si * sj) % 2 ? fi * fj + fj * fi : fi * fj - fj * fi;
      bracket[i][j] = coords(br, "the bracket");
    }
  }

  DglaData data;
  data.space = lsp;
  data.d = GradedMap(lsp, lsp, 1, dl_struct);
  data.bracket = std::move(bracket);
  EndSubalgebra sub;
  sub.lie = std::make_shared<Dgla>(Dgla(std::move(data)));
  sub.ops = std::move(ops);
  return sub;
}

}  // namespace

ChiSubalgebras build_chi(const BigradedAlgebraModel& m) {
  const int n = m.space()->dim();
  const QMat& dl = m.del().matrix();
  std::vector<QVec> K = dl.kernel();
  std::vector<QVec> P = dl.column_space();
  std::vector<QVec> annP = annihilator(P, n);
  std::vector<QVec> annK = annihilator(K, n);

  ChiSubalgebras out;
  out.L = build_constrained_subalgebra(m, "L", {{K, annP}});
  out.M = build_constrained_subalgebra(m, "M", {{K, annK}, {P, annP}});
  return out;
}

PeriodMatrix::PeriodMatrix(std::shared_ptr<const Cohomology> H, ArtinPtr ring,
                           std::vector<std::vector<ArtinElem>> columns)
    : H_(std::move(H)), ring_(std::move(ring)), cols_(std::move(columns)) {
  if (static_cast<int>(cols_.size()) != H_->dim())
    throw std::invalid_argument("period matrix has wrong column count");
  for (const auto& c : cols_)
    if (static_cast<int>(c.size()) != H_->dim())
      throw std::invalid_argument("period matrix has wrong row count");
}

std::vector<ArtinElem> PeriodMatrix::apply(const std::vector<ArtinElem>& coords) const {
  if (static_cast<int>(coords.size()) != dim())
    throw std::invalid_argument("period matrix applied to wrong-length vector");
  std::vector<ArtinElem> out(dim(), ArtinElem(ring_));
  for (int k = 0; k < dim(); ++k) {
    if (coords[k].is_zero()) continue;
    for (int r = 0; r < dim(); ++r)
      out[r] = out[r] + cols_[k][r] * coords[k];
  }
  return out;
}

bool PeriodMatrix::residue_is_identity() const {
  for (int k = 0; k < dim(); ++k)
    for (int r = 0; r < dim(); ++r)
      if (cols_[k][r].residue() != Rat(k == r ? 1 : 0)) return false;
  return true;
}

bool PeriodMatrix::operator==(const PeriodMatrix& o) const {
  if (dim() != o.dim() || !ring_->same_ring(*o.ring_)) return false;
  for (int k = 0; k < dim(); ++k)
    for (int r = 0; r < dim(); ++r)
      if (!(cols_[k][r] == o.cols_[k][r])) return false;
  return true;
}

std::string PeriodMatrix::str() const {
  std::ostringstream os;
  for (int k = 0; k < dim(); ++k)
    for (int r = 0; r < dim(); ++r)
      os << H_->classes()[r].name << " <- " << H_->classes()[k].name << " : "
         << cols_[k][r].str() << "\n";
  return os.str();
}

PeriodMatrix psi_tilde_exp(const BigradedAlgebraModel& m, const Operator& alpha,
                           const Operator& exp_a, const PsiOptions& opt) {
  const SpacePtr& sp = m.space();
  const ArtinPtr& ring = alpha.ring();
  if (alpha.space() != sp || exp_a.space() != sp)
    throw std::invalid_argument("psi: operators on the wrong space");
  if (!ring->same_ring(*exp_a.ring()))
    throw std::invalid_argument("psi: mismatched coefficient rings");
  if (alpha.degree() != 1 || !alpha.in_max_ideal())
    throw std::invalid_argument("psi: alpha must be a degree-1 operator over the maximal ideal");
  if (exp_a.degree() != 0 || !(exp_a.residue_matrix() == QMat::identity(sp->dim())))
    throw std::invalid_argument("psi: exponential must reduce to the identity");

  const QMat& dl = m.del().matrix();
  const QMat& dmat = m.d().matrix();
  const std::vector<QVec> K = dl.kernel();
  const std::vector<QVec> P = dl.column_space();
  if (!maps_into(alpha, K, P))
    throw std::invalid_argument("psi: alpha does not map ker del into del A");

  // The Maurer-Cartan/gauge pair condition in one identity:
  // d e^a = e^a (d + alpha).
  const Operator d_op = Operator::from_graded_map(m.d(), ring);
  if (!(d_op.compose(exp_a) == exp_a.compose(d_op + alpha)))
    throw std::invalid_argument("psi: (alpha, e^a) is not a Maurer-Cartan pair");

  auto H = std::make_shared<const Cohomology>(Complex(sp, m.d()));
  const QMat deldbar_system = dl * dmat;   // for omega_0
  const QMat lift_system = dmat * dl;      // for the beta corrections

  std::vector<std::vector<ArtinElem>> cols;
  for (int k = 0; k < H->dim(); ++k) {
    const QVec rep = rational_coords(H->representative(k));

    // del-closed representative omega_0 = rep + d u.
    QVec b(sp->dim(), Rat(0));
    {
      QVec dlrep = dl.apply(rep);
      for (int i = 0; i < sp->dim(); ++i) b[i] = -dlrep[i];
    }
    auto sol = psolve(deldbar_system, b, opt.reverse_pivots);
    if (!sol.solvable)
      throw std::runtime_error(
          "psi: no del-closed representative for " + H->classes()[k].name +
          " (the model violates the del-delbar lemma)");
    QVec u = sol.particular;
    if (opt.alternate_omega0 && !sol.nullspace.empty())
      for (int i = 0; i < sp->dim(); ++i) u[i] = u[i] + sol.nullspace[0][i];
    QVec omega0q = rep;
    {
      QVec du = dmat.apply(u);
      for (int i = 0; i < sp->dim(); ++i) omega0q[i] = omega0q[i] + du[i];
    }
    Vec omega0(sp, ring);
    for (int i = 0; i < sp->dim(); ++i)
      omega0[i] = ArtinElem::scalar(ring, omega0q[i]);

    // Order-by-order correction beta with d e^a(omega_0 - del beta) = 0.
    Vec beta(sp, ring);
    for (int ord = 1; ord < ring->nilpotency_index(); ++ord) {
      Vec defect = m.d().apply(exp_a.apply(omega0 - m.del().apply(beta)));
      Vec part = defect.graded_part(ord);
      if (part.is_zero()) continue;
      for (int mono = 0; mono < ring->dim(); ++mono) {
        if (ring->total_degree(mono) != ord) continue;
        QVec comp(sp->dim(), Rat(0));
        bool nonzero = false;
        for (int i = 0; i < sp->dim(); ++i) {
          comp[i] = part[i].coeff(mono);
          if (comp[i] != 0) nonzero = true;
        }
        if (!nonzero) continue;
        auto fix = psolve(lift_system, comp, opt.reverse_pivots);
        if (!fix.solvable)
          throw std::runtime_error("psi: lifting obstructed at order " +
                                   std::to_string(ord));
        std::vector<Rat> mono_coeffs(ring->dim(), Rat(0));
        mono_coeffs[mono] = Rat(1);
        const ArtinElem mono_elem(ring, std::move(mono_coeffs));
        for (int i = 0; i < sp->dim(); ++i)
          beta[i] = beta[i] + ArtinElem::scalar(ring, fix.particular[i]) * mono_elem;
      }
    }

    Vec img = exp_a.apply(omega0 - m.del().apply(beta));
    if (!m.d().apply(img).is_zero())
      throw std::runtime_error("psi: lifting failed to close for " +
                               H->classes()[k].name);
    cols.push_back(H->project(img));
  }
  return PeriodMatrix(H, ring, std::move(cols));
}

PeriodMatrix psi_tilde(const BigradedAlgebraModel& m, const Operator& alpha,
                       const Operator& a, const PsiOptions& opt) {
  if (a.degree() != 0 || !a.in_max_ideal())
    throw std::invalid_argument("psi: a must be a degree-0 operator over the maximal ideal");
  return psi_tilde_exp(m, alpha, exp_operator(a), opt);
}

bool psi_gauge_invariance_check(const BigradedAlgebraModel& m,
                                const Operator& alpha, const Operator& a,
                                const Operator& l, const Operator& mm) {
  const int n = m.space()->dim();
  const QMat& dl = m.del().matrix();
  const std::vector<QVec> K = dl.kernel();
  const std::vector<QVec> P = dl.column_space();
  if (l.degree() != 0 || !l.in_max_ideal() || !maps_into(l, K, P))
    throw std::invalid_argument("gauge check: l must lie in L^0 tensor m_A");
  if (mm.degree() != -1 || !mm.in_max_ideal() || !maps_into(mm, K, K) ||
      !maps_into(mm, P, P))
    throw std::invalid_argument("gauge check: m must lie in M^{-1} tensor m_A");
  (void)n;

  const EndLie& E = m.end_lie();
  PeriodMatrix base = psi_tilde(m, alpha, a);

  Operator alpha2 = gauge_action_by_conjugation(E, l, alpha);
  Operator exp2 =
      exp_operator(E.diff(mm)).compose(exp_operator(a)).compose(exp_operator(-l));
  PeriodMatrix moved = psi_tilde_exp(m, alpha2, exp2);
  return base == moved;
}

PeriodMatrix phi(const ModelPair& mp, const Vec& xi, const PsiOptions& opt) {
  if (!xi.is_zero() && !xi.homogeneous_of_degree(1))
    throw std::invalid_argument("phi: xi must be a degree-1 polyvector");
  if (!xi.in_max_ideal())
    throw std::invalid_argument("phi: xi must have coefficients in the maximal ideal");
  if (!mp.poly->mc_residual(xi).is_zero())
    throw std::invalid_argument("phi: xi is not a Maurer-Cartan element");

  const Operator i = mp.poly->contraction(xi);
  const Operator del_op = Operator::from_graded_map(mp.forms->del(), xi.ring());
  const Operator l = del_op.compose(i) - i.compose(del_op);  // [del, i], deg 1
  return psi_tilde_exp(*mp.forms, l, exp_operator(i), opt);
}

FirstOrderReport first_order_differential(const ModelPair& mp) {
  FirstOrderReport rep;
  const auto& forms = *mp.forms;
  Cohomology HA(Complex(forms.space(), forms.d()));
  Cohomology HP(Complex(mp.poly->space(), mp.poly->D()));
  auto ring2 = ArtinAlgebra::make({"t"}, {{2}});

  auto t_coeff = [&](const PeriodMatrix& P) {
    QMat out(P.dim(), P.dim());
    for (int k = 0; k < P.dim(); ++k)
      for (int r = 0; r < P.dim(); ++r) out.at(r, k) = P.at(r, k).coeff(1);
    return out;
  };
  auto contraction_on_H = [&](const Vec& xibar) {
    QMat out(HA.dim(), HA.dim());
    for (int k = 0; k < HA.dim(); ++k) {
      Vec w = mp.poly->contraction(xibar).apply(HA.representative(k));
      if (!HA.is_closed(w)) {
        rep.violations.push_back("contraction image of " + HA.classes()[k].name +
                                 " is not closed");
        continue;
      }
      auto coords = HA.project(w);
      for (int r = 0; r < HA.dim(); ++r) out.at(r, k) = coords[r].residue();
    }
    return out;
  };
  auto phi_t_coeff = [&](const QVec& coords) {
    Vec xi(mp.poly->space(), ring2);
    const ArtinElem t = ArtinElem::variable(ring2, 0);
    for (int c = 0; c < HP.dim(); ++c) {
      if (coords[c] == 0) continue;
      const Vec& r = HP.representative(c);
      for (int i = 0; i < xi.dim(); ++i)
        xi[i] = xi[i] + t * (r[i].residue() * coords[c]);
    }
    return t_coeff(phi(mp, xi));
  };

  for (int c = 0; c < HP.dim(); ++c) {
    if (HP.classes()[c].deg != 1) continue;
    rep.class_names.push_back(HP.classes()[c].name);
    QVec e(HP.dim(), Rat(0));
    e[c] = Rat(1);
    QMat diff = phi_t_coeff(e);
    QMat contr = contraction_on_H(HP.representative(c));
    rep.differential.push_back(diff);
    rep.contraction.push_back(contr);
    if (!(diff == contr))
      rep.violations.push_back("differential of phi differs from contraction at " +
                               HP.classes()[c].name);
  }
  return rep;
}

ObstructionReport obstruction_subspace(const ModelPair& mp) {
  ObstructionReport rep;
  const auto& forms = *mp.forms;
  Cohomology HA(Complex(forms.space(), forms.d()));
  Cohomology HP(Complex(mp.poly->space(), mp.poly->D()));

  std::vector<QVec> pairing_cols;
  std::vector<int> class_ids;
  for (int c = 0; c < HP.dim(); ++c) {
    if (HP.classes()[c].deg != 2) continue;
    class_ids.push_back(c);
    rep.class_names.push_back(HP.classes()[c].name);
    QMat M(HA.dim(), HA.dim());
    for (int k = 0; k < HA.dim(); ++k) {
      Vec w = mp.poly->contraction(HP.representative(c)).apply(HA.representative(k));
      if (!HA.is_closed(w))
        throw std::runtime_error("obstruction pairing image is not closed");
      auto coords = HA.project(w);
      for (int r = 0; r < HA.dim(); ++r) M.at(r, k) = coords[r].residue();
    }
    pairing_cols.push_back(flatten_qmat(M));
  }
  if (class_ids.empty()) return rep;
  QMat big = QMat::from_columns(pairing_cols, HA.dim() * HA.dim());
  rep.kernel = big.kernel();
  return rep;
}

FiltrationSubspace hodge_filtration(const BigradedAlgebraModel& model, int m) {
  if (m < 0) throw std::invalid_argument("filtration level must be nonnegative");
  const SpacePtr& sp = model.space();
  Cohomology H(Complex(sp, model.d()));

  std::vector<int> fidx;
  for (int i = 0; i < sp->dim(); ++i)
    if ((*sp)[i].bideg->first >= m) fidx.push_back(i);

  // d-closed vectors supported on the filtration step.
  QMat restr(sp->dim(), static_cast<int>(fidx.size()));
  for (size_t c = 0; c < fidx.size(); ++c)
    for (int r = 0; r < sp->dim(); ++r)
      restr.at(r, static_cast<int>(c)) = model.d().matrix().at(r, fidx[c]);
  std::vector<QVec> classes;
  const auto q = ArtinAlgebra::rationals();
  for (const QVec& k : restr.kernel()) {
    Vec v(sp, q);
    for (size_t c = 0; c < fidx.size(); ++c)
      v[fidx[c]] = ArtinElem::scalar(q, k[c]);
    auto coords = H.project(v);
    QVec hc(H.dim());
    for (int r = 0; r < H.dim(); ++r) hc[r] = coords[r].residue();
    classes.push_back(std::move(hc));
  }
  FiltrationSubspace F;
  F.m = m;
  F.basis = canonical_span(classes, H.dim());
  return F;
}

std::vector<std::vector<ArtinElem>> grassmann_project(const PeriodMatrix& P,
                                                      const FiltrationSubspace& F) {
  const ArtinPtr& ring = P.ring();
  std::vector<std::vector<ArtinElem>> cols;
  for (const QVec& f : F.basis) {
    std::vector<ArtinElem> coords;
    for (const Rat& r : f) coords.push_back(ArtinElem::scalar(ring, r));
    cols.push_back(P.apply(coords));
  }

  // Unit-pivot column echelon reduction, deterministic in the row order.
  size_t lead = 0;
  for (int r = 0; r < P.dim() && lead < cols.size(); ++r) {
    size_t pick = cols.size();
    for (size_t j = lead; j < cols.size(); ++j)
      if (cols[j][r].residue() != 0) {
        pick = j;
        break;
      }
    if (pick == cols.size()) continue;
    std::swap(cols[lead], cols[pick]);
    const ArtinElem inv = artin_inverse(cols[lead][r]);
    for (int i = 0; i < P.dim(); ++i) cols[lead][i] = cols[lead][i] * inv;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (j == lead || cols[j][r].is_zero()) continue;
      const ArtinElem c = cols[j][r];
      for (int i = 0; i < P.dim(); ++i)
        cols[j][i] = cols[j][i] - c * cols[lead][i];
    }
    ++lead;
  }
  return cols;
}

bool period_theorem_check(const ModelPair& mp, const Vec& xi, int m) {
  for (int i = 0; i < xi.dim(); ++i)
    if (!xi[i].is_zero() && mp.poly->bidegree(i) != std::make_pair(-1, 1))
      throw std::invalid_argument(
          "period theorem check: xi must be concentrated in bidegree (-1,1)");
  const ArtinPtr& ring = xi.ring();
  const auto& forms = *mp.forms;
  const SpacePtr& sp = forms.space();

  PeriodMatrix P = phi(mp, xi);
  FiltrationSubspace F = hodge_filtration(forms, m);

  // Left side: the A-module P(H*(F^m)).
  std::vector<std::vector<ArtinElem>> lhs_cols;
  for (const QVec& f : F.basis) {
    std::vector<ArtinElem> coords;
    for (const Rat& r : f) coords.push_back(ArtinElem::scalar(ring, r));
    lhs_cols.push_back(P.apply(coords));
  }
  const int h = P.dim();
  std::vector<QVec> lhs = module_flat_span(lhs_cols, ring, h);

  // Right side: classes of d-closed elements of e^{i_xi}(F^m tensor A).
  const Operator E = exp_operator(mp.poly->contraction(xi));
  Cohomology H(Complex(sp, forms.d()));
  std::vector<int> fidx;
  for (int i = 0; i < sp->dim(); ++i)
    if ((*sp)[i].bideg->first >= m) fidx.push_back(i);

  std::vector<Vec> gens;  // e^{i_xi}(basis form * monomial)
  for (int i : fidx)
    for (int mono = 0; mono < ring->dim(); ++mono) {
      std::vector<Rat> cs(ring->dim(), Rat(0));
      cs[mono] = Rat(1);
      gens.push_back(E.apply(Vec::basis(sp, ring, i)).scaled(ArtinElem(ring, cs)));
    }
  std::vector<QVec> closure_cols;
  for (const Vec& g : gens) closure_cols.push_back(forms.d().apply(g).flatten());
  QMat closure = QMat::from_columns(closure_cols, static_cast<int>(
                                                      gens.empty()
                                                          ? 0
                                                          : gens[0].flatten().size()));
  std::vector<std::vector<ArtinElem>> rhs_cols;
  for (const QVec& c : closure.kernel()) {
    Vec v(sp, ring);
    for (size_t j = 0; j < gens.size(); ++j)
      if (c[j] != 0) v = v + gens[j] * c[j];
    rhs_cols.push_back(H.project(v));
  }
  std::vector<QVec> rhs = module_flat_span(rhs_cols, ring, h);

  return lhs == rhs;
}

}  // namespace conedef
