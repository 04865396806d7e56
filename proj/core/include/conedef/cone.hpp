#pragma once

#include "conedef/dgla.hpp"
#include "conedef/endlie.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace conedef {

Rat binomial(int n, int k);

/// Bernoulli numbers with B_1 = -1/2, via the recurrence
/// sum_{k=0}^{n} C(n+1,k) B_k = 0.  Values are cached.
Rat bernoulli(int n);

/// Independent computation (Akiyama-Tanigawa scheme), for cross-checking.
Rat bernoulli_akiyama_tanigawa(int n);

namespace detail {
inline Vec ctx_zero(const Dgla& L, const ArtinPtr& r, int) { return L.zero(r); }
inline Operator ctx_zero(const EndLie& E, const ArtinPtr& r, int deg) {
  return E.zero(r, deg);
}
} // namespace detail

/// Element (l, m) of the cone of chi: L -> M, of declared cone degree
/// `deg`: l in L^deg, m in M^{deg-1}.
template <class EL, class EM>
struct ConeElemT {
  EL l;
  EM m;
  int deg = 0;

  const ArtinPtr& ring() const { return l.ring(); }
  bool is_zero() const { return l.is_zero() && m.is_zero(); }

  ConeElemT operator+(const ConeElemT& o) const {
    if (deg != o.deg) {
      if (is_zero()) return o;
      if (o.is_zero()) return *this;
      throw std::invalid_argument("cone element degree mismatch");
    }
    return {l + o.l, m + o.m, deg};
  }
  ConeElemT operator-(const ConeElemT& o) const { return *this + (o * Rat(-1)); }
  ConeElemT operator*(const Rat& s) const { return {l * s, m * s, deg}; }
  bool operator==(const ConeElemT& o) const {
    return (*this - o).is_zero();
  }
};

/// Pair (x, e^a) with x in L^1 (x) m_A, a in M^0 (x) m_A; a is stored as
/// the exponent.
template <class EL, class EM>
struct MCChiT {
  EL x;
  EM a;
};

/// The suspended cone of a morphism chi: L -> M of DGLA-like contexts,
/// carrying the higher brackets mu_n.  Contexts are stored by value.
template <class CtxL, class CtxM>
class ConeT {
public:
  using ElemL = typename CtxL::Elem;
  using ElemM = typename CtxM::Elem;
  using Elem = ConeElemT<ElemL, ElemM>;
  using MCChi = MCChiT<ElemL, ElemM>;
  using Chi = std::function<ElemM(const ElemL&)>;

  ConeT(CtxL L, CtxM M, Chi chi)
      : L_(std::move(L)), M_(std::move(M)), chi_(std::move(chi)) {}

  const CtxL& algL() const { return L_; }
  const CtxM& algM() const { return M_; }
  ElemM chi(const ElemL& l) const { return chi_(l); }

  /// mu_1(l, m) = (dl, chi(l) - dm).
  Elem mu1(const Elem& c) const {
    return {L_.diff(c.l), chi_(c.l) - M_.diff(c.m), c.deg + 1};
  }

  /// mu_2((l1,m1),(l2,m2)) =
  ///   ([l1,l2], 1/2 [m1, chi(l2)] + (-1)^{deg c1} 1/2 [chi(l1), m2]).
  Elem mu2(const Elem& c1, const Elem& c2) const {
    auto mpart = M_.bracket(c1.m, chi_(c2.l)) * rat(1, 2) +
                 M_.bracket(chi_(c1.l), c2.m) * rat(c1.deg % 2 ? -1 : 1, 2);
    return {L_.bracket(c1.l, c2.l), std::move(mpart), c1.deg + c2.deg};
  }

  /// mu_n, n >= 3:  L-component zero;  M-component
  ///   B_{n-1}/(n-1)! sum_{s in S_n} eps(s)
  ///       [m_{s(1)}, [..., [m_{s(n-1)}, chi(l_{s(n)})]...]]
  /// with eps(s) = sgn(s) * Koszul sign on the (unshifted) cone degrees
  ///   * (-1)^{(n-1)(n-2)/2 + sum_{i<n} (n-1-i) deg(c_{s(i)})}.
  /// The trailing factor is pinned jointly by the generalized Jacobi
  /// identities and the Maurer-Cartan correspondence tests (cone MC <->
  /// pair equations) and must not change.
  Elem mu_n(const std::vector<Elem>& c) const {
    const int n = static_cast<int>(c.size());
    if (n < 3) throw std::invalid_argument("mu_n needs arity >= 3");
    std::vector<int> degs(n);
    int total = 0;
    for (int i = 0; i < n; ++i) { degs[i] = c[i].deg; total += c[i].deg; }
    const int outdeg = total + 2 - n;
    const auto& ring = c[0].ring();
    auto acc = detail::ctx_zero(M_, ring, outdeg - 1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      auto nest = chi_(c[perm[n - 1]].l);
      bool dead = nest.is_zero();
      for (int i = n - 2; !dead && i >= 0; --i) {
        if (c[perm[i]].m.is_zero()) { dead = true; break; }
        nest = M_.bracket(c[perm[i]].m, nest);
        dead = nest.is_zero();
      }
      if (dead) continue;
      int ex = (n - 1) * (n - 2) / 2;
      for (int i = 0; i + 1 < n; ++i) ex += (n - 2 - i) * degs[perm[i]];
      int eps = permutation_sign(perm) * koszul_sign(perm, degs) *
                (ex % 2 ? -1 : 1);
      acc = acc + nest * Rat(eps);
    } while (std::next_permutation(perm.begin(), perm.end()));
    acc = acc * (bernoulli(n - 1) / factorial(n - 1));
    return {detail::ctx_zero(L_, ring, outdeg), std::move(acc), outdeg};
  }

  /// Bracket of any arity (dispatch to mu1 / mu2 / mu_n).
  Elem mu(const std::vector<Elem>& c) const {
    switch (c.size()) {
      case 0: throw std::invalid_argument("mu needs arity >= 1");
      case 1: return mu1(c[0]);
      case 2: return mu2(c[0], c[1]);
      default: return mu_n(c);
    }
  }

  /// L-infinity Maurer-Cartan residual sum_{n>=1} mu_n(c,...,c)/n!, finite
  /// because mu_n(c,...,c) has coefficients in m_A^n.
  Elem mc_residual_cone(const Elem& c) const {
    auto res = mu1(c) + mu2(c, c) * rat(1, 2);
    const int N = c.ring()->nilpotency_index();
    std::vector<Elem> args(2, c);
    for (int n = 3; n < N; ++n) {
      args.push_back(c);
      res = res + mu_n(args) * (1 / factorial(n));
    }
    return res;
  }

  /// Generalized Jacobi defect at the given homogeneous arguments:
  ///   sum_{i+j=n+1} (-1)^{i} sum_{(i,n-i)-unshuffles s}
  ///     sgn(s) eps(s) mu_j(mu_i(x_{s(1)},...,x_{s(i)}), x_{s(i+1)},...)
  /// Vanishes identically in an L-infinity algebra.
  Elem linfty_defect(const std::vector<Elem>& x) const {
    const int n = static_cast<int>(x.size());
    std::vector<int> degs(n);
    int total = 0;
    for (int i = 0; i < n; ++i) { degs[i] = x[i].deg; total += x[i].deg; }
    const int outdeg = total + 3 - n;
    const auto& ring = x[0].ring();
    Elem acc{detail::ctx_zero(L_, ring, outdeg),
             detail::ctx_zero(M_, ring, outdeg - 1), outdeg};
    for (int i = 1; i <= n; ++i) {
      const int pref = i % 2 ? -1 : 1;
      // enumerate sorted index subsets of size i
      std::vector<int> idx(i);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::vector<int> perm(idx);
        for (int k = 0; k < n; ++k)
          if (std::find(idx.begin(), idx.end(), k) == idx.end())
            perm.push_back(k);
        int sign = pref * permutation_sign(perm) * koszul_sign(perm, degs);
        std::vector<Elem> inner_args;
        for (int k = 0; k < i; ++k) inner_args.push_back(x[perm[k]]);
        auto inner = mu(inner_args);
        if (!inner.is_zero()) {
          std::vector<Elem> outer_args{std::move(inner)};
          for (int k = i; k < n; ++k) outer_args.push_back(x[perm[k]]);
          acc = acc + mu(outer_args) * Rat(sign);
        }
        // next combination
        int p = i - 1;
        while (p >= 0 && idx[p] == n - i + p) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < i; ++q) idx[q] = idx[q - 1] + 1;
      }
    }
    return acc;
  }

  MCChi to_mcchi(const Elem& c) const { return {c.l, c.m}; }
  Elem from_mcchi(const MCChi& e) const { return {e.x, e.a, 1}; }

  struct ChiResiduals {
    ElemL mc;    // dx + 1/2 [x,x]
    ElemM gauge; // e^a * chi(x)
    bool ok() const { return mc.is_zero() && gauge.is_zero(); }
  };

  ChiResiduals mc_chi_residuals(const MCChi& e) const {
    return {mc_residual(L_, e.x), gauge_action(M_, e.a, chi_(e.x))};
  }

  /// Gauge pair (e^l, e^{dm}) acting on (x, e^a):
  ///   (e^l * x,  e^{dm . a . (-chi(l))})  with . the BCH product.
  MCChi gauge_act_chi(const ElemL& l, const ElemM& m, const MCChi& e) const {
    return gauge_act_chi_exponents(l, M_.diff(m), e);
  }

  /// Same action with the degree-0 exponent u given directly (u plays the
  /// role of dm; BCH products of such exponents are again valid exponents).
  MCChi gauge_act_chi_exponents(const ElemL& l, const ElemM& u, const MCChi& e) const {
    auto new_x = gauge_action(L_, l, e.x);
    auto new_a = bch(M_, bch(M_, u, e.a), chi_(l) * Rat(-1));
    return {std::move(new_x), std::move(new_a)};
  }

private:
  CtxL L_;
  CtxM M_;
  Chi chi_;
};

using Cone = ConeT<Dgla, Dgla>;
using ConeElem = Cone::Elem;
using MCChiElem = Cone::MCChi;

/// Builds a cone from a validated DGLA morphism given by a degree-0 map.
/// Throws if the map is not a morphism.
Cone make_cone(const Dgla& L, const Dgla& M, const GradedMap& chi_map);

/// Basis of the cone as a graded space: C^i = L^i (+) M^{i-1}, basis names
/// prefixed "l:" / "m:".
SpacePtr cone_space(const Dgla& L, const Dgla& M);

/// Basis element of the cone (index into cone_space order).
ConeElem cone_basis(const Dgla& L, const Dgla& M, const ArtinPtr& ring, int idx);

/// The rational matrix of mu1 on cone_space (shift +1); squares to zero.
GradedMap mu1_matrix(const Cone& cone);

} // namespace conedef
