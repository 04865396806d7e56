#pragma once

#include "conedef/cone.hpp"

namespace conedef {

/// A candidate Cartan homotopy: a degree -1 linear map i from L to M.
/// Nothing is verified at construction; verification is an operation.
struct CartanCandidate {
  DglaPtr source; // L
  DglaPtr target; // M
  GradedMap i;    // shift -1, L.space -> M.space

  CartanCandidate(DglaPtr src, DglaPtr dst, GradedMap map);
};

/// The induced map l: a -> d_M i_a + i_{d_L a}, a shift-0 graded map.  If
/// the candidate passes check_cartan (or even just the pair identity), l
/// is a DGLA morphism.
GradedMap induced_l(const CartanCandidate& c);

/// Strict Cartan homotopy check on all basis pairs:
///   i_{[a,b]} = [i_a, l_b]    and    [i_a, i_b] = 0.
CheckReport check_cartan(const CartanCandidate& c);

/// Weak Cartan homotopy check: the pair identity i_{[a,b]} = [i_a, l_b]
/// plus the symmetrized triple condition.  The triple condition is
/// equivalent to mu_3 of the cone of l vanishing on all lifted triples
/// (a, i_a); routing it through the cone reuses the frozen mu_n sign
/// convention instead of introducing a second Koszul bookkeeping.
CheckReport check_weak_cartan(const CartanCandidate& c);

/// The lift a -> (a, i_a) of the identity of L into the cone of l,
/// constructible only from a verified weak candidate.  Construction
/// re-verifies that the lift commutes with mu1 and mu2 and annihilates
/// mu3 and mu4 on basis tuples.
class ConeLift {
public:
  explicit ConeLift(const CartanCandidate& c);

  const Cone& cone() const { return cone_; }
  const GradedMap& l() const { return l_; }

  /// (a, i_a) with the cone degree of a homogeneous a.
  ConeElem apply(const Vec& a) const;

  /// MC pushforward xi -> (xi, e^{i_xi}); xi must be a degree-1 element
  /// with coefficients in m_A.
  MCChiElem push_mc(const Vec& xi) const;

private:
  CartanCandidate c_;
  GradedMap l_;
  Cone cone_;
};

/// Phi: N -> cone of (chi: L_sub -> M) for a strict Cartan homotopy i on
/// l: N -> M whose image lies in the sub-DGLA L_sub, a -> (l_a, i_a).
/// Construction verifies the strict identities, that incl embeds L_sub as
/// a sub-DGLA of M, and that l factors through it.
class PhiMorphism {
public:
  PhiMorphism(const CartanCandidate& c, DglaPtr sub, GradedMap incl);

  const Cone& cone() const { return cone_; }
  /// l with values in L_sub coordinates (incl . l_factored == induced_l).
  const GradedMap& l_factored() const { return l_fac_; }

  /// (l_a, i_a) in the cone of chi.
  ConeElem apply(const Vec& a) const;

  /// MC pushforward xi -> (l_xi, e^{i_xi}).
  MCChiElem push_mc(const Vec& xi) const;

private:
  CartanCandidate c_;
  DglaPtr sub_;
  GradedMap incl_;
  GradedMap l_fac_;
  Cone cone_;
};

/// Post-composition with a DGLA morphism g: M -> M': g.i is a (weak)
/// Cartan homotopy for g.l whenever i was one for l.
CartanCandidate compose_with_morphism(const CartanCandidate& c,
                                      const DglaMorphism& g);

} // namespace conedef
