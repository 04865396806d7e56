#pragma once

#include "conedef/endlie.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>

namespace conedef {

/// Finite bigraded graded-commutative algebra with two anticommuting
/// square-zero differentials: del of bidegree (1,0) and delbar of (0,1).
/// The basis is bigraded; products are stored as rational structure
/// constants with a distinguished unit.
class BigradedAlgebraModel {
public:
  /// Validates shapes (square matrices of the right sizes, a unit index in
  /// range, bigraded space); the algebraic axioms are deferred to check().
  BigradedAlgebraModel(SpacePtr space, GradedMap del, GradedMap delbar,
                       std::vector<std::vector<QVec>> product, int unit_index);

  const SpacePtr& space() const { return sp_; }
  const GradedMap& del() const { return del_; }
  const GradedMap& delbar() const { return delbar_; }
  /// Total differential del + delbar.
  const GradedMap& d() const { return d_; }
  int unit_index() const { return unit_; }

  /// Coordinates of (basis i)*(basis j).
  const QVec& product_coords(int i, int j) const { return prod_[i][j]; }
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec unit(ArtinPtr alg) const;

  /// End*(A) with differential [del+delbar, -].
  const EndLie& end_lie() const { return *end_; }

  /// All structural axioms: squares and anticommutation of the two
  /// differentials, their bihomogeneity, graded Leibniz for both,
  /// associativity, graded commutativity, and the unit law.
  CheckReport check() const;

private:
  SpacePtr sp_;
  GradedMap del_, delbar_, d_;
  std::vector<std::vector<QVec>> prod_;
  int unit_ = 0;
  std::shared_ptr<const EndLie> end_;
};

using FormModelPtr = std::shared_ptr<const BigradedAlgebraModel>;

/// Cell description of a synthetic bicomplex algebra: each dot contributes
/// one cohomology class, each square an acyclic block {c, del c, delbar c,
/// del delbar c} anchored at the given bidegree.  Products of non-unit
/// cells vanish.
struct DotSquareSpec {
  std::vector<std::pair<int, int>> dots;    // must include (0,0) (the unit)
  std::vector<std::pair<int, int>> squares; // anchor bidegrees
};

/// Builds the algebra of a spec.  Throws if no dot sits at (0,0).
BigradedAlgebraModel build_dot_square_algebra(const DotSquareSpec& spec);

/// Deterministic pseudo-random spec (always containing the unit dot) with
/// bidegrees within [0,3] x [0,3].
DotSquareSpec random_dot_square_spec(std::uint64_t seed);

struct LemmaReport {
  std::vector<std::string> violations;
  /// A form in ker del ^ ker delbar ^ im d but not in im (del delbar),
  /// when one exists.
  std::optional<Vec> witness;
  bool ok() const { return violations.empty(); }
};

/// Checks, per bidegree, ker del ^ ker delbar ^ im d <= im (del delbar)
/// by exact linear algebra.
LemmaReport check_deldelbar_lemma(const BigradedAlgebraModel& m);

/// Constant-coefficient polyvector fields paired with a form model.  The
/// basis monomials are wedges of dzbar generators (bidegree (0,1)) and
/// holomorphic coordinate fields (bidegree (-1,0)); the stored grading is
/// shifted so that a monomial of bidegree (a,b) sits in degree a+b+1 and
/// classical deformation directions are degree 1.  bidegree() exposes the
/// unshifted (a,b).
class PolyModel {
public:
  PolyModel(SpacePtr space, FormModelPtr forms,
            std::vector<std::pair<int, int>> bidegrees,
            std::vector<std::vector<QVec>> wedge_table,
            std::vector<std::vector<QVec>> sn_table, GradedMap D,
            std::vector<GradedMap> contraction_table);

  const SpacePtr& space() const { return sp_; }
  const FormModelPtr& forms() const { return forms_; }
  std::pair<int, int> bidegree(int i) const { return bideg_[i]; }
  /// The differential (equal to -delbar on coefficients; zero on tori).
  const GradedMap& D() const { return D_; }

  Vec wedge(const Vec& x, const Vec& y) const;
  const QVec& wedge_coords(int i, int j) const { return wedge_[i][j]; }
  /// Schouten-Nijenhuis bracket (identically zero on constant fields).
  Vec sn_bracket(const Vec& x, const Vec& y) const;
  const QVec& sn_coords(int i, int j) const { return sn_[i][j]; }
  /// D xi + (1/2)[xi,xi]; must vanish for arguments pushed through phi.
  Vec mc_residual(const Vec& xi) const;

  /// Contraction operator of a basis monomial, as a rational graded map of
  /// the form space (shift = degree - 1).
  const GradedMap& contraction_of_basis(int i) const { return contr_[i]; }
  /// A-linear contraction of a homogeneous element; throws on mixed degree.
  Operator contraction(const Vec& xi) const;
  /// i_{x1} . i_{x2} . ... . i_{xn}; graded symmetric up to the shifted
  /// Koszul sign.
  Operator iterated_contraction(const std::vector<Vec>& xs) const;

private:
  SpacePtr sp_;
  FormModelPtr forms_;
  std::vector<std::pair<int, int>> bideg_;
  std::vector<std::vector<QVec>> wedge_, sn_;
  GradedMap D_;
  std::vector<GradedMap> contr_;
};

using PolyModelPtr = std::shared_ptr<const PolyModel>;

struct ModelPair {
  FormModelPtr forms;
  PolyModelPtr poly;
};

/// Pairs a dot/square algebra with a synthetic polyvector model: one
/// generator of bidegree (-1,1) per pair of harmonic dots (p,q) ->
/// (p-1,q+1), contracting the first dot into the second.  Pairs whose
/// target dot is the source of another generator are skipped, so all
/// generator composites vanish and the trivial wedge table is
/// multiplicative.  D = 0 and all brackets vanish.
ModelPair dot_square_model_pair(const DotSquareSpec& spec);

/// Invariant forms and constant polyvector fields of a complex n-torus,
/// 1 <= n <= 3: forms are the exterior algebra on dz_i, dzb_i with
/// del = delbar = 0; polyvectors the exterior algebra on dzb_j and v_i
/// (v_i contracting dz_i), with D = 0 and vanishing brackets.
ModelPair build_torus_model(int n);

/// The contraction identities certifying i as a Cartan homotopy for
/// l_x = [del, i_x]:
///   i_{D x} = -[delbar, i_x],  i_{[x,y]} = [i_x, [del, i_y]],
///   [i_x, i_y] = 0,  and multiplicativity i_{x^y} = i_x i_y,
/// verified on all basis pairs of the polyvector space.
CheckReport cartan_identities_check(const PolyModel& p);

} // namespace conedef
