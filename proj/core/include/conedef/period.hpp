#pragma once

#include "conedef/models.hpp"

namespace conedef {

/// A graded Lie subalgebra of End*(A) cut out by linear constraints: an
/// abstract copy with structure constants plus the rational operator
/// realizing each basis element.
struct EndSubalgebra {
  DglaPtr lie;                 // may have dimension zero
  std::vector<GradedMap> ops;  // ops[i] realizes basis element i

  /// A-linear realization of a coordinate vector over lie->space().
  Operator realize(const Vec& x, const SpacePtr& forms_space) const;
  /// Membership of an operator in the A-span of the basis.
  bool contains(const Operator& f) const;
};

struct ChiSubalgebras {
  EndSubalgebra L;  // f(ker del) <= del A
  EndSubalgebra M;  // f(ker del) <= ker del and f(del A) <= del A
};

/// Computes both subalgebras by exact linear algebra and verifies closure
/// under the differential and the bracket (throws on failure, which would
/// signal a bug rather than bad input).
ChiSubalgebras build_chi(const BigradedAlgebraModel& m);

/// Automorphism of H*(A,d) with entries in an Artin ring: the identity
/// modulo the maximal ideal.  Columns follow the class order of
/// Cohomology(A, d).
class PeriodMatrix {
public:
  PeriodMatrix(std::shared_ptr<const Cohomology> H, ArtinPtr ring,
               std::vector<std::vector<ArtinElem>> columns);

  const std::shared_ptr<const Cohomology>& cohomology() const { return H_; }
  const ArtinPtr& ring() const { return ring_; }
  int dim() const { return static_cast<int>(cols_.size()); }
  /// Entry (row r, column k): coefficient of class r in the image of
  /// class k.
  const ArtinElem& at(int r, int k) const { return cols_[k][r]; }
  const std::vector<ArtinElem>& column(int k) const { return cols_[k]; }

  /// Image of a coordinate vector in the class basis.
  std::vector<ArtinElem> apply(const std::vector<ArtinElem>& coords) const;

  bool residue_is_identity() const;
  bool operator==(const PeriodMatrix& o) const;

  std::string str() const;

private:
  std::shared_ptr<const Cohomology> H_;
  ArtinPtr ring_;
  std::vector<std::vector<ArtinElem>> cols_;
};

/// Recomputation knobs for the choice-independence tests: scan pivot
/// columns backwards and/or shift the del-closed representative by a
/// nullspace direction.  The resulting matrix must not change.
struct PsiOptions {
  bool reverse_pivots = false;
  bool alternate_omega0 = false;
};

/// The automorphism [omega] -> [e^a(omega_0 - del beta)]: omega_0 a
/// del-closed representative, beta found by m-adic order-by-order lifting
/// of d e^a(omega_0 - del beta) = 0.  Verifies that (alpha, e^a) is a
/// Maurer-Cartan pair: alpha in L^1 tensor m_A and d e^a = e^a (d + alpha).
PeriodMatrix psi_tilde(const BigradedAlgebraModel& m, const Operator& alpha,
                       const Operator& a, const PsiOptions& opt = {});

/// Same with the exponential given directly (it need not be exp of a
/// nilpotent in m when it arises as a product of such exponentials).
PeriodMatrix psi_tilde_exp(const BigradedAlgebraModel& m, const Operator& alpha,
                           const Operator& exp_a, const PsiOptions& opt = {});

/// psi_tilde of (alpha, e^a) against psi_tilde of the gauge translate by
/// (e^l, e^{d mm}): alpha' = e^l * alpha, e^{a'} = e^{d mm} e^a e^{-l}.
bool psi_gauge_invariance_check(const BigradedAlgebraModel& m,
                                const Operator& alpha, const Operator& a,
                                const Operator& l, const Operator& mm);

/// The period map at a Maurer-Cartan polyvector xi: psi_tilde of
/// (l_xi, e^{i_xi}) with l_xi = [del, i_xi].
PeriodMatrix phi(const ModelPair& mp, const Vec& xi, const PsiOptions& opt = {});

/// The t-coefficient of phi(t xibar) over Q[t]/(t^2) for every degree-1
/// class xibar of (Poly, D), compared with the contraction-induced map on
/// cohomology.
struct FirstOrderReport {
  std::vector<std::string> class_names;  // H^1(Poly) classes
  std::vector<QMat> differential;        // t-coefficient of phi
  std::vector<QMat> contraction;         // induced by i on cohomology
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
FirstOrderReport first_order_differential(const ModelPair& mp);

/// Joint kernel, inside H^2(Poly, D), of the contraction pairings into
/// endomorphisms of H*(A): the subspace allowed to carry obstructions.
struct ObstructionReport {
  std::vector<std::string> class_names;  // H^2(Poly) classes
  std::vector<QVec> kernel;              // coordinates in that class basis
};
ObstructionReport obstruction_subspace(const ModelPair& mp);

/// Span, inside H*(A), of the classes of d-closed forms of bidegree
/// p >= m.
struct FiltrationSubspace {
  int m = 0;
  std::vector<QVec> basis;  // coordinates in the H*(A) class basis
};
FiltrationSubspace hodge_filtration(const BigradedAlgebraModel& model, int m);

/// Image P(F) as a list of coordinate columns over the ring of P, reduced
/// deterministically (unit-pivot column echelon form).
std::vector<std::vector<ArtinElem>> grassmann_project(const PeriodMatrix& P,
                                                      const FiltrationSubspace& F);

/// For a Maurer-Cartan xi concentrated in bidegree (-1,1): compares
/// phi(xi)(H*(F^m)) with the classes of d-closed elements of
/// e^{i_xi}(F^m tensor A), as A-submodules.
bool period_theorem_check(const ModelPair& mp, const Vec& xi, int m);

}  // namespace conedef
