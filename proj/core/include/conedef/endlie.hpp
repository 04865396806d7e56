#pragma once

#include "conedef/dgla.hpp"

namespace conedef {

/// Degree-homogeneous endomorphism of a graded space, with entries in an
/// Artin coefficient ring.  Stored dense over the total basis.
class Operator {
public:
  Operator() = default;
  Operator(SpacePtr sp, ArtinPtr alg, int deg);

  static Operator identity(SpacePtr sp, ArtinPtr alg);
  /// Lifts a rational graded endomap (source == target) to A-coefficients.
  static Operator from_graded_map(const GradedMap& f, ArtinPtr alg);

  const SpacePtr& space() const { return sp_; }
  const ArtinPtr& ring() const { return alg_; }
  int degree() const { return deg_; }

  ArtinElem& at(int i, int j) { return m_[i][j]; }
  const ArtinElem& at(int i, int j) const { return m_[i][j]; }

  Vec apply(const Vec& v) const;
  Operator compose(const Operator& o) const;

  Operator operator+(const Operator& o) const;
  Operator operator-(const Operator& o) const;
  Operator operator-() const;
  Operator operator*(const Rat& s) const;
  Operator scaled(const ArtinElem& s) const;
  bool operator==(const Operator& o) const;

  bool is_zero() const;
  /// All entries in m_A (so exponentials are finite sums).
  bool in_max_ideal() const;

  /// Entries landing outside the declared degree shift (should be none).
  std::vector<std::string> structure_violations() const;

  /// Drops entries that break the declared shift; used when slicing an
  /// inhomogeneous expression into homogeneous components.
  static Operator homogeneous_part(const Operator& raw_as_deg, int deg);

  /// m-adic graded part of every entry.
  Operator graded_part(int k) const;

  QMat residue_matrix() const; // entries mod m_A

private:
  SpacePtr sp_;
  ArtinPtr alg_;
  int deg_ = 0;
  std::vector<std::vector<ArtinElem>> m_;
};

/// The DGLA Hom*(V,V) of a complex (V, d): bracket the graded commutator,
/// differential [d, -].  Satisfies the same context interface as Dgla, with
/// Elem = Operator.
class EndLie {
public:
  using Elem = Operator;

  EndLie(SpacePtr sp, GradedMap d); // d: shift +1, d^2 = 0

  const SpacePtr& space() const { return sp_; }
  const GradedMap& d_underlying() const { return dV_; }

  Operator d_as_operator(ArtinPtr alg) const {
    return Operator::from_graded_map(dV_, std::move(alg));
  }

  Operator diff(const Operator& f) const;
  Operator bracket(const Operator& f, const Operator& g) const;
  Operator zero(ArtinPtr alg, int deg = 0) const { return Operator(sp_, std::move(alg), deg); }

  /// Basis operator E_{ij}: e_j -> e_i (matrix unit), degree inferred.
  Operator matrix_unit(ArtinPtr alg, int i, int j) const;

private:
  SpacePtr sp_;
  GradedMap dV_;
};

/// Structure constants of Hom*(V,V) on the matrix-unit basis (names
/// "E_<i>_<j>"), as a validated Dgla.  Intended for small spaces.
Dgla to_dgla(const EndLie& E);

/// Finite operator exponential; requires entries in m_A unless the degree is
/// such that powers vanish anyway.  exp(a) = sum a^k / k!.
Operator exp_operator(const Operator& a);

/// Conjugation form of the gauge action in Hom*(V,V):
/// e^a * y = e^a (d + y) e^{-a} - d.   Used as the cross-check oracle for
/// the abstract series.
Operator gauge_action_by_conjugation(const EndLie& E, const Operator& a,
                                     const Operator& y);

} // namespace conedef
