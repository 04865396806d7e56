#pragma once

#include "conedef/artin.hpp"
#include "conedef/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace conedef {

struct BasisElem {
  std::string name;
  int deg = 0;
  std::optional<std::pair<int, int>> bideg; // (p,q) with p+q = deg
};

/// Finite-dimensional graded (optionally bigraded) vector space with a
/// named basis.  Basis order is the declaration order and is part of the
/// value: all matrices and serializations refer to it.
class GradedSpace {
public:
  static std::shared_ptr<const GradedSpace> make(std::vector<BasisElem> basis);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisElem>& basis() const { return basis_; }
  const BasisElem& operator[](int i) const { return basis_[i]; }
  int degree(int i) const { return basis_[i].deg; }
  std::optional<int> index_of(const std::string& name) const;
  std::vector<int> indices_of_degree(int deg) const;
  std::vector<int> degrees_present() const;
  bool bigraded() const { return bigraded_; }

private:
  std::vector<BasisElem> basis_;
  std::map<std::string, int> index_;
  bool bigraded_ = false;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

/// Element of V (x) A for a graded space V and Artin coefficient ring A.
/// Plain rational elements use A = Q.
class Vec {
public:
  Vec() = default;
  Vec(SpacePtr sp, ArtinPtr alg);
  Vec(SpacePtr sp, std::vector<ArtinElem> coords);

  static Vec basis(SpacePtr sp, ArtinPtr alg, int idx);

  const SpacePtr& space() const { return sp_; }
  const ArtinPtr& ring() const { return alg_; }
  const ArtinElem& operator[](int i) const { return c_[i]; }
  ArtinElem& operator[](int i) { return c_[i]; }
  int dim() const { return static_cast<int>(c_.size()); }

  bool is_zero() const;
  /// All coefficients in m_A.
  bool in_max_ideal() const;
  /// Degree if homogeneous (zero vector has no degree).
  std::optional<int> degree() const;
  bool homogeneous_of_degree(int d) const;

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  Vec operator*(const Rat& s) const;
  Vec scaled(const ArtinElem& s) const;
  bool operator==(const Vec& o) const;

  /// m-adic graded part of every coefficient.
  Vec graded_part(int k) const;

  /// Flattens to a rational vector over the basis (monomial x basis-elem),
  /// monomials outer, deterministic order.
  QVec flatten() const;
  static Vec unflatten(SpacePtr sp, ArtinPtr alg, const QVec& flat);

  std::string str() const;

private:
  SpacePtr sp_;
  ArtinPtr alg_;
  std::vector<ArtinElem> c_;
};

/// Degree-homogeneous linear map between graded spaces, stored as one dense
/// rational matrix (target dim x source dim); entries between degrees that
/// disagree with the shift must vanish.
class GradedMap {
public:
  GradedMap() = default;
  GradedMap(SpacePtr src, SpacePtr dst, int shift, QMat matrix);
  static GradedMap zero(SpacePtr src, SpacePtr dst, int shift);
  static GradedMap identity(SpacePtr sp);

  const SpacePtr& source() const { return src_; }
  const SpacePtr& target() const { return dst_; }
  int shift() const { return shift_; }
  const QMat& matrix() const { return m_; }
  QMat& matrix() { return m_; }

  Vec apply(const Vec& v) const; // A-linear extension
  GradedMap compose(const GradedMap& inner) const;
  GradedMap operator+(const GradedMap& o) const;
  GradedMap operator-(const GradedMap& o) const;
  GradedMap scaled(const Rat& s) const;
  bool is_zero() const { return m_.is_zero(); }
  bool operator==(const GradedMap& o) const;

  /// Verifies the degree-block structure; lists offending entries.
  std::vector<std::string> structure_violations() const;

private:
  SpacePtr src_, dst_;
  int shift_ = 0;
  QMat m_;
};

/// Koszul sign of a permutation acting on graded symbols: the sign
/// accumulated by moving symbol i past symbol j (i<j, perm puts them out of
/// order), each transposition of symbols of degrees p,q contributing
/// (-1)^{pq}.  `perm[i]` is the 0-based new position ordering: the permuted
/// sequence is (x_{perm[0]}, x_{perm[1]}, ...).  This is the single
/// authoritative sign routine of the project.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees);

/// Plain permutation sign of the same data.
int permutation_sign(const std::vector<int>& perm);

/// A graded space with a square-zero degree +1 differential.
struct Complex {
  SpacePtr space;
  GradedMap d;

  Complex(SpacePtr sp, GradedMap diff);
};

/// Per-degree cohomology of a Complex with explicit representatives and the
/// projection (closed vector -> class coordinates).
class Cohomology {
public:
  explicit Cohomology(const Complex& c);

  struct ClassInfo {
    std::string name; // "H<deg>_<k>" with k the index within the degree
    int deg = 0;
    std::optional<std::pair<int, int>> bideg; // when the representative is bihomogeneous
  };

  int dim() const { return static_cast<int>(classes_.size()); }
  int dim_in_degree(int deg) const;
  const std::vector<ClassInfo>& classes() const { return classes_; }

  /// Representative vector (over Q) of class k.
  const Vec& representative(int k) const { return reps_[k]; }

  /// Coordinates of a d-closed vector in the class basis (A-linear).
  /// Throws if the vector is not closed.
  std::vector<ArtinElem> project(const Vec& closed) const;

  /// d-closedness test.
  bool is_closed(const Vec& v) const;

  const Complex& complex() const { return cx_; }

private:
  Complex cx_;
  std::vector<ClassInfo> classes_;
  std::vector<Vec> reps_;
  // proj_ rows: class coordinates as functionals on the ambient space;
  // exact on ker d, zero on im d.
  QMat proj_;
};

} // namespace conedef
