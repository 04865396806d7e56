#pragma once

#include "conedef/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace conedef {

using Monomial = std::vector<int>; // exponent vector, one entry per variable

/// Local Artinian algebra A = Q[t_1..t_k]/I for a monomial ideal I that
/// contains a power of every variable.  The monomial basis (complement of I)
/// is closed under divisibility and sorted degree-lexicographically, with
/// basis_[0] = 1.
class ArtinAlgebra {
public:
  /// Builds the quotient ring.  `truncation` lists monomial generators of I.
  /// Throws if the quotient would be infinite-dimensional (some variable has
  /// no pure power in I) or a generator is trivial.
  static std::shared_ptr<const ArtinAlgebra>
  make(std::vector<std::string> variables, std::vector<Monomial> truncation);

  /// The base field Q itself (no variables, basis {1}).
  static std::shared_ptr<const ArtinAlgebra> rationals();

  int num_vars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<Monomial>& truncation() const { return trunc_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  /// Smallest N with m_A^N = 0.
  int nilpotency_index() const { return nilpotency_; }

  /// Basis index of a monomial, or nullopt if it lies in the ideal.
  std::optional<int> index_of(const Monomial& m) const;

  /// Product of two basis monomials: basis index, or -1 if it falls in I.
  int mul_table(int i, int j) const { return mul_[i][j]; }

  int total_degree(int basis_idx) const { return degs_[basis_idx]; }

  std::string monomial_string(int basis_idx) const;

  bool same_ring(const ArtinAlgebra& other) const;

private:
  ArtinAlgebra() = default;
  std::vector<std::string> vars_;
  std::vector<Monomial> basis_;
  std::vector<Monomial> trunc_;
  std::map<Monomial, int> index_;
  std::vector<int> degs_;
  std::vector<std::vector<int>> mul_;
  int nilpotency_ = 1;
};

using ArtinPtr = std::shared_ptr<const ArtinAlgebra>;

/// Element of an Artin algebra: dense rational coefficients over the
/// monomial basis.  Immutable in spirit; all operations return new values.
class ArtinElem {
public:
  ArtinElem() = default;
  explicit ArtinElem(ArtinPtr alg);
  ArtinElem(ArtinPtr alg, std::vector<Rat> coeffs);

  static ArtinElem scalar(ArtinPtr alg, const Rat& c);
  static ArtinElem variable(ArtinPtr alg, int var);

  const ArtinPtr& algebra() const { return alg_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& coeff(int basis_idx) const { return c_[basis_idx]; }

  bool is_zero() const;
  /// True iff the coefficient of 1 vanishes, i.e. the element lies in m_A.
  bool in_max_ideal() const;
  /// Image under the residue map A -> Q.
  const Rat& residue() const { return c_[0]; }
  /// m-adic order: smallest total degree carrying a nonzero coefficient;
  /// dim-of-ring+1 sentinel for zero.
  int order() const;

  /// Part of m-adic order exactly k.
  ArtinElem graded_part(int k) const;

  ArtinElem operator-() const;
  ArtinElem operator+(const ArtinElem& o) const;
  ArtinElem operator-(const ArtinElem& o) const;
  ArtinElem operator*(const ArtinElem& o) const;
  ArtinElem operator*(const Rat& s) const;
  bool operator==(const ArtinElem& o) const;

  std::string str() const;

private:
  ArtinPtr alg_;
  std::vector<Rat> c_;
};

/// Parses the element syntax used by the text formats: a sum of
/// `coeff*monomial` terms, e.g. "1 + 3/2*t1*t2 - t2^2".
ArtinElem parse_artin_elem(ArtinPtr alg, const std::string& text);

/// Parses a monomial like "t1^2*t3" over the named variables; "1" is the
/// empty monomial.
Monomial parse_monomial(const std::vector<std::string>& vars,
                        const std::string& text);

std::string monomial_to_string(const std::vector<std::string>& vars,
                               const Monomial& m);

/// Header line `artin k=<n> trunc=<m1,m2,...>`.
std::string serialize_artin(const ArtinAlgebra& a);
ArtinPtr parse_artin_header(const std::string& line);

} // namespace conedef
