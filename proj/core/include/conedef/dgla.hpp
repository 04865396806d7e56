#pragma once

#include "conedef/graded.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace conedef {

/// Raw description of a DGLA by structure constants; bracket[i][j] holds the
/// coordinates of [e_i, e_j].
struct DglaData {
  SpacePtr space;
  GradedMap d; // shift +1
  std::vector<std::vector<QVec>> bracket;
};

struct CheckReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Verifies d^2 = 0, bracket grading, graded antisymmetry, graded Jacobi and
/// the Leibniz rule on every basis tuple.  Report-style: never throws.
CheckReport check_dgla(const DglaData& data);

/// A validated DGLA.  Construction runs check_dgla and throws on any
/// violation, so invalid structure constants cannot circulate.
class Dgla {
public:
  using Elem = Vec;

  explicit Dgla(DglaData data);

  const SpacePtr& space() const { return data_.space; }
  const GradedMap& d_map() const { return data_.d; }
  int dim() const { return data_.space->dim(); }

  Vec diff(const Vec& v) const { return data_.d.apply(v); }
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec zero(ArtinPtr ring) const { return Vec(data_.space, std::move(ring)); }
  Vec basis(ArtinPtr ring, int i) const {
    return Vec::basis(data_.space, std::move(ring), i);
  }

  /// Same structure constants, no validity questions: used to present the
  /// scalar extension L (x) A (the constants do not change; elements carry
  /// Artin coefficients already).
  const DglaData& data() const { return data_; }

  /// Abelian DGLA on a space with a given differential.
  static Dgla abelian(SpacePtr sp, GradedMap d);

  /// The sl2 structure constants in degree 0 ([h,e] = 2e, [h,f] = -2f,
  /// [e,f] = h), d = 0.  A standard validation fixture.
  static Dgla sl2();

private:
  DglaData data_;
};

using DglaPtr = std::shared_ptr<const Dgla>;

/// Morphism of DGLAs; validated at construction (commutes with d, preserves
/// brackets on all basis pairs).
class DglaMorphism {
public:
  DglaMorphism(DglaPtr source, DglaPtr target, GradedMap map);

  const DglaPtr& source() const { return src_; }
  const DglaPtr& target() const { return dst_; }
  const GradedMap& map() const { return map_; }
  Vec apply(const Vec& v) const { return map_.apply(v); }

  static CheckReport check(const Dgla& src, const Dgla& dst, const GradedMap& map);

private:
  DglaPtr src_, dst_;
  GradedMap map_;
};

// ---------------------------------------------------------------------------
// Series algorithms over any DGLA-like context.
//
// A context C provides:  using Elem;  Elem diff(Elem);  Elem bracket(Elem,Elem);
// elements support +, -, unary -, * Rat, is_zero(), ring().
// All series below terminate by nilpotency of the coefficient ring; inputs
// are required to have coefficients in the maximal ideal where stated.
// ---------------------------------------------------------------------------

inline Rat factorial(int n) {
  Rat r(1);
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

/// dx + 1/2 [x,x]; x must be homogeneous of degree 1 (caller checks degree
/// semantics; here we only compute).
template <class Ctx>
typename Ctx::Elem mc_residual(const Ctx& L, const typename Ctx::Elem& x) {
  return L.diff(x) + L.bracket(x, x) * rat(1, 2);
}

/// Gauge action e^a * x = x + sum_{n>=0} ad_a^n([a,x] - da) / (n+1)!.
/// Requires a with coefficients in m_A.
template <class Ctx>
typename Ctx::Elem gauge_action(const Ctx& L, const typename Ctx::Elem& a,
                                const typename Ctx::Elem& x) {
  const int N = a.ring()->nilpotency_index();
  auto term = L.bracket(a, x) - L.diff(a);
  auto out = x;
  for (int n = 0; n < N && !term.is_zero(); ++n) {
    out = out + term * (1 / factorial(n + 1));
    term = L.bracket(a, term);
  }
  return out;
}

namespace detail {

/// One Dynkin word contribution: ad_{w_0} ... ad_{w_{m-2}} (w_{m-1}).
template <class Ctx>
typename Ctx::Elem nested_left(const Ctx& L,
                               const std::vector<const typename Ctx::Elem*>& w) {
  auto acc = *w.back();
  for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i)
    acc = L.bracket(*w[i], acc);
  return acc;
}

template <class Ctx>
void bch_blocks(const Ctx& L, const typename Ctx::Elem& x,
                const typename Ctx::Elem& y, int maxweight, int nblocks,
                int weight, Rat denom_factorials,
                std::vector<const typename Ctx::Elem*>& word,
                typename Ctx::Elem& acc) {
  // append one block x^r y^s (r+s >= 1), recurse, or close the word
  if (nblocks > 0 && weight > 0) {
    Rat coeff = Rat((nblocks % 2) ? 1 : -1) / nblocks / weight / denom_factorials;
    acc = acc + nested_left(L, word) * coeff;
  }
  if (weight >= maxweight) return;
  for (int r = 0; weight + r <= maxweight; ++r) {
    for (int s = (r == 0 ? 1 : 0); weight + r + s <= maxweight; ++s) {
      for (int k = 0; k < r; ++k) word.push_back(&x);
      for (int k = 0; k < s; ++k) word.push_back(&y);
      bch_blocks(L, x, y, maxweight, nblocks + 1, weight + r + s,
                 denom_factorials * factorial(r) * factorial(s), word, acc);
      word.resize(word.size() - r - s);
    }
  }
}

} // namespace detail

/// Baker-Campbell-Hausdorff product via the Dynkin series, truncated at the
/// nilpotency index of the coefficient ring (never a user-set order).
/// Requires x, y with coefficients in m_A.
template <class Ctx>
typename Ctx::Elem bch(const Ctx& L, const typename Ctx::Elem& x,
                       const typename Ctx::Elem& y) {
  const int maxweight = x.ring()->nilpotency_index() - 1;
  auto acc = x * Rat(0);
  std::vector<const typename Ctx::Elem*> word;
  detail::bch_blocks(L, x, y, maxweight, 0, 0, Rat(1), word, acc);
  return acc;
}

} // namespace conedef
