#include "conedef/cone.hpp"

#include <mutex>

namespace conedef {

Rat binomial(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  Rat r(1);
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Rat bernoulli(int n) {
  static std::vector<Rat> cache{Rat(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    Rat s(0);
    for (int k = 0; k < m; ++k) s += binomial(m + 1, k) * cache[k];
    cache.push_back(-s / binomial(m + 1, m));
  }
  return cache[n];
}

Rat bernoulli_akiyama_tanigawa(int n) {
  std::vector<Rat> a(n + 1);
  for (int j = 0; j <= n; ++j) a[j] = rat(1, j + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j + i <= n; ++j) a[j] = (a[j] - a[j + 1]) * (j + 1);
  // the scheme produces the B_1 = +1/2 convention; flip odd indices
  return (n % 2) ? -a[0] : a[0];
}

Cone make_cone(const Dgla& L, const Dgla& M, const GradedMap& chi_map) {
  if (chi_map.source() != L.space() || chi_map.target() != M.space() ||
      chi_map.shift() != 0)
    throw std::invalid_argument("chi map shape mismatch");
  auto rep = DglaMorphism::check(L, M, chi_map);
  if (!rep.ok())
    throw std::invalid_argument("chi is not a morphism: " + rep.violations.front());
  auto chi = [chi_map](const Vec& v) { return chi_map.apply(v); };
  return Cone(L, M, chi);
}

SpacePtr cone_space(const Dgla& L, const Dgla& M) {
  std::vector<BasisElem> basis;
  for (const auto& b : L.space()->basis())
    basis.push_back({"l:" + b.name, b.deg, {}});
  for (const auto& b : M.space()->basis())
    basis.push_back({"m:" + b.name, b.deg + 1, {}});
  return GradedSpace::make(std::move(basis));
}

ConeElem cone_basis(const Dgla& L, const Dgla& M, const ArtinPtr& ring, int idx) {
  const int nl = L.dim();
  if (idx < nl) {
    auto l = Vec::basis(L.space(), ring, idx);
    return {l, M.zero(ring), L.space()->degree(idx)};
  }
  auto m = Vec::basis(M.space(), ring, idx - nl);
  return {L.zero(ring), m, M.space()->degree(idx - nl) + 1};
}

GradedMap mu1_matrix(const Cone& cone) {
  const Dgla& L = cone.algL();
  const Dgla& M = cone.algM();
  auto sp = cone_space(L, M);
  const int nl = L.dim(), nm = M.dim();
  auto q = ArtinAlgebra::rationals();
  QMat m(nl + nm, nl + nm);
  for (int j = 0; j < nl + nm; ++j) {
    auto out = cone.mu1(cone_basis(L, M, q, j));
    for (int i = 0; i < nl; ++i) m.at(i, j) = out.l[i].coeff(0);
    for (int i = 0; i < nm; ++i) m.at(nl + i, j) = out.m[i].coeff(0);
  }
  return GradedMap(sp, sp, 1, std::move(m));
}

} // namespace conedef
