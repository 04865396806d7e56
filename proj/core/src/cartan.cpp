#include "conedef/cartan.hpp"

#include <random>
#include <sstream>

namespace conedef {

namespace {

std::string pair_name(const Dgla& L, int a, int b) {
  return "(" + (*L.space())[a].name + ", " + (*L.space())[b].name + ")";
}

ConeElem lift_basis(const Dgla& L, const GradedMap& i, const ArtinPtr& q,
                    int idx) {
  auto a = L.basis(q, idx);
  return {a, i.apply(a), L.space()->degree(idx)};
}

} // namespace

CartanCandidate::CartanCandidate(DglaPtr src, DglaPtr dst, GradedMap map)
    : source(std::move(src)), target(std::move(dst)), i(std::move(map)) {
  if (i.source() != source->space() || i.target() != target->space())
    throw std::invalid_argument("cartan candidate map has wrong spaces");
  if (i.shift() != -1)
    throw std::invalid_argument("cartan candidate map must have shift -1");
}

GradedMap induced_l(const CartanCandidate& c) {
  return c.target->d_map().compose(c.i) + c.i.compose(c.source->d_map());
}

CheckReport check_cartan(const CartanCandidate& c) {
  CheckReport rep = check_weak_cartan(c);
  const Dgla& L = *c.source;
  const Dgla& M = *c.target;
  auto q = ArtinAlgebra::rationals();
  for (int a = 0; a < L.dim(); ++a)
    for (int b = a; b < L.dim(); ++b) {
      auto ia = c.i.apply(L.basis(q, a));
      auto ib = c.i.apply(L.basis(q, b));
      if (!M.bracket(ia, ib).is_zero())
        rep.violations.push_back("[i_a, i_b] != 0 at " + pair_name(L, a, b));
    }
  return rep;
}

CheckReport check_weak_cartan(const CartanCandidate& c) {
  CheckReport rep;
  const Dgla& L = *c.source;
  const Dgla& M = *c.target;
  auto l = induced_l(c);
  auto q = ArtinAlgebra::rationals();
  for (int a = 0; a < L.dim(); ++a)
    for (int b = 0; b < L.dim(); ++b) {
      auto iab = c.i.apply(L.bracket(L.basis(q, a), L.basis(q, b)));
      auto rhs = M.bracket(c.i.apply(L.basis(q, a)), l.apply(L.basis(q, b)));
      if (!(iab - rhs).is_zero())
        rep.violations.push_back("i_[a,b] != [i_a, l_b] at " +
                                 pair_name(L, a, b));
    }
  if (!rep.ok()) return rep;
  // pair identity holds, so l is a DGLA morphism and the cone of l exists;
  // the symmetrized triple condition is mu3-vanishing of the lifted triples
  Cone cone = make_cone(L, M, l);
  for (int a = 0; a < L.dim(); ++a)
    for (int b = a; b < L.dim(); ++b)
      for (int k = b; k < L.dim(); ++k) {
        auto out = cone.mu_n({lift_basis(L, c.i, q, a),
                              lift_basis(L, c.i, q, b),
                              lift_basis(L, c.i, q, k)});
        if (!out.is_zero())
          rep.violations.push_back(
              "symmetrized triple condition fails at (" +
              (*L.space())[a].name + ", " + (*L.space())[b].name + ", " +
              (*L.space())[k].name + ")");
      }
  return rep;
}

namespace {
Cone weak_verified_cone(const CartanCandidate& c) {
  auto rep = check_weak_cartan(c);
  if (!rep.ok())
    throw std::invalid_argument("not a weak Cartan homotopy: " +
                                rep.violations.front());
  return make_cone(*c.source, *c.target, induced_l(c));
}
} // namespace

ConeLift::ConeLift(const CartanCandidate& c)
    : c_(c), l_(induced_l(c)), cone_(weak_verified_cone(c)) {
  const Dgla& L = *c_.source;
  auto q = ArtinAlgebra::rationals();
  // the lift commutes with mu1 and mu2 on all basis tuples
  for (int a = 0; a < L.dim(); ++a) {
    auto lifted_d = apply(L.diff(L.basis(q, a)));
    if (!(cone_.mu1(lift_basis(L, c_.i, q, a)) - lifted_d).is_zero())
      throw std::logic_error("cone lift does not commute with mu1");
    for (int b = 0; b < L.dim(); ++b) {
      auto lifted_br = apply(L.bracket(L.basis(q, a), L.basis(q, b)));
      auto mu2v = cone_.mu2(lift_basis(L, c_.i, q, a),
                            lift_basis(L, c_.i, q, b));
      if (!(mu2v - lifted_br).is_zero())
        throw std::logic_error("cone lift does not commute with mu2");
    }
  }
  // mu3 annihilation is the weak check; spot-check mu4 annihilation
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> pick(0, L.dim() - 1);
  const bool small = L.dim() <= 6;
  auto check4 = [&](int a, int b, int x, int y) {
    auto out = cone_.mu_n({lift_basis(L, c_.i, q, a),
                           lift_basis(L, c_.i, q, b),
                           lift_basis(L, c_.i, q, x),
                           lift_basis(L, c_.i, q, y)});
    if (!out.is_zero())
      throw std::logic_error("cone lift does not annihilate mu4");
  };
  if (small) {
    for (int a = 0; a < L.dim(); ++a)
      for (int b = a; b < L.dim(); ++b)
        for (int x = b; x < L.dim(); ++x)
          for (int y = x; y < L.dim(); ++y) check4(a, b, x, y);
  } else {
    for (int t = 0; t < 100; ++t)
      check4(pick(rng), pick(rng), pick(rng), pick(rng));
  }
}

ConeElem ConeLift::apply(const Vec& a) const {
  auto deg = a.degree();
  return {a, c_.i.apply(a), deg.value_or(0)};
}

MCChiElem ConeLift::push_mc(const Vec& xi) const {
  if (!xi.homogeneous_of_degree(1))
    throw std::invalid_argument("MC pushforward needs a degree-1 element");
  if (!xi.in_max_ideal())
    throw std::invalid_argument("MC pushforward needs m_A coefficients");
  return {xi, c_.i.apply(xi)};
}

PhiMorphism::PhiMorphism(const CartanCandidate& c, DglaPtr sub, GradedMap incl)
    : c_(c), sub_(std::move(sub)), incl_(std::move(incl)),
      cone_(make_cone(*sub_, *c.target, incl_)) {
  auto rep = check_cartan(c_);
  if (!rep.ok())
    throw std::invalid_argument("not a Cartan homotopy: " +
                                rep.violations.front());
  // factor l = incl . l_fac by exact columnwise solves
  auto l = induced_l(c_);
  const int rows = incl_.matrix().rows();
  const int cols = l.matrix().cols();
  QMat fac(incl_.matrix().cols(), cols);
  for (int j = 0; j < cols; ++j) {
    auto sol = solve_linear(incl_.matrix(), l.matrix().column(j));
    if (!sol.solvable)
      throw std::invalid_argument("l(N) does not lie in the sub-DGLA");
    for (int i = 0; i < fac.rows(); ++i) fac.at(i, j) = sol.particular[i];
  }
  (void)rows;
  l_fac_ = GradedMap(c_.source->space(), sub_->space(), 0, std::move(fac));
}

ConeElem PhiMorphism::apply(const Vec& a) const {
  auto deg = a.degree();
  return {l_fac_.apply(a), c_.i.apply(a), deg.value_or(0)};
}

MCChiElem PhiMorphism::push_mc(const Vec& xi) const {
  if (!xi.homogeneous_of_degree(1))
    throw std::invalid_argument("MC pushforward needs a degree-1 element");
  if (!xi.in_max_ideal())
    throw std::invalid_argument("MC pushforward needs m_A coefficients");
  return {l_fac_.apply(xi), c_.i.apply(xi)};
}

CartanCandidate compose_with_morphism(const CartanCandidate& c,
                                      const DglaMorphism& g) {
  if (g.source()->space() != c.target->space())
    throw std::invalid_argument("morphism source must be the candidate target");
  return {c.source, g.target(), g.map().compose(c.i)};
}

} // namespace conedef
