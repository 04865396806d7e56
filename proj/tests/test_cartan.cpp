#include "doctest.h"

#include "conedef/cartan.hpp"
#include "conedef/endlie.hpp"
#include "conedef/fixtures.hpp"

#include <memory>
#include <random>

using namespace conedef;

namespace {

// Exterior algebra on dz, dzb with zero differential, plus its
// endomorphism DGLA: the smallest "forms with a contraction" setup.
SpacePtr forms4() {
  static const SpacePtr sp = GradedSpace::make({{"1", 0, {}},
                                                {"dz", 1, {}},
                                                {"dzb", 1, {}},
                                                {"dzdzb", 2, {}}});
  return sp;
}

const Dgla& end_forms4() {
  static const Dgla instance = [] {
    EndLie E(forms4(), GradedMap::zero(forms4(), forms4(), 1));
    return to_dgla(E);
  }();
  return instance;
}

const Dgla& line_deg0() {
  static const Dgla instance = [] {
    auto sp = GradedSpace::make({{"v", 0, {}}});
    return Dgla::abelian(sp, GradedMap::zero(sp, sp, 1));
  }();
  return instance;
}

// i_v = contraction by d/dz on the 4-dim form algebra: dz -> 1,
// dz^dzb -> dzb, everything else -> 0.
GradedMap contraction_map() {
  const auto& M = end_forms4();
  QMat m(M.dim(), 1);
  m.at(*M.space()->index_of("E_0_1"), 0) = 1;
  m.at(*M.space()->index_of("E_2_3"), 0) = 1;
  return GradedMap(line_deg0().space(), M.space(), -1, std::move(m));
}

CartanCandidate contraction_candidate() {
  return {std::make_shared<const Dgla>(line_deg0()),
          std::make_shared<const Dgla>(end_forms4()), contraction_map()};
}

// L[-1] of a DGLA M: degrees shifted up by one, trivial bracket,
// differential -d_M.
const Dgla& shifted_end_two_term() {
  static const Dgla instance = [] {
    const Dgla& M = end_two_term();
    std::vector<BasisElem> basis;
    for (const auto& b : M.space()->basis())
      basis.push_back({b.name, b.deg + 1, {}});
    auto sp = GradedSpace::make(std::move(basis));
    GradedMap d(sp, sp, 1, M.d_map().matrix().scaled(-1));
    return Dgla::abelian(sp, d);
  }();
  return instance;
}

} // namespace

TEST_CASE("induced_l: zero map, shifted identity, contraction") {
  auto q = ArtinAlgebra::rationals();
  // i = 0 -> l = 0
  {
    auto L = std::make_shared<const Dgla>(Dgla::sl2());
    auto M = std::make_shared<const Dgla>(end_two_term());
    CartanCandidate c{L, M, GradedMap::zero(L->space(), M->space(), -1)};
    CHECK(induced_l(c).is_zero());
    CHECK(check_cartan(c).ok());
  }
  // identity on M[-1] with trivial bracket: l = 0 because d_{M[-1]} = -d_M
  {
    const Dgla& M = end_two_term();
    auto Lm1 = std::make_shared<const Dgla>(shifted_end_two_term());
    GradedMap id_map(Lm1->space(), M.space(), -1,
                     QMat::identity(M.dim()));
    CartanCandidate c{Lm1, std::make_shared<const Dgla>(M), id_map};
    CHECK(induced_l(c).is_zero());
  }
  // the form-algebra contraction: l = [d, i] = 0 since d = 0
  CHECK(induced_l(contraction_candidate()).is_zero());
}

TEST_CASE("check_cartan: contraction passes, mutations fail with witnesses") {
  auto c = contraction_candidate();
  CHECK(check_cartan(c).ok());
  CHECK(check_weak_cartan(c).ok());

  // mutate the operator so that it no longer squares to zero:
  // dz^dzb -> dz instead of dzb
  auto bad = c;
  const auto& M = end_forms4();
  bad.i.matrix().at(*M.space()->index_of("E_2_3"), 0) = 0;
  bad.i.matrix().at(*M.space()->index_of("E_1_3"), 0) = 1;
  auto rep = check_cartan(bad);
  CHECK(!rep.ok());
  CHECK(rep.violations.front().find("[i_a, i_b]") != std::string::npos);
  // ... but it is still a weak Cartan homotopy (l = 0)
  CHECK(check_weak_cartan(bad).ok());
}

TEST_CASE("check_weak_cartan: shifted identity is weak; strict fails on "
          "a nonabelian target") {
  const Dgla& M = end_two_term();
  auto Lm1 = std::make_shared<const Dgla>(shifted_end_two_term());
  GradedMap id_map(Lm1->space(), M.space(), -1, QMat::identity(M.dim()));
  CartanCandidate c{Lm1, std::make_shared<const Dgla>(M), id_map};
  CHECK(check_weak_cartan(c).ok());
  auto rep = check_cartan(c);
  CHECK(!rep.ok()); // [a, b] != 0 for some operators a, b
}

TEST_CASE("check_weak_cartan: pair identity violation is reported") {
  // nonabelian source: sl2 with every generator sent to one odd operator
  // on the two-term complex; then i_[h,e] = 2 i_e but [i_h, l_e] = 0
  const Dgla& M = end_two_term();
  auto sl2 = std::make_shared<const Dgla>(Dgla::sl2());
  bool found = false;
  for (int j = 0; j < M.dim() && !found; ++j) {
    if (M.space()->degree(j) != -1) continue;
    QMat m(M.dim(), sl2->dim());
    for (int col = 0; col < sl2->dim(); ++col) m.at(j, col) = 1;
    CartanCandidate c{sl2, std::make_shared<const Dgla>(M),
                      GradedMap(sl2->space(), M.space(), -1, std::move(m))};
    auto rep = check_weak_cartan(c);
    if (rep.ok()) continue;
    CHECK(rep.violations.front().find("i_[a,b]") != std::string::npos);
    found = true;
  }
  CHECK(found);
}

TEST_CASE("ConeLift: commutes with brackets and pushes MC to MC") {
  auto c = contraction_candidate();
  ConeLift lift(c);
  auto ring = ArtinAlgebra::make({"t"}, {{3}});
  // the source is abelian in degree 0; degree-1 MC elements do not exist,
  // so exercise the lift map itself plus the mu identities on A-elements
  auto q = ArtinAlgebra::rationals();
  auto v = line_deg0().basis(q, 0);
  auto lifted = lift.apply(v);
  CHECK(lifted.l == v);
  CHECK(lifted.m == c.i.apply(v));
  CHECK(lift.cone().mu1(lifted).m == induced_l(c).apply(v) -
                                         end_forms4().diff(c.i.apply(v)));

  // a refused lift: candidate that fails the weak check (pair identity)
  const Dgla& M = end_two_term();
  auto sl2 = std::make_shared<const Dgla>(Dgla::sl2());
  bool refused = false;
  for (int j = 0; j < M.dim() && !refused; ++j) {
    if (M.space()->degree(j) != -1) continue;
    QMat m(M.dim(), sl2->dim());
    for (int col = 0; col < sl2->dim(); ++col) m.at(j, col) = 1;
    CartanCandidate bad{sl2, std::make_shared<const Dgla>(M),
                        GradedMap(sl2->space(), M.space(), -1, std::move(m))};
    if (check_weak_cartan(bad).ok()) continue;
    CHECK_THROWS(ConeLift(bad));
    refused = true;
  }
  CHECK(refused);
  (void)ring;
}

TEST_CASE("ConeLift on a degree-1 source: MC pushforward") {
  // L = one degree-1 abelian generator w, M = end_forms4, i_w = the
  // contraction operator shifted into degree 0?  Simpler: i_w of degree 0
  // is E_1_1 - like diagonal; use i_w = E_1_2 (dzb -> dz, degree 0).
  const Dgla& M = end_forms4();
  auto spL = GradedSpace::make({{"w", 1, {}}});
  auto L = std::make_shared<const Dgla>(
      Dgla::abelian(spL, GradedMap::zero(spL, spL, 1)));
  QMat m(M.dim(), 1);
  m.at(*M.space()->index_of("E_1_2"), 0) = 1;
  CartanCandidate c{L, std::make_shared<const Dgla>(M),
                    GradedMap(spL, M.space(), -1, std::move(m))};
  REQUIRE(check_weak_cartan(c).ok());
  ConeLift lift(c);
  auto ring = ArtinAlgebra::make({"t"}, {{3}});
  auto t = ArtinElem::variable(ring, 0);
  auto xi = L->basis(ring, 0).scaled(t); // t*w, MC since L is abelian, d = 0
  CHECK(mc_residual(*L, xi).is_zero());
  auto pair = lift.push_mc(xi);
  CHECK(lift.cone().mc_chi_residuals(pair).ok());
  CHECK(lift.cone().mc_residual_cone(lift.apply(xi)).is_zero());
  // degree / ideal preconditions
  CHECK_THROWS(lift.push_mc(L->basis(ring, 0)));
}

TEST_CASE("PhiMorphism: factors l through a sub-DGLA and pushes MC") {
  const Dgla& M = end_forms4();
  auto spL = GradedSpace::make({{"w", 1, {}}});
  auto L = std::make_shared<const Dgla>(
      Dgla::abelian(spL, GradedMap::zero(spL, spL, 1)));
  QMat m(M.dim(), 1);
  m.at(*M.space()->index_of("E_1_2"), 0) = 1;
  CartanCandidate c{L, std::make_shared<const Dgla>(M),
                    GradedMap(spL, M.space(), -1, std::move(m))};

  // l = 0, so any sub-DGLA works; take the span of a square-zero
  // degree-1 matrix unit
  auto spS = GradedSpace::make({{"s", 1, {}}});
  auto sub = std::make_shared<const Dgla>(
      Dgla::abelian(spS, GradedMap::zero(spS, spS, 1)));
  QMat incl_m(M.dim(), 1);
  incl_m.at(*M.space()->index_of("E_3_1"), 0) = 1; // dz -> dzdzb, deg 1
  GradedMap incl(spS, M.space(), 0, std::move(incl_m));

  PhiMorphism phi(c, sub, incl);
  CHECK(phi.l_factored().is_zero());

  auto ring = ArtinAlgebra::make({"t"}, {{3}});
  auto t = ArtinElem::variable(ring, 0);
  auto xi = L->basis(ring, 0).scaled(t);
  auto pair = phi.push_mc(xi);
  CHECK(pair.x.is_zero());
  CHECK(phi.cone().mc_chi_residuals(pair).ok());
  auto q = ArtinAlgebra::rationals();
  auto v = L->basis(q, 0);
  CHECK(phi.apply(v).m == c.i.apply(v));

  // refusal when l does not land in the subalgebra: compose with a
  // morphism first to get l != 0?  Here force it directly: a candidate
  // with l != 0 and the same 1-dim subalgebra.
  const Dgla& M2 = end_two_term();
  for (int j = 0; j < M2.dim(); ++j) {
    if (M2.space()->degree(j) != -1) continue;
    auto h = M2.basis(q, j);
    if (M2.bracket(h, M2.diff(h)).is_zero() &&
        M2.bracket(h, h).is_zero() && !M2.diff(h).is_zero()) {
      QMat mm(M2.dim(), 1);
      mm.at(j, 0) = 1;
      CartanCandidate c2{std::make_shared<const Dgla>(line_deg0()),
                         std::make_shared<const Dgla>(M2),
                         GradedMap(line_deg0().space(), M2.space(), -1,
                                   std::move(mm))};
      if (!check_cartan(c2).ok()) continue;
      // sub-DGLA = 0-dimensional is not expressible; use a span that
      // misses l(v) = d(h) to trigger the refusal
      auto spZ = GradedSpace::make({{"z", 1, {}}});
      auto subZ = std::make_shared<const Dgla>(
          Dgla::abelian(spZ, GradedMap::zero(spZ, spZ, 1)));
      for (int k = 0; k < M2.dim(); ++k) {
        if (M2.space()->degree(k) != 1) continue;
        auto cand = M2.basis(q, k);
        if ((cand - induced_l(c2).apply(line_deg0().basis(q, 0))).is_zero())
          continue;
        if (!M2.bracket(cand, cand).is_zero() || !M2.diff(cand).is_zero())
          continue;
        QMat im(M2.dim(), 1);
        im.at(k, 0) = 1;
        CHECK_THROWS_WITH_AS(
            PhiMorphism(c2, subZ, GradedMap(spZ, M2.space(), 0,
                                            std::move(im))),
            "l(N) does not lie in the sub-DGLA", std::invalid_argument);
        break;
      }
      break;
    }
  }
}

TEST_CASE("compose_with_morphism: identity and zero") {
  auto c = contraction_candidate();
  const auto& M = end_forms4();
  auto Mp = std::make_shared<const Dgla>(M);
  DglaMorphism ident{Mp, Mp, GradedMap::identity(M.space())};
  auto cid = compose_with_morphism(c, ident);
  CHECK(cid.i == c.i);
  CHECK(check_cartan(cid).ok());

  DglaMorphism zero{Mp, Mp, GradedMap::zero(M.space(), M.space(), 0)};
  auto cz = compose_with_morphism(c, zero);
  CHECK(cz.i.is_zero());
  CHECK(check_cartan(cz).ok());
}
