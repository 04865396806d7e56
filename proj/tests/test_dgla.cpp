#include "doctest.h"

#include "conedef/dgla.hpp"
#include "conedef/endlie.hpp"

#include <random>

using namespace conedef;

namespace {

ArtinPtr ring_t3() { return ArtinAlgebra::make({"t"}, {{3}}); }

Vec random_vec(const Dgla& L, ArtinPtr a, std::mt19937_64& rng, int deg,
               bool in_max = true) {
  std::uniform_int_distribution<int> num(-3, 3);
  Vec v = L.zero(a);
  for (int i = 0; i < L.dim(); ++i) {
    if (L.space()->degree(i) != deg) continue;
    std::vector<Rat> cs(a->dim(), Rat(0));
    for (int m = in_max ? 1 : 0; m < a->dim(); ++m) cs[m] = num(rng);
    v[i] = ArtinElem(a, std::move(cs));
  }
  return v;
}

// matrix logarithm of a unipotent matrix over A: log(I + n) = sum (-1)^{k+1} n^k / k
Operator log_unipotent(const Operator& u) {
  auto n = u - Operator::identity(u.space(), u.ring());
  REQUIRE(n.in_max_ideal());
  Operator acc(u.space(), u.ring(), 0);
  Operator pow = n;
  for (int k = 1; k <= u.ring()->nilpotency_index() && !pow.is_zero(); ++k) {
    acc = acc + pow * rat(k % 2 ? 1 : -1, k);
    pow = pow.compose(n);
  }
  return acc;
}

} // namespace

TEST_CASE("check_dgla validates sl2 and flags a mutated constant") {
  auto sl2 = Dgla::sl2();
  CHECK(check_dgla(sl2.data()).ok());

  // abelian one-dimensional algebra
  auto sp = GradedSpace::make({{"x", 0, {}}});
  auto ab = Dgla::abelian(sp, GradedMap::zero(sp, sp, 1));
  CHECK(check_dgla(ab.data()).ok());

  // flip one sign: [e,f] = -h on one side only
  DglaData bad = sl2.data();
  bad.bracket[1][2][0] = -1;
  auto rep = check_dgla(bad);
  CHECK_FALSE(rep.ok());
  bool mentions = false;
  for (const auto& v : rep.violations)
    if (v.find("antisymmetry") != std::string::npos ||
        v.find("Jacobi") != std::string::npos)
      mentions = true;
  CHECK(mentions);
  CHECK_THROWS(Dgla(bad));
}

TEST_CASE("extend_scalars semantics: bilinearity and ad-nilpotency") {
  auto sl2 = Dgla::sl2();
  auto a3 = ring_t3();
  auto t = ArtinElem::variable(a3, 0);

  // [tx, ty] = t^2 [x,y]
  auto x = sl2.basis(a3, 1).scaled(t); // t e
  auto y = sl2.basis(a3, 2).scaled(t); // t f
  auto br = sl2.bracket(x, y);
  auto expect = sl2.basis(a3, 0).scaled(t * t); // t^2 h
  CHECK(br == expect);

  // abelian: all brackets vanish
  auto sp = GradedSpace::make({{"u", 1, {}}, {"v", 2, {}}});
  QMat dm(2, 2);
  dm.at(1, 0) = 1;
  auto ab = Dgla::abelian(sp, GradedMap(sp, sp, 1, dm));
  auto a2 = ArtinAlgebra::make({"t"}, {{2}});
  auto u = Vec::basis(sp, a2, 0).scaled(ArtinElem::variable(a2, 0));
  CHECK(ab.bracket(u, u).is_zero());
  CHECK(ab.diff(u) == Vec::basis(sp, a2, 1).scaled(ArtinElem::variable(a2, 0)));

  // ad-nilpotency: m_A^3 = 0 forces ad_a^3 = 0
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_vec(sl2, a3, rng, 0);
    auto z = random_vec(sl2, a3, rng, 0, false);
    auto w = sl2.bracket(a, sl2.bracket(a, sl2.bracket(a, z)));
    CHECK(w.is_zero());
  }
}

TEST_CASE("mc_check examples") {
  auto a3 = ring_t3();
  // x = 0
  auto sl2 = Dgla::sl2();
  CHECK(mc_residual(sl2, sl2.zero(a3)).is_zero());

  // abelian L with dx = 0: any closed degree-1 element is MC
  auto sp = GradedSpace::make({{"u", 1, {}}, {"w", 2, {}}});
  auto ab = Dgla::abelian(sp, GradedMap::zero(sp, sp, 1));
  auto u = Vec::basis(sp, a3, 0).scaled(ArtinElem::variable(a3, 0));
  CHECK(mc_residual(ab, u).is_zero());

  // Kodaira-Spencer-style: x = t xi with d xi = 0 and [xi,xi] != 0
  // gives residual t^2/2 [xi,xi].
  auto sp2 = GradedSpace::make({{"xi", 1, {}}, {"o", 2, {}}});
  DglaData data{sp2, GradedMap::zero(sp2, sp2, 1),
                std::vector<std::vector<QVec>>(2, std::vector<QVec>(2, QVec(2, Rat(0))))};
  data.bracket[0][0][1] = 2; // [xi,xi] = 2 o  (allowed: xi odd)
  Dgla L(std::move(data));
  auto x = L.basis(a3, 0).scaled(ArtinElem::variable(a3, 0));
  auto res = mc_residual(L, x);
  CHECK_FALSE(res.is_zero());
  auto t2 = ArtinElem::variable(a3, 0) * ArtinElem::variable(a3, 0);
  CHECK(res == L.basis(a3, 1).scaled(t2)); // (1/2) t^2 [xi,xi] = t^2 o
}

TEST_CASE("bch: trivial and Heisenberg cases with matrix-log oracle") {
  auto a3 = ring_t3();
  auto sl2 = Dgla::sl2();
  auto t = ArtinElem::variable(a3, 0);

  // [x,y] = 0 => x * y = x + y : take x = t e, y = t e
  auto x = sl2.basis(a3, 1).scaled(t);
  CHECK(bch(sl2, x, x) == x + x);
  // unit laws
  auto y = sl2.basis(a3, 0).scaled(t);
  CHECK(bch(sl2, x, sl2.zero(a3)) == x);
  CHECK(bch(sl2, sl2.zero(a3), y) == y);

  // Heisenberg inside 3x3 strictly upper triangular matrices
  auto sp = GradedSpace::make({{"v1", 0, {}}, {"v2", 0, {}}, {"v3", 0, {}}});
  EndLie E(sp, GradedMap::zero(sp, sp, 1));
  auto X = E.zero(a3), Y = E.zero(a3);
  X.at(0, 1) = t;          // t E_{12}
  Y.at(1, 2) = t;          // t E_{23}
  auto Z = bch(E, X, Y);
  // oracle: log(exp X exp Y)
  auto oracle = log_unipotent(exp_operator(X).compose(exp_operator(Y)));
  CHECK(Z == oracle);
  // closed form x + y + [x,y]/2
  auto closed = X + Y + E.bracket(X, Y) * rat(1, 2);
  CHECK(Z == closed);
}

TEST_CASE("bch agrees with matrix-log oracle on random 4x4 nilpotent reps") {
  // weight-4 truncation exercises the Dynkin series beyond the Heisenberg case
  auto a4 = ArtinAlgebra::make({"t"}, {{4}});
  auto sp = GradedSpace::make(
      {{"v1", 0, {}}, {"v2", 0, {}}, {"v3", 0, {}}, {"v4", 0, {}}});
  EndLie E(sp, GradedMap::zero(sp, sp, 1));
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    auto X = E.zero(a4), Y = E.zero(a4);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        std::vector<Rat> cx(a4->dim(), Rat(0)), cy(a4->dim(), Rat(0));
        for (int m = 1; m < a4->dim(); ++m) { cx[m] = coeff(rng); cy[m] = coeff(rng); }
        X.at(i, j) = ArtinElem(a4, cx);
        Y.at(i, j) = ArtinElem(a4, cy);
      }
    auto Z = bch(E, X, Y);
    auto oracle = log_unipotent(exp_operator(X).compose(exp_operator(Y)));
    CHECK(Z == oracle);
    // exp(x * y) = exp(x) exp(y)
    CHECK(exp_operator(Z) == exp_operator(X).compose(exp_operator(Y)));
  }
}

TEST_CASE("exp_operator examples and inverses") {
  auto a2 = ArtinAlgebra::make({"t"}, {{2}});
  auto sp = GradedSpace::make({{"v1", 0, {}}, {"v2", 0, {}}});
  EndLie E(sp, GradedMap::zero(sp, sp, 1));
  CHECK(exp_operator(E.zero(a2)) == Operator::identity(sp, a2));

  auto N = E.zero(a2);
  N.at(0, 1) = ArtinElem::variable(a2, 0);
  auto eN = exp_operator(N);
  CHECK(eN == Operator::identity(sp, a2) + N); // I + tN since (tN)^2 = 0

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto a3 = ring_t3();
  for (int trial = 0; trial < 1000; ++trial) {
    auto A = E.zero(a3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        std::vector<Rat> cs(a3->dim(), Rat(0));
        for (int m = 1; m < a3->dim(); ++m) cs[m] = coeff(rng);
        A.at(i, j) = ArtinElem(a3, cs);
      }
    CHECK(exp_operator(A).compose(exp_operator(-A)) ==
          Operator::identity(sp, a3));
  }
}

TEST_CASE("gauge action: series vs operator conjugation, group law, MC preservation") {
  auto a3 = ring_t3();
  // complex: u -> w in degrees 0 -> 1 -> (nothing)
  auto sp = GradedSpace::make({{"p", 0, {}}, {"q", 1, {}}, {"r", 2, {}}});
  QMat dm(3, 3);
  dm.at(1, 0) = 1; // d p = q
  EndLie E(sp, GradedMap(sp, sp, 1, dm));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-2, 2);
  auto rand_op = [&](int deg, ArtinPtr a) {
    auto f = Operator(sp, a, deg);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (sp->degree(i) != sp->degree(j) + deg) continue;
        std::vector<Rat> cs(a->dim(), Rat(0));
        for (int m = 1; m < a->dim(); ++m) cs[m] = coeff(rng);
        f.at(i, j) = ArtinElem(a, cs);
      }
    return f;
  };

  for (int trial = 0; trial < 50; ++trial) {
    auto a = rand_op(0, a3);
    auto x = rand_op(1, a3);
    // series vs conjugation oracle
    CHECK(gauge_action(E, a, x) == gauge_action_by_conjugation(E, a, x));
  }

  // a = 0 fixes x
  auto x = rand_op(1, a3);
  CHECK(gauge_action(E, E.zero(a3, 0), x) == x);

  // group law e^a * (e^b * x) = e^{a bch b} * x over rings with m^3 and m^4 = 0
  for (auto ring : {ring_t3(), ArtinAlgebra::make({"t"}, {{4}})}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto a = rand_op(0, ring), b = rand_op(0, ring), y = rand_op(1, ring);
      auto lhs = gauge_action(E, a, gauge_action(E, b, y));
      auto rhs = gauge_action(E, bch(E, a, b), y);
      CHECK(lhs == rhs);
    }
  }

  // gauge action preserves MC solutions
  for (int trial = 0; trial < 100; ++trial) {
    auto a = rand_op(0, a3);
    // find an MC element: x with dx + [x,x]/2 = 0. Take x = gauge action of 0.
    auto x0 = gauge_action(E, a, E.zero(a3, 1));
    REQUIRE(Operator::homogeneous_part(x0, 1) == x0);
    CHECK(mc_residual(E, x0).is_zero());
    auto b = rand_op(0, a3);
    CHECK(mc_residual(E, gauge_action(E, b, x0)).is_zero());
  }
}

TEST_CASE("abelian gauge action reduces to x - da") {
  auto a3 = ring_t3();
  auto sp = GradedSpace::make({{"p", 0, {}}, {"q", 1, {}}});
  QMat dm(2, 2);
  dm.at(1, 0) = 1;
  auto ab = Dgla::abelian(sp, GradedMap(sp, sp, 1, dm));
  auto t = ArtinElem::variable(a3, 0);
  auto a = Vec::basis(sp, a3, 0).scaled(t);
  auto x = Vec::basis(sp, a3, 1).scaled(t * t);
  CHECK(gauge_action(ab, a, x) == x - ab.diff(a));
}

TEST_CASE("operator-lemma: e^{-a} d e^{a} = d + alpha when e^a * (-alpha) = 0") {
  auto a3 = ring_t3();
  auto sp = GradedSpace::make({{"p", 0, {}}, {"q", 1, {}}, {"r", 2, {}}});
  QMat dm(3, 3);
  dm.at(1, 0) = 1;
  EndLie E(sp, GradedMap(sp, sp, 1, dm));
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = E.zero(a3, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (sp->degree(i) != sp->degree(j)) continue;
        std::vector<Rat> cs(a3->dim(), Rat(0));
        for (int m = 1; m < a3->dim(); ++m) cs[m] = coeff(rng);
        a.at(i, j) = ArtinElem(a3, cs);
      }
    // alpha := e^{-a} d e^{a} - d, then e^a * alpha = 0 and the lemma holds
    auto d = E.d_as_operator(a3);
    auto alpha = exp_operator(-a).compose(d).compose(exp_operator(a)) - d;
    auto alpha1 = Operator::homogeneous_part(alpha, 1);
    REQUIRE(alpha1 == alpha);
    CHECK(gauge_action(E, a, alpha1).is_zero());
    CHECK(exp_operator(-a).compose(d).compose(exp_operator(a)) == d + alpha1);
  }
}
