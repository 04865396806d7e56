#include "conedef/selftest.hpp"

#include "conedef/fixtures.hpp"
#include "conedef/io.hpp"
#include "conedef/period.hpp"

#include <ostream>
#include <random>
#include <sstream>

namespace conedef {

namespace {

struct Reporter {
  std::ostream& out;
  int failures = 0;

  void result(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
      out << "OK " << name << "\n";
    } else {
      ++failures;
      out << "FAIL " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    }
  }

};

ArtinElem random_max_elem(const ArtinPtr& a, std::mt19937_64& rng) {
  std::vector<Rat> cs(a->dim(), Rat(0));
  for (int m = 1; m < a->dim(); ++m)
    cs[m] = Rat(static_cast<long>(rng() % 5) - 2);
  return ArtinElem(a, std::move(cs));
}

void dgla_axioms(Reporter& rep) {
  std::vector<std::pair<std::string, Dgla>> fixtures = {
      {"sl2_theta", sl2_theta()},
      {"grading_triple", grading_triple()},
      {"heisenberg", heisenberg()},
      {"end_two_term", end_two_term()}};
  for (const auto& [name, alg] : fixtures)
    rep.result("dgla-axioms-" + name, check_dgla(alg.data()).ok());

  auto model = build_dot_square_algebra({{{0, 0}}, {{0, 0}}});
  rep.result("dgla-axioms-end-of-square-model",
             check_dgla(to_dgla(model.end_lie()).data()).ok());

  // Mutation: one perturbed bracket constant must be detected.
  DglaData mutated = sl2_theta().data();
  mutated.bracket[0][1][1] += 1;
  auto r = check_dgla(mutated);
  rep.result("dgla-mutation-detected", !r.ok() && !r.violations.empty());
}

void cone_relations(Reporter& rep, const ArtinPtr& ring) {
  for (const auto& fx : standard_cones()) {
    bool ok = true;
    const int dim = cone_space(fx.cone.algL(), fx.cone.algM())->dim();
    for (int i = 0; i < dim && ok; ++i)
      for (int j = i; j < dim && ok; ++j)
        for (int k = j; k < dim && ok; ++k) {
          auto ci = cone_basis(fx.cone.algL(), fx.cone.algM(), ring, i);
          auto cj = cone_basis(fx.cone.algL(), fx.cone.algM(), ring, j);
          auto ck = cone_basis(fx.cone.algL(), fx.cone.algM(), ring, k);
          if (!fx.cone.linfty_defect({ci, cj, ck}).is_zero()) ok = false;
        }
    rep.result("cone-jacobi-arity3-" + fx.name, ok);
  }
}

void calibration(Reporter& rep, std::mt19937_64& rng) {
  // Cone MC <-> pair MC over gauge translates of (0, e^0).
  auto ring = ArtinAlgebra::make({"t"}, {{3}});
  const auto cones = standard_cones();
  const auto& cone = cones.front().cone;
  bool ok = true;
  for (int trial = 0; trial < 4 && ok; ++trial) {
    Vec l = cone.algL().zero(ring);
    for (int i : cone.algL().space()->indices_of_degree(0))
      l[i] = random_max_elem(ring, rng);
    Vec m = cone.algM().zero(ring);
    for (int i : cone.algM().space()->indices_of_degree(-1))
      m[i] = random_max_elem(ring, rng);
    auto e = cone.gauge_act_chi(l, m, {cone.algL().zero(ring), cone.algM().zero(ring)});
    if (!cone.mc_chi_residuals(e).ok()) ok = false;
    if (!cone.mc_residual_cone(cone.from_mcchi(e)).is_zero()) ok = false;
  }
  rep.result("cone-mc-correspondence-gauge-orbit", ok);
}

void cartan_suite(Reporter& rep) {
  for (int n = 1; n <= 2; ++n) {
    auto mp = build_torus_model(n);
    rep.result("cartan-identities-torus-" + std::to_string(n),
               cartan_identities_check(*mp.poly).ok());
  }
}

void model_suite(Reporter& rep, std::uint64_t seed) {
  bool ok = true;
  std::string detail;
  for (int k = 0; k < 10 && ok; ++k) {
    auto spec = random_dot_square_spec(seed + k);
    auto model = build_dot_square_algebra(spec);
    if (!model.check().ok() || !check_deldelbar_lemma(model).ok()) {
      ok = false;
      detail = "spec seed " + std::to_string(seed + k);
    }
  }
  rep.result("dot-square-invariants-and-lemma", ok, detail);

  // Negative control: the zigzag bicomplex fails the lemma with a witness.
  auto sp = GradedSpace::make({{"u", 0, {{0, 0}}},
                               {"c", 1, {{1, 0}}},
                               {"y", 2, {{2, 0}}}});
  QMat dl(3, 3);
  dl.at(2, 1) = Rat(1);
  std::vector<std::vector<QVec>> prod(3, std::vector<QVec>(3, QVec(3, Rat(0))));
  for (int j = 0; j < 3; ++j) {
    prod[0][j][j] = Rat(1);
    prod[j][0][j] = Rat(1);
  }
  BigradedAlgebraModel zig(sp, GradedMap(sp, sp, 1, dl),
                           GradedMap::zero(sp, sp, 1), prod, 0);
  auto lem = check_deldelbar_lemma(zig);
  rep.result("lemma-negative-zigzag", !lem.ok() && lem.witness.has_value());
}

void period_suite(Reporter& rep, std::mt19937_64& rng) {
  auto ring2 = ArtinAlgebra::make({"t"}, {{2}});
  auto ring3 = ArtinAlgebra::make({"t"}, {{3}});

  // Gauge invariance of psi on the unit+square model.
  {
    auto model = build_dot_square_algebra({{{0, 0}}, {{0, 0}}});
    auto chi = build_chi(model);
    bool ok = true;
    const EndLie& E = model.end_lie();
    Operator zero1 = E.zero(ring3, 1), zero0 = E.zero(ring3, 0);
    const ArtinElem t = ArtinElem::variable(ring3, 0);
    for (size_t g = 0; g < chi.L.ops.size() && ok; ++g) {
      if (chi.L.ops[g].shift() != 0) continue;
      Operator l = Operator::from_graded_map(chi.L.ops[g], ring3).scaled(t);
      if (!psi_gauge_invariance_check(model, zero1, zero0, l, E.zero(ring3, -1)))
        ok = false;
    }
    for (size_t g = 0; g < chi.M.ops.size() && ok; ++g) {
      if (chi.M.ops[g].shift() != -1) continue;
      Operator mm = Operator::from_graded_map(chi.M.ops[g], ring3).scaled(t);
      if (!psi_gauge_invariance_check(model, zero1, zero0, E.zero(ring3, 0), mm))
        ok = false;
    }
    rep.result("psi-gauge-invariance-square-model", ok);
  }

  // Torus period value.
  {
    auto mp = build_torus_model(1);
    Cohomology H(Complex(mp.forms->space(), mp.forms->d()));
    const ArtinElem t = ArtinElem::variable(ring2, 0);
    Vec xi(mp.poly->space(), ring2);
    xi[*mp.poly->space()->index_of("dzb1^v1")] = t;
    PeriodMatrix P = phi(mp, xi);
    auto cls = [&](const std::string& name) {
      Vec b = Vec::basis(mp.forms->space(), ArtinAlgebra::rationals(),
                         *mp.forms->space()->index_of(name));
      for (int k = 0; k < H.dim(); ++k)
        if (H.representative(k) == b) return k;
      return -1;
    };
    bool ok = P.at(cls("dzb1"), cls("dz1")) == t &&
              P.at(cls("dz1"), cls("dz1")) == ArtinElem::scalar(ring2, Rat(1)) &&
              P.residue_is_identity();
    rep.result("phi-torus-period-value", ok);
  }

  // First-order differential and obstruction space.
  {
    auto mp = build_torus_model(1);
    rep.result("first-order-differential-torus", first_order_differential(mp).ok());
    rep.result("obstruction-vanishes-torus", obstruction_subspace(mp).kernel.empty());
    auto pair = dot_square_model_pair(
        {{{0, 0}, {1, 0}, {0, 1}}, {{{0, 0}}}});
    rep.result("first-order-differential-dot-square",
               first_order_differential(pair).ok() &&
                   !first_order_differential(pair).class_names.empty());
  }

  // Period lifting theorem on random Kodaira-Spencer elements.
  {
    auto mp = build_torus_model(2);
    bool ok = true;
    for (int trial = 0; trial < 2 && ok; ++trial) {
      Vec xi(mp.poly->space(), ring3);
      for (int i = 0; i < xi.dim(); ++i)
        if (mp.poly->bidegree(i) == std::make_pair(-1, 1))
          xi[i] = random_max_elem(ring3, rng);
      for (int m = 1; m <= 2 && ok; ++m)
        if (!period_theorem_check(mp, xi, m)) ok = false;
    }
    rep.result("period-theorem-torus-2", ok);
  }
}

} // namespace

int run_selftest(std::uint64_t seed, std::ostream& out) {
  out << "selftest seed=" << seed << "\n";
  Reporter rep{out};
  std::mt19937_64 rng(seed);
  auto ring3 = ArtinAlgebra::make({"t"}, {{3}});
  try {
    dgla_axioms(rep);
    cone_relations(rep, ring3);
    calibration(rep, rng);
    cartan_suite(rep);
    model_suite(rep, seed);
    period_suite(rep, rng);
  } catch (const std::exception& e) {
    rep.result("selftest-aborted", false, e.what());
  }
  out << (rep.failures == 0 ? "selftest: all properties hold\n"
                            : "selftest: " + std::to_string(rep.failures) +
                                  " propert" +
                                  (rep.failures == 1 ? "y" : "ies") +
                                  " violated\n");
  return rep.failures == 0 ? 0 : 1;
}

} // namespace conedef
