#include "conedef/fixtures.hpp"
#include "conedef/period.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace conedef;

namespace {

ArtinPtr deep_ring(int depth) {
  return ArtinAlgebra::make({"t"}, {{depth}});
}

Vec random_deg_vec(const Dgla& L, const ArtinPtr& ring, std::mt19937_64& rng,
                   int deg) {
  Vec v = L.zero(ring);
  for (int i : L.space()->indices_of_degree(deg)) {
    std::vector<Rat> cs(ring->dim(), Rat(0));
    for (int m = 1; m < ring->dim(); ++m)
      cs[m] = Rat(static_cast<long>(rng() % 5) - 2);
    v[i] = ArtinElem(ring, std::move(cs));
  }
  return v;
}

void BM_bch(benchmark::State& state) {
  auto E = end_two_term();
  auto ring = deep_ring(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(17);
  auto x = random_deg_vec(E, ring, rng, 0);
  auto y = random_deg_vec(E, ring, rng, 0);
  for (auto _ : state) benchmark::DoNotOptimize(bch(E, x, y));
}
BENCHMARK(BM_bch)->Arg(3)->Arg(5)->Arg(7);

void BM_mu_n(benchmark::State& state) {
  const int arity = static_cast<int>(state.range(0));
  auto cones = standard_cones();
  const auto& cone = cones.front().cone;
  auto ring = deep_ring(2);
  std::vector<ConeElem> args;
  const int dim = cone_space(cone.algL(), cone.algM())->dim();
  for (int k = 0; k < arity; ++k)
    args.push_back(cone_basis(cone.algL(), cone.algM(), ring, k % dim));
  for (auto _ : state) benchmark::DoNotOptimize(cone.mu_n(args));
}
BENCHMARK(BM_mu_n)->Arg(3)->Arg(4)->Arg(5);

void BM_psi_tilde(benchmark::State& state) {
  auto model = build_dot_square_algebra({{{0, 0}}, {{0, 0}}});
  auto chi = build_chi(model);
  auto ring = deep_ring(static_cast<int>(state.range(0)));
  const ArtinElem t = ArtinElem::variable(ring, 0);
  const EndLie& E = model.end_lie();
  Operator l;
  for (const auto& op : chi.L.ops)
    if (op.shift() == 0) {
      l = Operator::from_graded_map(op, ring).scaled(t);
      break;
    }
  Operator alpha = gauge_action_by_conjugation(E, l, E.zero(ring, 1));
  Operator expa = exp_operator(-l);
  for (auto _ : state)
    benchmark::DoNotOptimize(psi_tilde_exp(model, alpha, expa));
}
BENCHMARK(BM_psi_tilde)->Arg(2)->Arg(3)->Arg(4);

void BM_phi_torus(benchmark::State& state) {
  auto mp = build_torus_model(static_cast<int>(state.range(0)));
  auto ring = deep_ring(3);
  const ArtinElem t = ArtinElem::variable(ring, 0);
  Vec xi(mp.poly->space(), ring);
  for (int i = 0; i < xi.dim(); ++i)
    if (mp.poly->bidegree(i) == std::make_pair(-1, 1)) xi[i] = t;
  for (auto _ : state) benchmark::DoNotOptimize(phi(mp, xi));
}
BENCHMARK(BM_phi_torus)->Arg(1)->Arg(2);

} // namespace

BENCHMARK_MAIN();
