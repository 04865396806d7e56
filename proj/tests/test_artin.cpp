#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conedef/artin.hpp"
#include "conedef/graded.hpp"

#include <random>

using namespace conedef;

namespace {

ArtinPtr dual_numbers() { return ArtinAlgebra::make({"t"}, {{2}}); }

ArtinElem random_elem(ArtinPtr a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rat> cs;
  for (int i = 0; i < a->dim(); ++i) cs.push_back(rat(num(rng), den(rng)));
  return ArtinElem(a, std::move(cs));
}

} // namespace

TEST_CASE("make_artin: dual numbers") {
  auto a = dual_numbers();
  CHECK(a->dim() == 2);
  CHECK(a->nilpotency_index() == 2);
  CHECK(a->monomial_string(0) == "1");
  CHECK(a->monomial_string(1) == "t");
}

TEST_CASE("make_artin: Q[t]/(t^3) basis {1,t,t^2}") {
  auto a = ArtinAlgebra::make({"t"}, {{3}});
  CHECK(a->dim() == 3);
  CHECK(a->nilpotency_index() == 3);
}

TEST_CASE("make_artin: square-zero extension on two variables") {
  auto a = ArtinAlgebra::make({"s", "t"}, {{2, 0}, {1, 1}, {0, 2}});
  CHECK(a->dim() == 3); // {1, s, t}
  CHECK(a->nilpotency_index() == 2);
}

TEST_CASE("make_artin rejects non-Artinian truncations") {
  CHECK_THROWS(ArtinAlgebra::make({"s", "t"}, {{1, 1}})); // no pure power of s
  CHECK_THROWS(ArtinAlgebra::make({"t"}, {{0}}));         // ideal contains 1
}

TEST_CASE("artin_multiply examples") {
  auto a = dual_numbers();
  auto one_plus_t = parse_artin_elem(a, "1 + t");
  auto one_minus_t = parse_artin_elem(a, "1 - t");
  CHECK((one_plus_t * one_minus_t) == ArtinElem::scalar(a, Rat(1)));

  auto b = ArtinAlgebra::make({"t"}, {{3}});
  auto t = ArtinElem::variable(b, 0);
  CHECK((t * t) == parse_artin_elem(b, "t^2"));

  auto c = ArtinAlgebra::make({"s", "t"}, {{2, 0}, {1, 1}, {0, 2}});
  auto st = parse_artin_elem(c, "s + t");
  CHECK((st * st).is_zero());
}

TEST_CASE("artin_multiply rejects mismatched algebras") {
  auto a = dual_numbers();
  auto b = ArtinAlgebra::make({"t"}, {{3}});
  CHECK_THROWS(ArtinElem::variable(a, 0) * ArtinElem::variable(b, 0));
}

TEST_CASE("nilpotency_index examples") {
  CHECK(dual_numbers()->nilpotency_index() == 2);
  CHECK(ArtinAlgebra::make({"t"}, {{4}})->nilpotency_index() == 4);
  // oracle: enumerate products of maximal-ideal monomials until all vanish
  auto a = ArtinAlgebra::make({"s", "t"}, {{3, 0}, {0, 2}});
  int oracle = 1;
  {
    std::vector<ArtinElem> gens;
    for (int v = 0; v < a->num_vars(); ++v)
      gens.push_back(ArtinElem::variable(a, v));
    std::vector<ArtinElem> frontier = gens;
    while (true) {
      bool all_zero = std::all_of(frontier.begin(), frontier.end(),
                                  [](const ArtinElem& e) { return e.is_zero(); });
      if (all_zero) break;
      ++oracle;
      std::vector<ArtinElem> next;
      for (const auto& f : frontier)
        for (const auto& g : gens) next.push_back(f * g);
      frontier = std::move(next);
    }
  }
  CHECK(oracle == 4); // s^2*t survives
  CHECK(a->nilpotency_index() == oracle);
}

TEST_CASE("multiplication is associative and commutative; x^N = 0; residue is a ring map") {
  std::mt19937_64 rng(20240811);
  std::vector<ArtinPtr> rings = {
      dual_numbers(),
      ArtinAlgebra::make({"t"}, {{4}}),
      ArtinAlgebra::make({"s", "t"}, {{3, 0}, {0, 2}}),
      ArtinAlgebra::make({"s", "t"}, {{2, 0}, {1, 1}, {0, 2}}),
  };
  for (const auto& a : rings) {
    for (int trial = 0; trial < 1000; ++trial) {
      auto x = random_elem(a, rng), y = random_elem(a, rng), z = random_elem(a, rng);
      CHECK(((x * y) * z) == (x * (y * z)));
      CHECK((x * y) == (y * x));
      CHECK((x * y).residue() == x.residue() * y.residue());
      CHECK((x + y).residue() == x.residue() + y.residue());
    }
    // nilpotency of the maximal ideal
    for (int trial = 0; trial < 50; ++trial) {
      auto x = random_elem(a, rng);
      x = x - ArtinElem::scalar(a, x.residue()); // project into m_A
      REQUIRE(x.in_max_ideal());
      ArtinElem p = ArtinElem::scalar(a, Rat(1));
      for (int k = 0; k < a->nilpotency_index(); ++k) p = p * x;
      CHECK(p.is_zero());
    }
  }
}

TEST_CASE("serialization round trip") {
  auto a = ArtinAlgebra::make({"t1", "t2"}, {{3, 0}, {1, 1}, {0, 2}});
  auto header = serialize_artin(*a);
  CHECK(header == "artin k=2 trunc=t2^2,t1*t2,t1^3");
  auto b = parse_artin_header(header);
  CHECK(b->dim() == a->dim());
  CHECK(b->truncation() == a->truncation());

  auto e = parse_artin_elem(b, "1/2 + 3*t1 - t1^2");
  auto e2 = parse_artin_elem(b, e.str());
  CHECK(e == e2);
}
