#include "conedef/fixtures.hpp"

namespace conedef {

Dgla sl2_theta() {
  static const Dgla instance = [] {
  std::vector<BasisElem> basis;
  for (const char* n : {"h", "e", "f"}) basis.push_back({n, 0, {}});
  for (const char* n : {"h.th", "e.th", "f.th"}) basis.push_back({n, 1, {}});
  auto sp = GradedSpace::make(std::move(basis));
  auto sl2 = Dgla::sl2();
  DglaData data{sp, GradedMap::zero(sp, sp, 1),
                std::vector<std::vector<QVec>>(6, std::vector<QVec>(6, QVec(6, Rat(0))))};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const Rat& c = sl2.data().bracket[i][j][k];
        if (c == 0) continue;
        data.bracket[i][j][k] = c;         // [x, y]
        data.bracket[i][j + 3][k + 3] = c; // [x, y.th] = [x,y].th
        data.bracket[i + 3][j][k + 3] = c; // [x.th, y] = [x,y].th
      }
  return Dgla(std::move(data));
  }();
  return instance;
}

Dgla grading_triple() {
  static const Dgla instance = [] {
  auto sp = GradedSpace::make({{"a", 0, {}}, {"x", 1, {}}, {"z", 2, {}}});
  DglaData data{sp, GradedMap::zero(sp, sp, 1),
                std::vector<std::vector<QVec>>(3, std::vector<QVec>(3, QVec(3, Rat(0))))};
  data.bracket[0][1][1] = 1;  // [a,x] = x
  data.bracket[1][0][1] = -1;
  data.bracket[0][2][2] = 2;  // [a,z] = 2z
  data.bracket[2][0][2] = -2;
  data.bracket[1][1][2] = 2;  // [x,x] = 2z
  return Dgla(std::move(data));
  }();
  return instance;
}

Dgla heisenberg() {
  static const Dgla instance = [] {
  auto sp = GradedSpace::make({{"p", 0, {}}, {"q", 0, {}}, {"z", 0, {}}});
  DglaData data{sp, GradedMap::zero(sp, sp, 1),
                std::vector<std::vector<QVec>>(3, std::vector<QVec>(3, QVec(3, Rat(0))))};
  data.bracket[0][1][2] = 1; // [p,q] = z
  data.bracket[1][0][2] = -1;
  return Dgla(std::move(data));
  }();
  return instance;
}

Dgla end_two_term() {
  static const Dgla instance = [] {
  auto v = GradedSpace::make({{"u", 0, {}}, {"w", 1, {}}});
  QMat d(2, 2);
  d.at(1, 0) = 1;
  return to_dgla(EndLie(v, GradedMap(v, v, 1, std::move(d))));
  }();
  return instance;
}

GradedMap sl2_theta_inclusion() {
  auto src = Dgla::sl2().space();
  auto dst = sl2_theta().space();
  QMat m(6, 3);
  for (int i = 0; i < 3; ++i) m.at(i, i) = 1;
  return GradedMap(src, dst, 0, std::move(m));
}

std::vector<ConeFixture> standard_cones() {
  std::vector<ConeFixture> out;
  auto sl2 = Dgla::sl2();
  out.push_back({"id:sl2", make_cone(sl2, sl2, GradedMap::identity(sl2.space()))});
  auto gt = grading_triple();
  out.push_back({"id:grading_triple", make_cone(gt, gt, GradedMap::identity(gt.space()))});
  out.push_back({"incl:sl2->sl2_theta",
                 make_cone(sl2, sl2_theta(), sl2_theta_inclusion())});
  auto twosp = GradedSpace::make({{"u", 0, {}}, {"w", 1, {}}});
  QMat twod(2, 2);
  twod.at(1, 0) = 1;
  auto two = Dgla::abelian(twosp, GradedMap(twosp, twosp, 1, std::move(twod)));
  out.push_back({"zero:two_term->grading_triple",
                 make_cone(two, gt, GradedMap::zero(two.space(), gt.space(), 0))});
  auto endd = end_two_term();
  out.push_back({"id:end_two_term",
                 make_cone(endd, endd, GradedMap::identity(endd.space()))});
  return out;
}

} // namespace conedef
