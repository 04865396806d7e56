#include "conedef/dgla.hpp"

#include <sstream>

namespace conedef {

std::string CheckReport::summary() const {
  if (ok()) return "OK";
  std::ostringstream out;
  out << "FAIL (" << violations.size() << " violations)";
  for (const auto& v : violations) out << "\n  " << v;
  return out.str();
}

namespace {

QVec bracket_coords(const DglaData& d, const QVec& x, const QVec& y) {
  const int n = d.space->dim();
  QVec out(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const QVec& c = d.bracket[i][j];
      for (int k = 0; k < n; ++k)
        if (c[k] != 0) out[k] += x[i] * y[j] * c[k];
    }
  }
  return out;
}

bool qvec_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

} // namespace

CheckReport check_dgla(const DglaData& data) {
  CheckReport rep;
  const auto& sp = data.space;
  const int n = sp->dim();
  if (static_cast<int>(data.bracket.size()) != n) {
    rep.violations.push_back("bracket table has wrong size");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(data.bracket[i].size()) != n) {
      rep.violations.push_back("bracket table has wrong size");
      return rep;
    }
    for (int j = 0; j < n; ++j)
      if (static_cast<int>(data.bracket[i][j].size()) != n) {
        rep.violations.push_back("bracket table has wrong size");
        return rep;
      }
  }
  auto name = [&](int i) { return (*sp)[i].name; };

  // d^2 = 0
  if (!(data.d.matrix() * data.d.matrix()).is_zero())
    rep.violations.push_back("d^2 != 0");

  // bracket grading
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (data.bracket[i][j][k] != 0 &&
            sp->degree(k) != sp->degree(i) + sp->degree(j)) {
          rep.violations.push_back("bracket [" + name(i) + "," + name(j) +
                                   "] not degree-homogeneous");
          k = n; // one message per pair
        }

  // graded antisymmetry: [x,y] + (-1)^{|x||y|} [y,x] = 0
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int s = (sp->degree(i) * sp->degree(j)) % 2 ? -1 : 1;
      QVec lhs = data.bracket[i][j];
      for (int k = 0; k < n; ++k) lhs[k] += Rat(s) * data.bracket[j][i][k];
      if (!qvec_zero(lhs))
        rep.violations.push_back("antisymmetry fails on (" + name(i) + "," +
                                 name(j) + ")");
    }

  // graded Jacobi: (-1)^{|a||c|}[a,[b,c]] + cyclic = 0
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int da = sp->degree(a), db = sp->degree(b), dc = sp->degree(c);
        QVec ea(n, Rat(0)), eb(n, Rat(0)), ec(n, Rat(0));
        ea[a] = 1; eb[b] = 1; ec[c] = 1;
        QVec t1 = bracket_coords(data, ea, data.bracket[b][c]);
        QVec t2 = bracket_coords(data, eb, data.bracket[c][a]);
        QVec t3 = bracket_coords(data, ec, data.bracket[a][b]);
        int s1 = (da * dc) % 2 ? -1 : 1;
        int s2 = (db * da) % 2 ? -1 : 1;
        int s3 = (dc * db) % 2 ? -1 : 1;
        QVec sum(n, Rat(0));
        for (int k = 0; k < n; ++k)
          sum[k] = Rat(s1) * t1[k] + Rat(s2) * t2[k] + Rat(s3) * t3[k];
        if (!qvec_zero(sum))
          rep.violations.push_back("Jacobi fails on (" + name(a) + "," +
                                   name(b) + "," + name(c) + ")");
      }

  // Leibniz: d[x,y] = [dx,y] + (-1)^{|x|} [x,dy]
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QVec lhs = data.d.matrix().apply(data.bracket[i][j]);
      QVec di = data.d.matrix().column(i), dj = data.d.matrix().column(j);
      QVec ei(n, Rat(0)), ej(n, Rat(0));
      ei[i] = 1; ej[j] = 1;
      QVec r1 = bracket_coords(data, di, ej);
      QVec r2 = bracket_coords(data, ei, dj);
      int s = sp->degree(i) % 2 ? -1 : 1;
      QVec diffv(n, Rat(0));
      for (int k = 0; k < n; ++k) diffv[k] = lhs[k] - r1[k] - Rat(s) * r2[k];
      if (!qvec_zero(diffv))
        rep.violations.push_back("Leibniz fails on (" + name(i) + "," +
                                 name(j) + ")");
    }
  return rep;
}

Dgla::Dgla(DglaData data) : data_(std::move(data)) {
  auto rep = check_dgla(data_);
  if (!rep.ok())
    throw std::invalid_argument("invalid DGLA: " + rep.violations.front() +
                                (rep.violations.size() > 1 ? " (and more)" : ""));
}

Vec Dgla::bracket(const Vec& x, const Vec& y) const {
  const int n = dim();
  Vec out(data_.space, x.ring());
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      auto prod = x[i] * y[j];
      const QVec& c = data_.bracket[i][j];
      for (int k = 0; k < n; ++k)
        if (c[k] != 0) out[k] = out[k] + prod * c[k];
    }
  }
  return out;
}

Dgla Dgla::abelian(SpacePtr sp, GradedMap d) {
  const int n = sp->dim();
  DglaData data{sp, std::move(d),
                std::vector<std::vector<QVec>>(
                    n, std::vector<QVec>(n, QVec(n, Rat(0))))};
  return Dgla(std::move(data));
}

Dgla Dgla::sl2() {
  // shared instance so every caller sees the same space pointer
  static const Dgla instance = [] {
    auto sp = GradedSpace::make({{"h", 0, {}}, {"e", 0, {}}, {"f", 0, {}}});
  DglaData data{sp, GradedMap::zero(sp, sp, 1),
                std::vector<std::vector<QVec>>(3, std::vector<QVec>(3, QVec(3, Rat(0))))};
  auto set = [&](int i, int j, int k, int v) {
    data.bracket[i][j][k] = v;
    data.bracket[j][i][k] = -v;
  };
  set(0, 1, 1, 2);  // [h,e] = 2e
  set(0, 2, 2, -2); // [h,f] = -2f
  set(1, 2, 0, 1);  // [e,f] = h
  return Dgla(std::move(data));
  }();
  return instance;
}

DglaMorphism::DglaMorphism(DglaPtr source, DglaPtr target, GradedMap map)
    : src_(std::move(source)), dst_(std::move(target)), map_(std::move(map)) {
  if (map_.source() != src_->space() || map_.target() != dst_->space() ||
      map_.shift() != 0)
    throw std::invalid_argument("morphism map shape mismatch");
  auto rep = check(*src_, *dst_, map_);
  if (!rep.ok())
    throw std::invalid_argument("invalid DGLA morphism: " + rep.violations.front());
}

CheckReport DglaMorphism::check(const Dgla& src, const Dgla& dst,
                                const GradedMap& map) {
  CheckReport rep;
  auto rats = ArtinAlgebra::rationals();
  // commutes with d
  if (!(map.matrix() * src.d_map().matrix() ==
        dst.d_map().matrix() * map.matrix()))
    rep.violations.push_back("morphism does not commute with d");
  // preserves brackets on basis pairs
  for (int i = 0; i < src.dim(); ++i)
    for (int j = 0; j < src.dim(); ++j) {
      Vec bi = src.basis(rats, i), bj = src.basis(rats, j);
      Vec lhs = map.apply(src.bracket(bi, bj));
      Vec rhs = dst.bracket(map.apply(bi), map.apply(bj));
      if (!(lhs == rhs))
        rep.violations.push_back("morphism breaks bracket on (" +
                                 (*src.space())[i].name + "," +
                                 (*src.space())[j].name + ")");
    }
  return rep;
}

} // namespace conedef
