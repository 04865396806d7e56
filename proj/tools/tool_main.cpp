#include "conedef/io.hpp"
#include "conedef/selftest.hpp"

#include <cstring>
#include <iostream>

using namespace conedef;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;

void usage(std::ostream& out) {
  out << "usage: conedef <subcommand> [args]\n"
         "  check-dgla <file>\n"
         "  check-cartan <ifile>\n"
         "  cone-mc <chifile> <elemfile>\n"
         "  gauge <chifile> <gfile> <elemfile>\n"
         "  lemma-check <modelfile> | --torus <n>\n"
         "  period <modelfile|--torus n> <xifile> --ring <ringfile> [-m <int>]\n"
         "  first-order <modelfile> | --torus <n>\n"
         "  obstruction <modelfile> | --torus <n>\n"
         "  selftest [--seed <s>]\n";
}

int report(const CheckReport& r, const std::string& what) {
  if (r.ok()) {
    std::cout << "OK " << what << "\n";
    return kExitOk;
  }
  for (const auto& v : r.violations) std::cout << "FAIL " << what << " " << v << "\n";
  return kExitViolation;
}

ArtinPtr require_ring(const ElemFile& f, const std::string& path) {
  if (!f.ring) throw std::invalid_argument("element file needs an artin header: " + path);
  return f.ring;
}

int cmd_check_dgla(const std::string& path) {
  return report(check_dgla(load_dgla_file(path)), "check-dgla " + path);
}

int cmd_check_cartan(const std::string& path) {
  auto mf = load_morphism_file(path);
  if (mf.shift != -1)
    throw std::invalid_argument("a Cartan candidate must declare shift -1");
  CartanCandidate cand(mf.source, mf.target, mf.map);
  return report(check_cartan(cand), "check-cartan " + path);
}

int cmd_cone_mc(const std::string& chipath, const std::string& elempath) {
  auto mf = load_morphism_file(chipath);
  auto cone = make_cone(*mf.source, *mf.target, mf.map);
  auto ef = load_elem_file(elempath);
  auto ring = require_ring(ef, elempath);
  ConeElem c{elem_entries_to_vec(ef, "l", mf.source->space(), ring),
             elem_entries_to_vec(ef, "m", mf.target->space(), ring), 1};
  if (!c.l.homogeneous_of_degree(1) || !c.m.homogeneous_of_degree(0))
    throw std::invalid_argument("cone element must have l in degree 1, m in degree 0");
  auto res = cone.mc_residual_cone(c);
  if (res.is_zero()) {
    std::cout << "OK cone-mc\n";
    return kExitOk;
  }
  std::cout << "FAIL cone-mc residual:\n";
  std::cout << "l-part:\n" << serialize_vec(res.l);
  std::cout << "m-part:\n" << serialize_vec(res.m);
  return kExitViolation;
}

int cmd_gauge(const std::string& chipath, const std::string& gpath,
              const std::string& elempath) {
  auto mf = load_morphism_file(chipath);
  auto cone = make_cone(*mf.source, *mf.target, mf.map);
  auto ef = load_elem_file(elempath);
  auto ring = require_ring(ef, elempath);
  auto gf = load_elem_file(gpath);
  MCChiElem e{elem_entries_to_vec(ef, "x", mf.source->space(), ring),
              elem_entries_to_vec(ef, "a", mf.target->space(), ring)};
  Vec l = elem_entries_to_vec(gf, "l", mf.source->space(), ring);
  Vec m = elem_entries_to_vec(gf, "m", mf.target->space(), ring);
  const bool before = cone.mc_chi_residuals(e).ok();
  auto moved = cone.gauge_act_chi(l, m, e);
  const bool after = cone.mc_chi_residuals(moved).ok();
  std::cout << "mc-before " << (before ? "OK" : "FAIL") << "\n";
  std::cout << "mc-after " << (after ? "OK" : "FAIL") << "\n";
  for (int i = 0; i < moved.x.dim(); ++i)
    if (!moved.x[i].is_zero())
      std::cout << "x " << (*mf.source->space())[i].name << " = "
                << moved.x[i].str() << "\n";
  for (int i = 0; i < moved.a.dim(); ++i)
    if (!moved.a[i].is_zero())
      std::cout << "a " << (*mf.target->space())[i].name << " = "
                << moved.a[i].str() << "\n";
  // The gauge action must preserve the Maurer-Cartan locus.
  return before == after ? kExitOk : kExitViolation;
}

/// Shared parsing of `<modelfile>` vs `--torus <n>` model designators.
struct ModelArg {
  bool torus = false;
  int n = 0;
  std::string path;
};

ModelArg parse_model_arg(const std::vector<std::string>& args, size_t& i) {
  ModelArg out;
  if (args[i] == "--torus") {
    if (i + 1 >= args.size()) throw std::invalid_argument("--torus needs a dimension");
    out.torus = true;
    out.n = std::stoi(args[++i]);
  } else {
    out.path = args[i];
  }
  return out;
}

ModelPair model_pair_of(const ModelArg& m) {
  return m.torus ? build_torus_model(m.n)
                 : dot_square_model_pair(load_dotsquare_file(m.path));
}

int cmd_lemma_check(const ModelArg& m) {
  auto model = m.torus ? *build_torus_model(m.n).forms
                       : build_dot_square_algebra(load_dotsquare_file(m.path));
  auto inv = model.check();
  if (!inv.ok()) return report(inv, "lemma-check (model invariants)");
  auto lem = check_deldelbar_lemma(model);
  if (lem.ok()) {
    std::cout << "OK lemma-check\n";
    return kExitOk;
  }
  for (const auto& v : lem.violations) std::cout << "FAIL lemma-check " << v << "\n";
  if (lem.witness) std::cout << "witness:\n" << serialize_vec(*lem.witness);
  return kExitViolation;
}

int cmd_period(const ModelArg& marg, const std::string& xipath,
               const std::string& ringpath, std::optional<int> m) {
  auto ring = load_ring_file(ringpath);
  auto ef = load_elem_file(xipath);
  auto mp = model_pair_of(marg);
  PeriodMatrix P = [&] {
    if (marg.torus) {
      Vec xi = elem_entries_to_vec(ef, "", mp.poly->space(), ring);
      return phi(mp, xi);
    }
    // Dot/square model: the element file gives the exponent of e^a as
    // `a <row>:<col> = <element>` operator entries; the period matrix is
    // psi of (0, e^a).
    Operator a(mp.forms->space(), ring, 0);
    const auto& sp = mp.forms->space();
    for (const auto& e : ef.entries) {
      if (e.prefix != "a") continue;
      auto colon = e.name.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("operator entry must be <row>:<col>");
      auto r = sp->index_of(e.name.substr(0, colon));
      auto c = sp->index_of(e.name.substr(colon + 1));
      if (!r || !c) throw std::invalid_argument("unknown basis name: " + e.name);
      a.at(*r, *c) = parse_artin_elem(ring, e.expr);
    }
    return psi_tilde(*mp.forms, Operator(sp, ring, 1), a);
  }();
  std::cout << serialize_period_matrix(P);
  if (!m) return kExitOk;
  auto F = hodge_filtration(*mp.forms, *m);
  auto cols = grassmann_project(P, F);
  std::cout << "filtration m=" << *m << " rank=" << cols.size() << "\n";
  const auto& classes = P.cohomology()->classes();
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t r = 0; r < cols[j].size(); ++r)
      if (!cols[j][r].is_zero())
        std::cout << "F[" << j << "] " << classes[r].name << " : "
                  << cols[j][r].str() << "\n";
  if (marg.torus) {
    Vec xi = elem_entries_to_vec(ef, "", mp.poly->space(), ring);
    const bool ok = period_theorem_check(mp, xi, *m);
    std::cout << (ok ? "OK" : "FAIL") << " period-theorem m=" << *m << "\n";
    if (!ok) return kExitViolation;
  }
  return kExitOk;
}

int cmd_first_order(const ModelArg& marg) {
  auto rep = first_order_differential(model_pair_of(marg));
  for (size_t c = 0; c < rep.class_names.size(); ++c) {
    std::cout << "class " << rep.class_names[c] << "\n";
    const QMat& d = rep.differential[c];
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j)
        if (d.at(i, j) != 0)
          std::cout << "  (" << i << "," << j << ") = " << d.at(i, j).get_str()
                    << "\n";
  }
  CheckReport r{rep.violations};
  return report(r, "first-order (differential == contraction)");
}

int cmd_obstruction(const ModelArg& marg) {
  auto rep = obstruction_subspace(model_pair_of(marg));
  std::cout << "classes:";
  for (const auto& n : rep.class_names) std::cout << " " << n;
  std::cout << "\nobstruction-kernel dim=" << rep.kernel.size() << "\n";
  for (const auto& v : rep.kernel) {
    std::cout << "kernel:";
    for (size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0)
        std::cout << " " << v[c].get_str() << "*" << rep.class_names[c];
    std::cout << "\n";
  }
  return kExitOk;
}

int dispatch(const std::vector<std::string>& args) {
  const std::string& cmd = args[0];
  size_t i = 1;
  if (cmd == "check-dgla" && args.size() == 2) return cmd_check_dgla(args[1]);
  if (cmd == "check-cartan" && args.size() == 2) return cmd_check_cartan(args[1]);
  if (cmd == "cone-mc" && args.size() == 3) return cmd_cone_mc(args[1], args[2]);
  if (cmd == "gauge" && args.size() == 4)
    return cmd_gauge(args[1], args[2], args[3]);
  if (cmd == "lemma-check" && args.size() >= 2) {
    auto m = parse_model_arg(args, i);
    return cmd_lemma_check(m);
  }
  if (cmd == "period" && args.size() >= 3) {
    auto marg = parse_model_arg(args, i);
    std::string xipath, ringpath;
    std::optional<int> m;
    for (++i; i < args.size(); ++i) {
      if (args[i] == "--ring" && i + 1 < args.size())
        ringpath = args[++i];
      else if (args[i] == "-m" && i + 1 < args.size())
        m = std::stoi(args[++i]);
      else if (xipath.empty())
        xipath = args[i];
      else
        throw std::invalid_argument("unexpected argument: " + args[i]);
    }
    if (xipath.empty() || ringpath.empty())
      throw std::invalid_argument("period needs <xifile> and --ring <ringfile>");
    return cmd_period(marg, xipath, ringpath, m);
  }
  if (cmd == "first-order" && args.size() >= 2)
    return cmd_first_order(parse_model_arg(args, i));
  if (cmd == "obstruction" && args.size() >= 2)
    return cmd_obstruction(parse_model_arg(args, i));
  if (cmd == "selftest") {
    std::uint64_t seed = 0;
    if (args.size() == 3 && args[1] == "--seed")
      seed = std::stoull(args[2]);
    else if (args.size() != 1)
      throw std::invalid_argument("selftest takes only --seed <s>");
    return run_selftest(seed, std::cout);
  }
  usage(std::cerr);
  return kExitBadInput;
}

} // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    usage(std::cerr);
    return kExitBadInput;
  }
  try {
    return dispatch(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
