#include "conedef/io.hpp"

#include <fstream>
#include <sstream>

namespace conedef {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument(msg);
}

std::string strip(std::string s) {
  auto h = s.find('#');
  if (h != std::string::npos) s.erase(h);
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    line = strip(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::pair<int, int> parse_bideg(const std::string& s) {
  int p, q;
  char l, c, r;
  std::istringstream ss(s);
  if (!(ss >> l >> p >> c >> q >> r) || l != '(' || c != ',' || r != ')')
    bad("malformed bidegree: " + s);
  return {p, q};
}

std::string dirname_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? "" : path.substr(0, slash + 1);
}

} // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QVec parse_combo(const GradedSpace& sp, const std::string& text) {
  QVec out(sp.dim(), Rat(0));
  std::string s = strip(text);
  if (s == "0") return out;
  // Split into signed terms `coeff*name` or `name`.
  size_t pos = 0;
  while (pos < s.size()) {
    Rat sign(1);
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-' || s[pos] == ' ')) {
      if (s[pos] == '-') sign *= -1;
      ++pos;
    }
    if (pos >= s.size()) bad("dangling sign in combo: " + text);
    size_t end = s.find_first_of("+-", pos);
    std::string term = strip(s.substr(pos, end - pos));
    pos = (end == std::string::npos) ? s.size() : end;
    if (term.empty()) bad("empty term in combo: " + text);
    Rat coeff(1);
    std::string name = term;
    auto star = term.find('*');
    if (star != std::string::npos) {
      coeff = parse_rat(strip(term.substr(0, star)));
      name = strip(term.substr(star + 1));
    }
    auto idx = sp.index_of(name);
    if (!idx) bad("unknown basis name in combo: " + name);
    out[*idx] += sign * coeff;
  }
  return out;
}

ArtinPtr load_ring_file(const std::string& path) {
  auto ls = lines_of(read_text_file(path));
  if (ls.size() != 1) bad("ring file must contain exactly one artin header: " + path);
  return parse_artin_header(ls[0]);
}

DglaData parse_dgla_data(const std::string& text) {
  std::vector<BasisElem> basis;
  struct Pending {
    std::string kind, a, b, rhs;
  };
  std::vector<Pending> pending;
  for (const std::string& line : lines_of(text)) {
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "basis") {
      BasisElem e;
      std::string tok;
      ss >> e.name;
      bool have_deg = false;
      while (ss >> tok) {
        if (tok.rfind("deg=", 0) == 0) {
          e.deg = std::stoi(tok.substr(4));
          have_deg = true;
        } else if (tok.rfind("bideg=", 0) == 0) {
          e.bideg = parse_bideg(tok.substr(6));
        } else {
          bad("unexpected token in basis line: " + line);
        }
      }
      if (e.name.empty() || !have_deg) bad("malformed basis line: " + line);
      basis.push_back(std::move(e));
    } else if (head == "d" || head == "bracket") {
      Pending p;
      p.kind = head;
      ss >> p.a;
      if (head == "bracket") ss >> p.b;
      std::string eq;
      ss >> eq;
      if (eq != "=") bad("expected '=' in line: " + line);
      std::getline(ss, p.rhs);
      pending.push_back(std::move(p));
    } else {
      bad("unknown directive: " + line);
    }
  }
  if (basis.empty()) bad("algebra file declares no basis");
  auto sp = GradedSpace::make(std::move(basis));
  const int n = sp->dim();
  QMat dmat(n, n);
  std::vector<std::vector<QVec>> bracket(n, std::vector<QVec>(n, QVec(n, Rat(0))));
  for (const auto& p : pending) {
    auto ia = sp->index_of(p.a);
    if (!ia) bad("unknown basis name: " + p.a);
    QVec rhs = parse_combo(*sp, p.rhs);
    if (p.kind == "d") {
      for (int r = 0; r < n; ++r) dmat.at(r, *ia) = rhs[r];
    } else {
      auto ib = sp->index_of(p.b);
      if (!ib) bad("unknown basis name: " + p.b);
      bracket[*ia][*ib] = rhs;
      // graded antisymmetry fills the mirror entry unless given explicitly
      const Rat s((sp->degree(*ia) * sp->degree(*ib)) % 2 ? 1 : -1);
      if (*ia != *ib)
        for (int r = 0; r < n; ++r) bracket[*ib][*ia][r] = s * rhs[r];
    }
  }
  return DglaData{sp, GradedMap(sp, sp, 1, std::move(dmat)), std::move(bracket)};
}

DglaData load_dgla_file(const std::string& path) {
  return parse_dgla_data(read_text_file(path));
}

MorphismFile load_morphism_file(const std::string& path) {
  const std::string dir = dirname_of(path);
  std::string src_path, dst_path;
  int shift = 0;
  std::vector<std::pair<std::string, std::string>> maps;
  for (const std::string& line : lines_of(read_text_file(path))) {
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "source" || head == "target") {
      std::string p;
      ss >> p;
      (head == "source" ? src_path : dst_path) = dir + p;
    } else if (head == "shift") {
      ss >> shift;
    } else if (head == "map") {
      std::string name, eq, rhs;
      ss >> name >> eq;
      if (eq != "=") bad("expected '=' in line: " + line);
      std::getline(ss, rhs);
      maps.emplace_back(name, rhs);
    } else {
      bad("unknown directive: " + line);
    }
  }
  if (src_path.empty() || dst_path.empty())
    bad("morphism file needs source and target lines: " + path);
  MorphismFile out;
  out.source = std::make_shared<Dgla>(load_dgla_file(src_path));
  out.target = std::make_shared<Dgla>(load_dgla_file(dst_path));
  out.shift = shift;
  const auto& ssp = out.source->space();
  const auto& dsp = out.target->space();
  QMat m(dsp->dim(), ssp->dim());
  for (const auto& [name, rhs] : maps) {
    auto j = ssp->index_of(name);
    if (!j) bad("unknown source basis name: " + name);
    QVec col = parse_combo(*dsp, rhs);
    for (int r = 0; r < dsp->dim(); ++r) m.at(r, *j) = col[r];
  }
  out.map = GradedMap(ssp, dsp, shift, std::move(m));
  return out;
}

DotSquareSpec parse_dotsquare_spec(const std::string& text) {
  DotSquareSpec spec;
  for (const std::string& line : lines_of(text)) {
    std::istringstream ss(line);
    std::string head, rest;
    ss >> head;
    std::getline(ss, rest);
    if (head == "dot")
      spec.dots.push_back(parse_bideg(strip(rest)));
    else if (head == "square")
      spec.squares.push_back(parse_bideg(strip(rest)));
    else
      bad("unknown directive in model file: " + line);
  }
  return spec;
}

DotSquareSpec load_dotsquare_file(const std::string& path) {
  return parse_dotsquare_spec(read_text_file(path));
}

ElemFile load_elem_file(const std::string& path) {
  ElemFile out;
  for (const std::string& line : lines_of(read_text_file(path))) {
    if (line.rfind("artin", 0) == 0) {
      if (out.ring) bad("duplicate artin header in element file: " + path);
      out.ring = parse_artin_header(line);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) bad("expected '=' in element line: " + line);
    std::istringstream ss(line.substr(0, eq));
    std::vector<std::string> words;
    std::string w;
    while (ss >> w) words.push_back(w);
    ElemEntry e;
    if (words.size() == 1) {
      e.name = words[0];
    } else if (words.size() == 2) {
      e.prefix = words[0];
      e.name = words[1];
    } else {
      bad("malformed element line: " + line);
    }
    e.expr = strip(line.substr(eq + 1));
    out.entries.push_back(std::move(e));
  }
  return out;
}

Vec elem_entries_to_vec(const ElemFile& f, const std::string& prefix,
                        const SpacePtr& sp, const ArtinPtr& ring) {
  Vec out(sp, ring);
  for (const auto& e : f.entries) {
    if (e.prefix != prefix) continue;
    auto idx = sp->index_of(e.name);
    if (!idx) bad("unknown basis name in element file: " + e.name);
    out[*idx] = out[*idx] + parse_artin_elem(ring, e.expr);
  }
  return out;
}

std::string serialize_period_matrix(const PeriodMatrix& P) {
  std::string out;
  const auto& classes = P.cohomology()->classes();
  for (int k = 0; k < P.dim(); ++k)
    for (int r = 0; r < P.dim(); ++r)
      if (!P.at(r, k).is_zero())
        out += classes[r].name + " <- " + classes[k].name + " : " +
               P.at(r, k).str() + "\n";
  if (out.empty()) out = "(empty)\n";
  return out;
}

std::string serialize_vec(const Vec& v) {
  std::string out;
  for (int i = 0; i < v.dim(); ++i)
    if (!v[i].is_zero())
      out += v.space()->basis()[i].name + " : " + v[i].str() + "\n";
  if (out.empty()) out = "0\n";
  return out;
}

} // namespace conedef
