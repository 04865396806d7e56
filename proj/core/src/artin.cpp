#include "conedef/artin.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace conedef {

namespace {

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int total_deg(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// degree-lexicographic order
bool deglex_less(const Monomial& a, const Monomial& b) {
  int da = total_deg(a), db = total_deg(b);
  if (da != db) return da < db;
  return a < b;
}

} // namespace

std::shared_ptr<const ArtinAlgebra>
ArtinAlgebra::make(std::vector<std::string> variables,
                   std::vector<Monomial> truncation) {
  const int k = static_cast<int>(variables.size());
  {
    std::set<std::string> uniq(variables.begin(), variables.end());
    if (static_cast<int>(uniq.size()) != k)
      throw std::invalid_argument("duplicate variable names");
  }
  for (const auto& m : truncation) {
    if (static_cast<int>(m.size()) != k)
      throw std::invalid_argument("truncation monomial has wrong arity");
    if (total_deg(m) == 0)
      throw std::invalid_argument("truncation ideal contains 1: zero ring");
  }
  // Artinian check: every variable needs a pure power among the generators,
  // otherwise the quotient is infinite-dimensional.
  for (int v = 0; v < k; ++v) {
    bool ok = false;
    for (const auto& m : truncation) {
      bool pure = m[v] > 0;
      for (int w = 0; w < k && pure; ++w)
        if (w != v && m[w] > 0) pure = false;
      if (pure) { ok = true; break; }
    }
    if (!ok)
      throw std::invalid_argument(
          "ideal does not contain a power of variable '" + variables[v] +
          "': quotient would not be Artinian");
  }

  auto in_ideal = [&](const Monomial& m) {
    for (const auto& g : truncation)
      if (divides(g, m)) return true;
    return false;
  };

  // Enumerate the standard monomials by breadth-first closure from 1; the
  // complement of a monomial ideal is automatically closed under division.
  std::set<Monomial> seen;
  std::vector<Monomial> stack;
  Monomial one(k, 0);
  seen.insert(one);
  stack.push_back(one);
  while (!stack.empty()) {
    Monomial m = stack.back();
    stack.pop_back();
    for (int v = 0; v < k; ++v) {
      Monomial n = m;
      n[v]++;
      if (seen.count(n) || in_ideal(n)) continue;
      seen.insert(n);
      stack.push_back(n);
    }
  }

  auto a = std::shared_ptr<ArtinAlgebra>(new ArtinAlgebra());
  a->vars_ = std::move(variables);
  a->basis_.assign(seen.begin(), seen.end());
  std::sort(a->basis_.begin(), a->basis_.end(), deglex_less);
  std::sort(truncation.begin(), truncation.end(), deglex_less);
  a->trunc_ = std::move(truncation);
  int maxdeg = 0;
  for (size_t i = 0; i < a->basis_.size(); ++i) {
    a->index_[a->basis_[i]] = static_cast<int>(i);
    a->degs_.push_back(total_deg(a->basis_[i]));
    maxdeg = std::max(maxdeg, a->degs_.back());
  }
  a->nilpotency_ = maxdeg + 1;
  const int n = a->dim();
  a->mul_.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Monomial p(k, 0);
      for (int v = 0; v < k; ++v) p[v] = a->basis_[i][v] + a->basis_[j][v];
      auto it = a->index_.find(p);
      a->mul_[i][j] = it == a->index_.end() ? -1 : it->second;
    }
  return a;
}

std::shared_ptr<const ArtinAlgebra> ArtinAlgebra::rationals() {
  static std::shared_ptr<const ArtinAlgebra> q = make({}, {});
  return q;
}

std::optional<int> ArtinAlgebra::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string ArtinAlgebra::monomial_string(int basis_idx) const {
  return monomial_to_string(vars_, basis_[basis_idx]);
}

bool ArtinAlgebra::same_ring(const ArtinAlgebra& other) const {
  return this == &other || (vars_ == other.vars_ && trunc_ == other.trunc_);
}

ArtinElem::ArtinElem(ArtinPtr alg)
    : alg_(std::move(alg)), c_(alg_->dim(), Rat(0)) {}

ArtinElem::ArtinElem(ArtinPtr alg, std::vector<Rat> coeffs)
    : alg_(std::move(alg)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != alg_->dim())
    throw std::invalid_argument("coefficient vector has wrong length");
}

ArtinElem ArtinElem::scalar(ArtinPtr alg, const Rat& c) {
  ArtinElem e(std::move(alg));
  e.c_[0] = c;
  return e;
}

ArtinElem ArtinElem::variable(ArtinPtr alg, int var) {
  Monomial m(alg->num_vars(), 0);
  m[var] = 1;
  auto idx = alg->index_of(m);
  ArtinElem e(std::move(alg));
  if (idx) e.c_[*idx] = 1;
  return e;
}

bool ArtinElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool ArtinElem::in_max_ideal() const { return c_[0] == 0; }

int ArtinElem::order() const {
  int best = alg_->nilpotency_index() + 1;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0)
      best = std::min(best, alg_->total_degree(static_cast<int>(i)));
  return best;
}

ArtinElem ArtinElem::graded_part(int k) const {
  ArtinElem r(alg_);
  for (size_t i = 0; i < c_.size(); ++i)
    if (alg_->total_degree(static_cast<int>(i)) == k) r.c_[i] = c_[i];
  return r;
}

ArtinElem ArtinElem::operator-() const {
  ArtinElem r(alg_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

ArtinElem ArtinElem::operator+(const ArtinElem& o) const {
  if (!alg_->same_ring(*o.alg_))
    throw std::invalid_argument("mismatched Artin algebras");
  ArtinElem r(alg_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

ArtinElem ArtinElem::operator-(const ArtinElem& o) const {
  return *this + (-o);
}

ArtinElem ArtinElem::operator*(const ArtinElem& o) const {
  if (!alg_->same_ring(*o.alg_))
    throw std::invalid_argument("mismatched Artin algebras");
  ArtinElem r(alg_);
  const int n = alg_->dim();
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (o.c_[j] == 0) continue;
      int k = alg_->mul_table(i, j);
      if (k >= 0) r.c_[k] += c_[i] * o.c_[j];
    }
  }
  return r;
}

ArtinElem ArtinElem::operator*(const Rat& s) const {
  ArtinElem r(alg_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
  return r;
}

bool ArtinElem::operator==(const ArtinElem& o) const {
  return alg_->same_ring(*o.alg_) && c_ == o.c_;
}

std::string ArtinElem::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat v = c_[i];
    if (first) {
      if (v < 0) { out << "-"; v = -v; }
    } else {
      out << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    std::string mon = alg_->monomial_string(static_cast<int>(i));
    if (mon == "1") {
      out << to_string(v);
    } else if (v == 1) {
      out << mon;
    } else {
      out << to_string(v) << "*" << mon;
    }
  }
  if (first) return "0";
  return out.str();
}

Monomial parse_monomial(const std::vector<std::string>& vars,
                        const std::string& text) {
  Monomial m(vars.size(), 0);
  std::string t;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t == "1" || t.empty()) return m;
  std::stringstream ss(t);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    if (factor == "1") continue;
    std::string name = factor;
    int exp = 1;
    auto caret = factor.find('^');
    if (caret != std::string::npos) {
      name = factor.substr(0, caret);
      exp = std::stoi(factor.substr(caret + 1));
      if (exp < 0) throw std::invalid_argument("negative exponent: " + text);
    }
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
      throw std::invalid_argument("unknown variable '" + name + "' in " + text);
    m[it - vars.begin()] += exp;
  }
  return m;
}

std::string monomial_to_string(const std::vector<std::string>& vars,
                               const Monomial& m) {
  std::string out;
  for (size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[v];
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

ArtinElem parse_artin_elem(ArtinPtr alg, const std::string& text) {
  // split on '+' and '-' at top level (no parentheses in this grammar)
  ArtinElem result(alg);
  std::string t;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty() || t == "0") return result;
  std::vector<std::pair<int, std::string>> terms; // sign, body
  int sign = 1;
  std::string cur;
  for (size_t i = 0; i < t.size(); ++i) {
    char ch = t[i];
    if ((ch == '+' || ch == '-') && i > 0 && t[i - 1] != '^' && t[i - 1] != '/' &&
        t[i - 1] != '*') {
      if (!cur.empty()) terms.emplace_back(sign, cur);
      cur.clear();
      sign = ch == '-' ? -1 : 1;
    } else if (ch == '-' && i == 0) {
      sign = -1;
    } else if (ch == '+' && i == 0) {
      sign = 1;
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) terms.emplace_back(sign, cur);
  for (auto& [sgn, body] : terms) {
    // split into leading rational coefficient and monomial part
    Rat coeff(1);
    std::string mon = body;
    if (!body.empty() && (isdigit(static_cast<unsigned char>(body[0])))) {
      // coefficient runs until a '*' that is followed by a variable name
      size_t pos = 0;
      while (pos < body.size() &&
             (isdigit(static_cast<unsigned char>(body[pos])) || body[pos] == '/'))
        pos++;
      coeff = parse_rat(body.substr(0, pos));
      if (pos < body.size()) {
        if (body[pos] != '*')
          throw std::invalid_argument("malformed term: " + body);
        mon = body.substr(pos + 1);
      } else {
        mon = "1";
      }
    }
    Monomial m = parse_monomial(alg->variables(), mon);
    auto idx = alg->index_of(m);
    if (idx) {
      std::vector<Rat> cs(alg->dim(), Rat(0));
      cs[*idx] = coeff * sgn;
      result = result + ArtinElem(alg, cs);
    }
    // monomials in the ideal contribute zero
  }
  return result;
}

std::string serialize_artin(const ArtinAlgebra& a) {
  std::string out = "artin k=" + std::to_string(a.num_vars()) + " trunc=";
  const auto& tr = a.truncation();
  for (size_t i = 0; i < tr.size(); ++i) {
    if (i) out += ",";
    out += monomial_to_string(a.variables(), tr[i]);
  }
  return out;
}

ArtinPtr parse_artin_header(const std::string& line) {
  std::istringstream ss(line);
  std::string word;
  ss >> word;
  if (word != "artin") throw std::invalid_argument("expected 'artin' header");
  std::string kpart, tpart;
  ss >> kpart >> tpart;
  if (kpart.rfind("k=", 0) != 0 || tpart.rfind("trunc=", 0) != 0)
    throw std::invalid_argument("malformed artin header: " + line);
  int k = std::stoi(kpart.substr(2));
  std::vector<std::string> vars;
  for (int i = 1; i <= k; ++i) vars.push_back("t" + std::to_string(i));
  std::vector<Monomial> trunc;
  std::stringstream ts(tpart.substr(6));
  std::string mon;
  while (std::getline(ts, mon, ','))
    if (!mon.empty()) trunc.push_back(parse_monomial(vars, mon));
  return ArtinAlgebra::make(vars, trunc);
}

} // namespace conedef
