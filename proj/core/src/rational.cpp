#include "conedef/rational.hpp"

namespace conedef {

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r{mpz_class(t)};
      return r;
    }
    mpz_class num(t.substr(0, slash));
    mpz_class den(t.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace conedef
