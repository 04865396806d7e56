#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace conedef {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (GMP keeps mpq_class canonical).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q". Throws on malformed input or q = 0.
Rat parse_rat(const std::string& s);

/// Renders as "p" or "p/q" with positive q.
std::string to_string(const Rat& r);

} // namespace conedef
