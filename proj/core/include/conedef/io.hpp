#pragma once

#include "conedef/cartan.hpp"
#include "conedef/period.hpp"

#include <iosfwd>

namespace conedef {

/// Text formats used by the command-line tool.  All parsers throw
/// std::invalid_argument with a message naming the offending line.
///
///   ring file      one header line `artin k=<n> trunc=<m1,m2,...>`
///   algebra file   `basis <name> deg=<n> [bideg=(p,q)]`,
///                  `d <name> = <combo>`, `bracket <n1> <n2> = <combo>`
///   morphism file  `source <path>`, `target <path>`, optional
///                  `shift <n>` (default 0), `map <name> = <combo>`
///   model file     `dot (p,q)` and `square (p,q)` lines
///   element file   optional leading artin header, then
///                  `<prefix> <name> = <artin element>` lines
///
/// Combos are rational linear combinations of basis names, e.g.
/// `2*e - 1/3*f`, or `0`.  `#` starts a comment anywhere.

/// Coordinates of a linear combination of named basis elements.
QVec parse_combo(const GradedSpace& sp, const std::string& text);

std::string read_text_file(const std::string& path);

ArtinPtr load_ring_file(const std::string& path);

DglaData parse_dgla_data(const std::string& text);
DglaData load_dgla_file(const std::string& path);

struct MorphismFile {
  DglaPtr source;
  DglaPtr target;
  int shift = 0;
  GradedMap map;
};
/// `source`/`target` paths are resolved relative to the morphism file.
MorphismFile load_morphism_file(const std::string& path);

DotSquareSpec parse_dotsquare_spec(const std::string& text);
DotSquareSpec load_dotsquare_file(const std::string& path);

struct ElemEntry {
  std::string prefix;  // "" when the line is `<name> = ...`
  std::string name;
  std::string expr;
};
struct ElemFile {
  ArtinPtr ring;  // null when the file carries no artin header
  std::vector<ElemEntry> entries;
};
ElemFile load_elem_file(const std::string& path);

/// Assembles the entries with the given prefix into a vector over sp;
/// unknown basis names throw.
Vec elem_entries_to_vec(const ElemFile& f, const std::string& prefix,
                        const SpacePtr& sp, const ArtinPtr& ring);

/// One line per (row class, column class) in class order:
/// `<row> <- <col> : <element>`; zero entries are skipped, empty matrix
/// prints `(empty)`.
std::string serialize_period_matrix(const PeriodMatrix& P);

std::string serialize_vec(const Vec& v);

} // namespace conedef
