#pragma once

#include <cstdint>
#include <iosfwd>

namespace conedef {

/// Runs the condensed property suite and writes one line per property
/// (`OK <name>` or `FAIL <name>: <detail>`) followed by a summary line.
/// Deterministic: the same seed yields byte-identical output.  Returns 0
/// when every property holds, 1 otherwise.
int run_selftest(std::uint64_t seed, std::ostream& out);

} // namespace conedef
