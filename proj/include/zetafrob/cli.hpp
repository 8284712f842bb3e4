#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zetafrob/gf.hpp"

namespace zetafrob::cli {

/// Parses `a:b:...,c:d:...` (coefficients ascending, n residues each in [0,p)).
/// `arg` names the flag in diagnostics, which carry a 1-based column.
std::vector<std::vector<std::int64_t>> parse_coefficients(const std::string& text, int n,
                                                          std::uint64_t p, const std::string& arg);

/// Exit codes: 0 success, 2 bad input, 3 internal invariant failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetafrob::cli
