#pragma once

// Text formats shared by the CLI and the tests.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tlrep/braidrep.hpp"
#include "tlrep/recoupling.hpp"
#include "tlrep/verify.hpp"

namespace tlrep::io {

/// Whitespace-separated signed nonzero integers with |value| <= n-1.
/// Throws ParseError naming the 1-based token position.
BraidWord parse_braid_word(std::string_view text, int strands);

struct LabelSpec {
  std::vector<int> inputs;
  int output = 0;
};

/// "a1,a2,...,an:out".
LabelSpec parse_labels(std::string_view text);

struct GridSpec {
  int r_min = 0;
  int r_max = 0;
};

/// "rmin..rmax" or a single "r".
GridSpec parse_grid(std::string_view text);

/// Shortest round-trip decimal, locale independent (17 significant digits
/// at most).
std::string format_real(double x);

/// {"rows": [...], "cols": [...], "data": [[x, ...], ...]}
nlohmann::json to_json(const RecouplingMatrix& m);
/// {"dim": n, "data": [[re, im], ...]} row-major.
nlohmann::json to_json(const ComplexMatrix& u);
UnitaryMatrix unitary_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CheckReport& report);

/// One 2x2 unitary per non-blank line: re/im of u00 u01 u10 u11.
/// Throws ParseError on malformed lines or non-unitary entries.
std::vector<Unitary2> read_targets(std::istream& in, double tol);

}  // namespace tlrep::io
