#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monospread/ideal.hpp"

namespace mspread {

/// Text format:
///
///     n 3            # header: number of variables
///     1 1 1          # one exponent vector per generator
///     0 2 1
///
/// `#` starts a comment, blank lines are ignored. Errors carry the 1-based
/// line number.
struct ParsedIdeal {
  MonomialIdeal ideal;
  /// Redundant generators removed by minimalization, in input order.
  std::vector<Monomial> dropped;
};

ParsedIdeal parse_ideal(std::string_view text);

/// Inverse of parse_ideal for a minimal generating set.
std::string format_ideal(const MonomialIdeal& ideal);

}  // namespace mspread
