#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monospread/ideal.hpp"

namespace mspread {

struct InvariantRow {
  /// 0 for the original ideal, otherwise the spreading parameter.
  std::size_t t = 0;
  std::size_t ambient = 0;
  std::size_t depth = 0;
  std::size_t sdepth_quotient = 0;
  std::size_t sdepth_ideal = 0;
};

struct LawCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  /// "<=" or "==".
  std::string relation;
  bool passed = false;
};

struct LawsReport {
  std::size_t n = 0;
  std::size_t d = 0;
  InvariantRow base;
  /// One row per spreading parameter, ascending, always including t = n.
  std::vector<InvariantRow> spreads;
  bool lattice_isomorphic = false;
  bool smooth = false;
  std::vector<LawCheck> checks;

  bool all_passed() const;
};

/// Computes depth and both Stanley depths for T_n/I and for every
/// I^{sigma^t} in T_{td}, t in {n} ∪ [t_first, t_last], and checks:
///  - the three upper bounds at t = n, with equality whenever
///    L_I ≅ L_{I^{sigma^n}};
///  - the shift by (t' - t)d between consecutive spreading parameters;
///  - for smoothly spreadable I, the shift td - n against T_n/I.
/// BadParameter unless n <= t_first <= t_last. TooLarge names the oracle
/// that refused the input.
LawsReport verify_spreading_laws(const MonomialIdeal& ideal, std::size_t t_first, std::size_t t_last);

}  // namespace mspread
