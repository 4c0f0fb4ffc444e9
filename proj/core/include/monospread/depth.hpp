#pragma once

#include <cstddef>
#include <vector>

#include "monospread/ideal.hpp"
#include "monospread/monomial.hpp"

namespace mspread {

inline constexpr std::size_t kMaxDepthGenerators = 8;

struct BettiEntry {
  std::size_t i = 0;
  Monomial multidegree;
  std::size_t value = 0;

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Nonzero multigraded Betti numbers b_{i,m}(T_n/I) over GF(2), sorted by
/// (i, multidegree). b_{0,1} = 1 is included.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(std::vector<BettiEntry> entries);

  const std::vector<BettiEntry>& entries() const noexcept { return entries_; }
  std::size_t value(std::size_t i, const Monomial& multidegree) const;
  /// Sum over multidegrees.
  std::size_t total(std::size_t i) const;
  std::size_t projective_dimension() const;

 private:
  std::vector<BettiEntry> entries_;
};

/// b_{i,m} = dim H~_{i-2}((1, m)) over the lcm-lattice.
/// TooLarge beyond kMaxDepthGenerators generators.
BettiTable multigraded_betti(const MonomialIdeal& ideal);

struct DepthReport {
  std::size_t value = 0;
  std::size_t projective_dimension = 0;
  std::size_t ambient = 0;
  BettiTable betti;
};

/// depth(T_n/I) = n - pd(T_n/I) with n = ideal.ambient().
DepthReport depth_quotient(const MonomialIdeal& ideal);

}  // namespace mspread
