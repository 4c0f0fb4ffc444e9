#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "monospread/ideal.hpp"
#include "monospread/monomial.hpp"

namespace mspread {

inline constexpr std::size_t kMaxPosetPoints = 4096;

/// The box [0, g] with g the exponent vector of lcm(G(I)), each point
/// flagged by membership of x^c in I. Points are indexed in lexicographic
/// order (x_1 most significant).
class CharacteristicPoset {
 public:
  /// TooLarge if prod(g_j + 1) exceeds kMaxPosetPoints.
  explicit CharacteristicPoset(const MonomialIdeal& ideal);

  const Monomial& bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return in_ideal_.size(); }
  std::size_t ambient() const noexcept { return bound_.ambient(); }
  bool in_ideal(std::size_t index) const { return in_ideal_.at(index); }
  Monomial point(std::size_t index) const;
  std::size_t index(std::span<const Exponent> point) const;
  /// Number of coordinates where c reaches g.
  std::size_t saturated(std::span<const Exponent> point) const;

 private:
  Monomial bound_;
  std::vector<std::size_t> strides_;
  std::vector<bool> in_ideal_;
};

/// [lower, upper] in the exponent lattice.
struct PosetInterval {
  Monomial lower;
  Monomial upper;
};

struct SdepthReport {
  std::size_t value = 0;
  std::size_t ambient = 0;
  bool ideal_side = false;
  /// Intervals covering the relevant side of the poset exactly once, each
  /// with at least `value` saturated coordinates at its upper corner.
  std::vector<PosetInterval> partition;
};

/// Stanley depth of T_n/I by exhaustive interval-partition search.
SdepthReport sdepth_quotient(const MonomialIdeal& ideal);
/// Stanley depth of I (as a module) by the same search on the ideal side.
SdepthReport sdepth_ideal(const MonomialIdeal& ideal);

}  // namespace mspread
