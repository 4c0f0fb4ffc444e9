#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "monospread/monomial.hpp"

namespace mspread {

/// Drops every monomial divisible by another one in the set (and repeated
/// copies), keeping first-occurrence order. UnitGenerator if 1 is present.
/// When `dropped` is given, the discarded monomials are appended to it.
std::vector<Monomial> minimalize(std::span<const Monomial> gens,
                                 std::vector<Monomial>* dropped = nullptr);

/// A nonzero proper monomial ideal of T_n, stored through its minimal
/// generating set G(I). Generator order is the caller's order after
/// minimalization; reports refer to generators by that 1-based position.
class MonomialIdeal {
 public:
  /// Minimalizes `gens`. ZeroIdeal if empty, UnitGenerator if 1 appears,
  /// AmbientMismatch if some generator lives in another ring.
  MonomialIdeal(std::size_t ambient, std::vector<Monomial> gens);

  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  /// deg(I): maximal degree of a minimal generator.
  Degree degree() const noexcept { return degree_; }

  /// True iff some generator divides u.
  bool contains(const Monomial& u) const;
  /// Same ideal in a larger (or trailing-zero-trimmed) ring.
  MonomialIdeal embedded(std::size_t ambient) const;
  /// Exponent vector of lcm(G(I)).
  Monomial lcm_of_generators() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t ambient_;
  std::vector<Monomial> gens_;
  Degree degree_ = 0;
};

/// Same generator set up to order.
bool same_generators(const MonomialIdeal& a, const MonomialIdeal& b);

/// True iff distinct minimal generators are pairwise coprime.
bool is_complete_intersection(const MonomialIdeal& ideal);

/// `(x1^2*x2, x2^2)`.
std::string to_string(const MonomialIdeal& ideal);

}  // namespace mspread
