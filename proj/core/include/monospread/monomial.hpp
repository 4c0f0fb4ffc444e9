#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mspread {

using Exponent = std::uint16_t;
using Degree = std::uint32_t;

/// A monomial x_1^{a_1} ... x_n^{a_n} over a fixed number of variables n.
///
/// Variables are 1-indexed at every public boundary that speaks of variable
/// indices (`indices()`, `support()`, `from_indices`); the exponent span
/// itself is a plain 0-based array.
class Monomial {
 public:
  /// The unit monomial in `ambient` variables.
  explicit Monomial(std::size_t ambient = 0);
  /// Throws Overflow if the total degree does not fit in 32 bits.
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  /// Builds from signed exponents; negative entries raise NegativeExponent,
  /// entries above 65535 raise Overflow.
  static Monomial from_exponents(std::span<const long long> exponents);

  /// Builds from a multiset of 1-based variable indices (any order).
  static Monomial from_indices(std::size_t ambient, std::span<const std::size_t> indices);

  std::size_t ambient() const noexcept { return exps_.size(); }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  /// Exponent of x_{j+1} (0-based access).
  Exponent operator[](std::size_t j) const { return exps_[j]; }
  Degree degree() const noexcept { return degree_; }
  bool is_unit() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;

  /// Sorted 1-based index list i_1 <= ... <= i_d, variable j repeated a_j times.
  std::vector<std::size_t> indices() const;
  /// 1-based indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  /// Same monomial viewed in `ambient` variables. Shrinking is allowed only
  /// over trailing zero exponents (AmbientMismatch otherwise).
  Monomial embedded(std::size_t ambient) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on the exponent vector; ambient compared first.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Exponent> exps_;
  Degree degree_ = 0;
};

/// u | v. AmbientMismatch if ambients differ.
bool divides(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
/// Product; Overflow if an exponent exceeds 16 bits.
Monomial operator*(const Monomial& u, const Monomial& v);

inline std::vector<std::size_t> support(const Monomial& u) { return u.support(); }
inline Degree degree(const Monomial& u) { return u.degree(); }

/// Renders as `x1^2*x2`, or `1` for the unit.
std::string to_string(const Monomial& u);

struct MonomialHash {
  std::size_t operator()(const Monomial& u) const noexcept;
};

}  // namespace mspread
