#include "monospread/monomial.hpp"

#include <algorithm>
#include <limits>

#include "monospread/error.hpp"

namespace mspread {

namespace {

Degree checked_degree(std::span<const Exponent> exps) {
  std::uint64_t total = 0;
  for (Exponent e : exps) total += e;
  if (total > std::numeric_limits<Degree>::max()) {
    throw Error(ErrorKind::Overflow, "total degree exceeds 32 bits");
  }
  return static_cast<Degree>(total);
}

void require_same_ambient(const Monomial& u, const Monomial& v) {
  if (u.ambient() != v.ambient()) {
    throw Error(ErrorKind::AmbientMismatch,
                "ambients " + std::to_string(u.ambient()) + " and " +
                    std::to_string(v.ambient()) + " differ");
  }
}

}  // namespace

Monomial::Monomial(std::size_t ambient) : exps_(ambient, 0) {}

Monomial::Monomial(std::vector<Exponent> exponents)
    : exps_(std::move(exponents)), degree_(checked_degree(exps_)) {}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::vector<Exponent>(exponents)) {}

Monomial Monomial::from_exponents(std::span<const long long> exponents) {
  std::vector<Exponent> exps;
  exps.reserve(exponents.size());
  for (long long e : exponents) {
    if (e < 0) throw Error(ErrorKind::NegativeExponent, "exponent " + std::to_string(e));
    if (e > std::numeric_limits<Exponent>::max()) {
      throw Error(ErrorKind::Overflow, "exponent " + std::to_string(e) + " exceeds 16 bits");
    }
    exps.push_back(static_cast<Exponent>(e));
  }
  return Monomial(std::move(exps));
}

Monomial Monomial::from_indices(std::size_t ambient, std::span<const std::size_t> indices) {
  std::vector<Exponent> exps(ambient, 0);
  for (std::size_t i : indices) {
    if (i == 0 || i > ambient) {
      throw Error(ErrorKind::AmbientMismatch,
                  "variable index " + std::to_string(i) + " outside 1.." + std::to_string(ambient));
    }
    if (exps[i - 1] == std::numeric_limits<Exponent>::max()) {
      throw Error(ErrorKind::Overflow, "exponent exceeds 16 bits");
    }
    ++exps[i - 1];
  }
  return Monomial(std::move(exps));
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::indices() const {
  std::vector<std::size_t> out;
  out.reserve(degree_);
  for (std::size_t j = 0; j < exps_.size(); ++j) out.insert(out.end(), exps_[j], j + 1);
  return out;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] > 0) out.push_back(j + 1);
  return out;
}

Monomial Monomial::embedded(std::size_t ambient) const {
  if (ambient < exps_.size() &&
      std::any_of(exps_.begin() + static_cast<std::ptrdiff_t>(ambient), exps_.end(),
                  [](Exponent e) { return e != 0; })) {
    throw Error(ErrorKind::AmbientMismatch, "cannot drop a variable in the support");
  }
  std::vector<Exponent> exps(exps_.begin(),
                             exps_.begin() + static_cast<std::ptrdiff_t>(std::min(ambient, exps_.size())));
  exps.resize(ambient, 0);
  return Monomial(std::move(exps));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(), b.exps_.begin(),
                                                b.exps_.end());
}

bool divides(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v);
  for (std::size_t j = 0; j < u.ambient(); ++j)
    if (u[j] > v[j]) return false;
  return true;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v);
  std::vector<Exponent> exps(u.ambient());
  for (std::size_t j = 0; j < exps.size(); ++j) exps[j] = std::max(u[j], v[j]);
  return Monomial(std::move(exps));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v);
  std::vector<Exponent> exps(u.ambient());
  for (std::size_t j = 0; j < exps.size(); ++j) exps[j] = std::min(u[j], v[j]);
  return Monomial(std::move(exps));
}

Monomial operator*(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v);
  std::vector<Exponent> exps(u.ambient());
  for (std::size_t j = 0; j < exps.size(); ++j) {
    unsigned sum = unsigned{u[j]} + unsigned{v[j]};
    if (sum > std::numeric_limits<Exponent>::max()) {
      throw Error(ErrorKind::Overflow, "product exponent exceeds 16 bits");
    }
    exps[j] = static_cast<Exponent>(sum);
  }
  return Monomial(std::move(exps));
}

std::string to_string(const Monomial& u) {
  if (u.is_unit()) return "1";
  std::string out;
  for (std::size_t j = 0; j < u.ambient(); ++j) {
    if (u[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(j + 1);
    if (u[j] > 1) {
      out += '^';
      out += std::to_string(u[j]);
    }
  }
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& u) const noexcept {
  // FNV-1a over the exponent words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Exponent e : u.exponents()) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  h ^= u.ambient();
  return static_cast<std::size_t>(h);
}

}  // namespace mspread
