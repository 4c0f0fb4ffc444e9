#include "monospread/ideal.hpp"

#include <algorithm>

#include "monospread/error.hpp"

namespace mspread {

std::vector<Monomial> minimalize(std::span<const Monomial> gens, std::vector<Monomial>* dropped) {
  for (const Monomial& g : gens) {
    if (g.is_unit()) throw Error(ErrorKind::UnitGenerator, "the unit ideal is not supported");
  }
  std::vector<Monomial> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < gens.size() && !redundant; ++k) {
      if (k == i) continue;
      // Strictly smaller divisors always win; among equal copies the first stays.
      if (divides(gens[k], gens[i]) && (gens[k] != gens[i] || k < i)) redundant = true;
    }
    if (redundant) {
      if (dropped != nullptr) dropped->push_back(gens[i]);
    } else {
      kept.push_back(gens[i]);
    }
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t ambient, std::vector<Monomial> gens) : ambient_(ambient) {
  if (ambient == 0) throw Error(ErrorKind::BadAmbient, "ambient must be positive");
  if (gens.empty()) throw Error(ErrorKind::ZeroIdeal, "empty generator set");
  for (const Monomial& g : gens) {
    if (g.ambient() != ambient) {
      throw Error(ErrorKind::AmbientMismatch, "generator " + to_string(g) + " has ambient " +
                                                  std::to_string(g.ambient()) + ", expected " +
                                                  std::to_string(ambient));
    }
  }
  gens_ = minimalize(gens);
  for (const Monomial& g : gens_) degree_ = std::max(degree_, g.degree());
}

bool MonomialIdeal::contains(const Monomial& u) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, u); });
}

MonomialIdeal MonomialIdeal::embedded(std::size_t ambient) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.embedded(ambient));
  return MonomialIdeal(ambient, std::move(gens));
}

Monomial MonomialIdeal::lcm_of_generators() const {
  Monomial out(ambient_);
  for (const Monomial& g : gens_) out = lcm(out, g);
  return out;
}

bool same_generators(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient() || a.size() != b.size()) return false;
  std::vector<Monomial> x = a.generators();
  std::vector<Monomial> y = b.generators();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t k = i + 1; k < gens.size(); ++k)
      if (!gcd(gens[i], gens[k]).is_unit()) return false;
  return true;
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(ideal.generators()[i]);
  }
  out += ')';
  return out;
}

}  // namespace mspread
