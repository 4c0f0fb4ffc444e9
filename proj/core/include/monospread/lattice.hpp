#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "monospread/ideal.hpp"
#include "monospread/monomial.hpp"

namespace mspread {

using AtomMask = std::uint32_t;
inline constexpr std::size_t kMaxLatticeAtoms = 20;

/// The lcm-lattice L_I: all lcms of subsets of G(I) ordered by divisibility.
///
/// Elements are stored in lexicographic order of their exponent vectors,
/// which is a linear extension of divisibility, so index 0 is the bottom
/// (the unit) and the last index is the top. Every element carries the
/// mask of atoms dividing it; since L_I is atomistic, an element is the
/// join of exactly those atoms.
class LcmLattice {
 public:
  /// TooLarge beyond kMaxLatticeAtoms generators.
  explicit LcmLattice(const MonomialIdeal& ideal);

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t atom_count() const noexcept { return atoms_.size(); }
  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<Monomial>& atoms() const noexcept { return atoms_; }
  const std::vector<Monomial>& elements() const noexcept { return elements_; }
  const Monomial& element(std::size_t i) const { return elements_.at(i); }
  AtomMask atom_support(std::size_t i) const { return masks_.at(i); }
  /// Element index of the k-th atom (generator order).
  std::size_t atom_element(std::size_t k) const { return atom_elements_.at(k); }

  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return elements_.size() - 1; }

  std::optional<std::size_t> find(const Monomial& u) const;
  std::optional<std::size_t> find(AtomMask mask) const;

  bool leq(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  /// Greatest lower bound inside the lattice: the join of the common atoms.
  /// Differs from gcd in general.
  std::size_t meet(std::size_t a, std::size_t b) const;
  /// Join of the atoms selected by `mask` (bottom for the empty mask).
  std::size_t closure(AtomMask mask) const;

  /// Upper covers of each element, ascending.
  const std::vector<std::vector<std::size_t>>& covers() const noexcept { return covers_; }
  /// Length of the longest chain from the bottom.
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  std::size_t edge_count() const noexcept;

 private:
  std::size_t ambient_;
  std::vector<Monomial> atoms_;
  std::vector<Monomial> elements_;
  std::vector<AtomMask> masks_;
  std::vector<std::size_t> atom_elements_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> by_monomial_;
  std::unordered_map<AtomMask, std::size_t> by_mask_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<std::size_t> ranks_;
};

/// A map between lcm-lattices given by element indices.
struct LatticeMap {
  LcmLattice source;
  LcmLattice target;
  std::vector<std::size_t> image;
};

/// A join- and meet-preserving bijection (element index in `a` -> index in
/// `b`), or nullopt.
std::optional<std::vector<std::size_t>> is_isomorphic(const LcmLattice& a, const LcmLattice& b);

/// delta: L_{I^{sigma^n}} -> L_I sending lcm(sigma^n(u_S)) to lcm(u_S) for
/// every subset S of generators. Equal spread-side lcms with different
/// source-side lcms raise WellDefinednessViolation.
LatticeMap build_delta(const MonomialIdeal& ideal);

/// Join preserving, surjective and bottom to bottom.
bool verify_delta(const LatticeMap& map);

/// Graphviz digraph of the Hasse diagram, edges from smaller to larger.
std::string hasse_dot(const LcmLattice& lattice);

}  // namespace mspread
