#include "monospread/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <tuple>

#include "monospread/error.hpp"
#include "monospread/spread.hpp"

namespace mspread {

LcmLattice::LcmLattice(const MonomialIdeal& ideal)
    : ambient_(ideal.ambient()), atoms_(ideal.generators()) {
  if (atoms_.size() > kMaxLatticeAtoms) {
    throw Error(ErrorKind::TooLarge, "lcm-lattice limited to " + std::to_string(kMaxLatticeAtoms) +
                                         " generators, got " + std::to_string(atoms_.size()));
  }
  std::unordered_map<Monomial, std::size_t, MonomialHash> seen;
  std::vector<Monomial> found{Monomial(ambient_)};
  seen.emplace(found.front(), 0);
  for (const Monomial& atom : atoms_) {
    const std::size_t current = found.size();
    for (std::size_t k = 0; k < current; ++k) {
      Monomial joined = lcm(found[k], atom);
      if (seen.emplace(joined, found.size()).second) found.push_back(std::move(joined));
    }
  }
  std::sort(found.begin(), found.end());
  elements_ = std::move(found);

  masks_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    by_monomial_.emplace(elements_[i], i);
    AtomMask mask = 0;
    for (std::size_t k = 0; k < atoms_.size(); ++k)
      if (divides(atoms_[k], elements_[i])) mask |= AtomMask{1} << k;
    masks_[i] = mask;
    by_mask_.emplace(mask, i);
  }
  for (const Monomial& atom : atoms_) atom_elements_.push_back(by_monomial_.at(atom));

  covers_.resize(elements_.size());
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      if (masks_[a] & (AtomMask{1} << k)) continue;
      candidates.push_back(join(a, atom_elements_[k]));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (std::size_t c : candidates) {
      const bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](std::size_t o) {
        return o != c && leq(o, c);
      });
      if (minimal) covers_[a].push_back(c);
    }
  }
  ranks_.assign(elements_.size(), 0);
  for (std::size_t a = 0; a < elements_.size(); ++a)
    for (std::size_t c : covers_[a]) ranks_[c] = std::max(ranks_[c], ranks_[a] + 1);
}

std::optional<std::size_t> LcmLattice::find(const Monomial& u) const {
  auto it = by_monomial_.find(u);
  if (it == by_monomial_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> LcmLattice::find(AtomMask mask) const {
  auto it = by_mask_.find(mask);
  if (it == by_mask_.end()) return std::nullopt;
  return it->second;
}

bool LcmLattice::leq(std::size_t a, std::size_t b) const {
  return (masks_.at(a) & ~masks_.at(b)) == 0;
}

std::size_t LcmLattice::join(std::size_t a, std::size_t b) const {
  return by_monomial_.at(lcm(elements_.at(a), elements_.at(b)));
}

std::size_t LcmLattice::meet(std::size_t a, std::size_t b) const {
  return closure(masks_.at(a) & masks_.at(b));
}

std::size_t LcmLattice::closure(AtomMask mask) const {
  if (auto hit = find(mask)) return *hit;
  Monomial u(ambient_);
  for (std::size_t k = 0; k < atoms_.size(); ++k)
    if (mask & (AtomMask{1} << k)) u = lcm(u, atoms_[k]);
  return by_monomial_.at(u);
}

std::size_t LcmLattice::edge_count() const noexcept {
  std::size_t edges = 0;
  for (const auto& c : covers_) edges += c.size();
  return edges;
}

namespace {

AtomMask remap(AtomMask mask, const std::vector<std::size_t>& atom_map) {
  AtomMask out = 0;
  while (mask != 0) {
    const int k = std::countr_zero(mask);
    out |= AtomMask{1} << atom_map[static_cast<std::size_t>(k)];
    mask &= mask - 1;
  }
  return out;
}

// Invariants that any isomorphism must carry along.
std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> element_profile(const LcmLattice& l,
                                                                              bool with_sets) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  out.reserve(l.size());
  for (std::size_t e = 0; e < l.size(); ++e) {
    std::size_t up = 0;
    std::size_t down = 0;
    if (with_sets) {
      for (std::size_t f = 0; f < l.size(); ++f) {
        if (l.leq(e, f)) ++up;
        if (l.leq(f, e)) ++down;
      }
    }
    out.emplace_back(l.ranks()[e], up, down);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> atom_signature(const LcmLattice& l) {
  std::vector<std::size_t> sig(l.atom_count(), 0);
  for (std::size_t e = 0; e < l.size(); ++e)
    for (std::size_t k = 0; k < l.atom_count(); ++k)
      if (l.atom_support(e) & (AtomMask{1} << k)) ++sig[k];
  return sig;
}

bool preserves_operations(const LcmLattice& a, const LcmLattice& b, const std::vector<std::size_t>& map) {
  constexpr std::size_t kFullCheckLimit = 2048;
  auto check = [&](std::size_t x, std::size_t y) {
    return map[a.join(x, y)] == b.join(map[x], map[y]) && map[a.meet(x, y)] == b.meet(map[x], map[y]);
  };
  if (a.size() <= kFullCheckLimit) {
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = x + 1; y < a.size(); ++y)
        if (!check(x, y)) return false;
    return true;
  }
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t k = 0; k < a.atom_count(); ++k)
      if (!check(x, a.atom_element(k))) return false;
  return true;
}

}  // namespace

std::optional<std::vector<std::size_t>> is_isomorphic(const LcmLattice& a, const LcmLattice& b) {
  if (a.size() != b.size() || a.atom_count() != b.atom_count()) return std::nullopt;
  constexpr std::size_t kProfileLimit = 4096;
  const bool with_sets = a.size() <= kProfileLimit;
  if (element_profile(a, with_sets) != element_profile(b, with_sets)) return std::nullopt;

  const std::size_t m = a.atom_count();
  const std::vector<std::size_t> sig_a = atom_signature(a);
  const std::vector<std::size_t> sig_b = atom_signature(b);

  std::vector<std::vector<AtomMask>> pair_a(m, std::vector<AtomMask>(m));
  std::vector<std::vector<AtomMask>> pair_b(m, std::vector<AtomMask>(m));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      pair_a[x][y] = a.atom_support(a.join(a.atom_element(x), a.atom_element(y)));
      pair_b[x][y] = b.atom_support(b.join(b.atom_element(x), b.atom_element(y)));
    }
  }

  // Atoms with the fewest candidates first.
  std::vector<std::size_t> order(m);
  for (std::size_t k = 0; k < m; ++k) order[k] = k;
  auto candidates_of = [&](std::size_t x) {
    return std::count(sig_b.begin(), sig_b.end(), sig_a[x]);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return candidates_of(x) < candidates_of(y); });

  std::vector<std::size_t> atom_map(m, m);
  std::vector<bool> used(m, false);
  std::vector<std::size_t> result;

  auto consistent = [&](std::size_t depth, std::size_t x, std::size_t c) {
    for (std::size_t p = 0; p < depth; ++p) {
      const std::size_t y = order[p];
      const std::size_t cy = atom_map[y];
      const AtomMask ja = pair_a[x][y];
      const AtomMask jb = pair_b[c][cy];
      if (std::popcount(ja) != std::popcount(jb)) return false;
      for (std::size_t q = 0; q < depth; ++q) {
        const std::size_t z = order[q];
        if (((ja >> z) & 1U) != ((jb >> atom_map[z]) & 1U)) return false;
        // The new atom must sit under earlier pair joins exactly when its image does.
        if (((pair_a[y][z] >> x) & 1U) != ((pair_b[cy][atom_map[z]] >> c) & 1U)) return false;
      }
      if (((ja >> x) & 1U) != ((jb >> c) & 1U)) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == m) {
      std::vector<std::size_t> map(a.size());
      for (std::size_t e = 0; e < a.size(); ++e) {
        auto hit = b.find(remap(a.atom_support(e), atom_map));
        if (!hit) return false;
        map[e] = *hit;
      }
      if (!preserves_operations(a, b, map)) return false;
      result = std::move(map);
      return true;
    }
    const std::size_t x = order[depth];
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c] || sig_b[c] != sig_a[x]) continue;
      if (!consistent(depth, x, c)) continue;
      used[c] = true;
      atom_map[x] = c;
      if (search(depth + 1)) return true;
      used[c] = false;
      atom_map[x] = m;
    }
    return false;
  };

  if (!search(0)) return std::nullopt;
  return result;
}

LatticeMap build_delta(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ambient();
  const MonomialIdeal spread = spread_ideal(ideal, n, SpreadAmbient::Padded);
  LatticeMap map{LcmLattice(spread), LcmLattice(ideal), {}};
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  map.image.assign(map.source.size(), kUnset);

  const auto& src_atoms = spread.generators();
  const auto& dst_atoms = ideal.generators();
  const std::size_t m = dst_atoms.size();

  std::function<void(std::size_t, const Monomial&, const Monomial&)> walk =
      [&](std::size_t k, const Monomial& spread_lcm, const Monomial& base_lcm) {
        if (k == m) {
          const std::size_t s = map.source.find(spread_lcm).value();
          const std::size_t t = map.target.find(base_lcm).value();
          if (map.image[s] == kUnset) {
            map.image[s] = t;
          } else if (map.image[s] != t) {
            throw Error(ErrorKind::WellDefinednessViolation,
                        "spread-side lcm " + to_string(spread_lcm) + " maps to both " +
                            to_string(map.target.element(map.image[s])) + " and " + to_string(base_lcm));
          }
          return;
        }
        walk(k + 1, spread_lcm, base_lcm);
        walk(k + 1, lcm(spread_lcm, src_atoms[k]), lcm(base_lcm, dst_atoms[k]));
      };
  walk(0, Monomial(spread.ambient()), Monomial(n));

  for (std::size_t s = 0; s < map.image.size(); ++s) {
    if (map.image[s] == kUnset) {
      throw Error(ErrorKind::InternalError,
                  "element " + to_string(map.source.element(s)) + " is not a subset lcm");
    }
  }
  return map;
}

bool verify_delta(const LatticeMap& map) {
  const LcmLattice& src = map.source;
  const LcmLattice& dst = map.target;
  if (map.image.size() != src.size()) return false;
  std::vector<bool> hit(dst.size(), false);
  for (std::size_t v : map.image) {
    if (v >= dst.size()) return false;
    hit[v] = true;
  }
  if (map.image[src.bottom()] != dst.bottom()) return false;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  for (std::size_t x = 0; x < src.size(); ++x)
    for (std::size_t y = x + 1; y < src.size(); ++y)
      if (map.image[src.join(x, y)] != dst.join(map.image[x], map.image[y])) return false;
  return true;
}

std::string hasse_dot(const LcmLattice& lattice) {
  std::ostringstream out;
  out << "digraph lcm_lattice {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out << "  v" << i << " [label=\"" << to_string(lattice.element(i)) << "\"];\n";
  }
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t c : lattice.covers()[i]) out << "  v" << i << " -> v" << c << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mspread
