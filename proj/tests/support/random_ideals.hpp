#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "monospread/ideal.hpp"
#include "monospread/monomial.hpp"
#include "oracles.hpp"

namespace testing_support {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline mspread::Monomial random_monomial(Rng& rng, std::size_t n, int max_exp, int max_degree = 1 << 20) {
  while (true) {
    std::vector<mspread::Exponent> e(n);
    int deg = 0;
    for (auto& x : e) {
      x = static_cast<mspread::Exponent>(uniform(rng, 0, max_exp));
      deg += x;
    }
    if (deg > 0 && deg <= max_degree) return mspread::Monomial(std::move(e));
  }
}

/// Up to m distinct nonunit monomials (fewer when the box is too small);
/// not necessarily minimal.
inline std::vector<mspread::Monomial> random_set(Rng& rng, std::size_t n, std::size_t m, int max_exp,
                                                 int max_degree = 1 << 20) {
  std::vector<mspread::Monomial> out;
  for (int attempt = 0; out.size() < m && attempt < 1000; ++attempt) {
    auto u = random_monomial(rng, n, max_exp, max_degree);
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(std::move(u));
  }
  return out;
}

inline mspread::MonomialIdeal random_ideal(Rng& rng, std::size_t n, std::size_t m, int max_exp,
                                           int max_degree = 1 << 20) {
  return mspread::MonomialIdeal(n, random_set(rng, n, m, max_exp, max_degree));
}

/// Generators with pairwise disjoint supports, each of degree >= 1.
inline mspread::MonomialIdeal random_complete_intersection(Rng& rng, std::size_t n, int max_exp) {
  std::vector<std::size_t> owner(n);
  const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(n)));
  for (std::size_t j = 0; j < n; ++j) owner[j] = j < k ? j : static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(k)));
  std::shuffle(owner.begin(), owner.end(), rng);
  std::vector<mspread::Monomial> gens;
  for (std::size_t g = 0; g < k; ++g) {
    std::vector<mspread::Exponent> e(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      if (owner[j] == g) e[j] = static_cast<mspread::Exponent>(uniform(rng, 1, max_exp));
    gens.emplace_back(std::move(e));
  }
  return mspread::MonomialIdeal(n, std::move(gens));
}

inline oracle::Row to_row(const mspread::Monomial& u) {
  return oracle::Row(u.exponents().begin(), u.exponents().end());
}

inline std::vector<oracle::Row> to_rows(const std::vector<mspread::Monomial>& gens) {
  std::vector<oracle::Row> out;
  for (const auto& u : gens) out.push_back(to_row(u));
  return out;
}

}  // namespace testing_support
