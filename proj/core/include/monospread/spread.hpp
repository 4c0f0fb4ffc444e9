#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "monospread/ideal.hpp"
#include "monospread/monomial.hpp"

namespace mspread {

/// x_{i_1} x_{i_2} ... x_{i_d} -> x_{i_1} x_{i_2+1} ... x_{i_d+d-1}.
/// The result lives in ambient n + max(deg(u) - 1, 0).
Monomial sigma(const Monomial& u);

/// t-fold iterate of `sigma`: the k-th sorted index (0-based) moves by k*t.
/// Result ambient is n + t * max(deg(u) - 1, 0).
Monomial sigma_t(const Monomial& u, std::size_t t);

/// Consecutive sorted indices differ by at least t.
bool is_t_spread(const Monomial& u, std::size_t t);

enum class SpreadAmbient {
  /// n + t(d - 1), the smallest ring holding every spread generator.
  Exact,
  /// t*d; only meaningful (and accepted) for t >= n.
  Padded,
};

/// I^{sigma^t}: generators sigma^t(u) for u in G(I), in the same order.
MonomialIdeal spread_ideal(const MonomialIdeal& ideal, std::size_t t,
                           SpreadAmbient view = SpreadAmbient::Exact);

/// Polarization u^p = prod_j x_j x_{j+n} ... x_{j+(a_j-1)n} in ambient n*d.
/// DegreeBound if deg(u) > d, AmbientMismatch if u does not live in T_n.
Monomial polarize(const Monomial& u, std::size_t n, std::size_t d);

/// I^p in T_{nd} with d = deg(I).
MonomialIdeal polarize_ideal(const MonomialIdeal& ideal);

/// The re-embedding j -> floor((j-1)/n)*(t-n) + j of {1..nd} into {1..td}.
class SpreadEmbedding {
 public:
  SpreadEmbedding(std::size_t n, std::size_t t, std::size_t d);

  std::size_t n() const noexcept { return n_; }
  std::size_t t() const noexcept { return t_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t source_size() const noexcept { return n_ * d_; }
  std::size_t target_size() const noexcept { return t_ * d_; }

  /// 1-based j in 1..nd.
  std::size_t operator()(std::size_t j) const;
  Monomial apply(const Monomial& u) const;

 private:
  std::size_t n_;
  std::size_t t_;
  std::size_t d_;
};

/// Phi_t(I^{sigma^n}) in T_{td}. The result is checked against
/// spread_ideal(I, t, Padded) before returning (InternalError on mismatch).
/// BadParameter if t < n.
std::pair<MonomialIdeal, SpreadEmbedding> embed_spread(const MonomialIdeal& ideal, std::size_t t);

}  // namespace mspread
