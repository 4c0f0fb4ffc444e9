#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "monospread/ideal.hpp"
#include "monospread/monomial.hpp"

namespace mspread {

/// A residue-respecting relabeling tau of {1..nd} carrying sigma^n(u) onto
/// u^p for every u in the certified set.
///
/// `tau[k - 1]` is tau(k). `column_maps[j - 1][s]` is lambda_j(s), so that
/// tau(s*n + j) = lambda_j(s)*n + j for s in 0..d-1.
struct SmoothCertificate {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::size_t> tau;
  std::vector<std::vector<std::size_t>> column_maps;

  /// Wraps an explicit permutation; column maps are filled for every slot
  /// whose image stays in the same residue class (others are left as d,
  /// which verify_certificate rejects). ShapeMismatch if tau.size() != n*d.
  static SmoothCertificate from_permutation(std::size_t n, std::size_t d,
                                            std::vector<std::size_t> tau);
};

/// A pair of generators and a variable where the interval identity
/// min(a_ij, a_lj) = |P_ij ∩ P_lj| fails. Indices are 1-based.
struct SmoothWitness {
  std::size_t i = 0;
  std::size_t l = 0;
  std::size_t j = 0;
  std::size_t expected = 0;
  std::size_t found = 0;
  std::vector<std::size_t> positions_i;
  std::vector<std::size_t> positions_l;
};

using SmoothVerdict = std::variant<SmoothCertificate, SmoothWitness>;

inline bool is_smooth(const SmoothVerdict& v) { return std::holds_alternative<SmoothCertificate>(v); }

/// Positions {(p + s)n + j : 0 <= s < a_j} occupied by variable j of u in
/// sigma^n(u), where p = a_1 + ... + a_{j-1}. j is 1-based.
std::vector<std::size_t> position_set(const Monomial& u, std::size_t j);

/// Decides smooth spreadability of a monomial set in T_n. Either returns a
/// certificate (already checked by verify_certificate) or the first failing
/// (i, l, j) in (i, l)-major, j-minor order.
SmoothVerdict check_smooth(std::span<const Monomial> set, std::size_t n);
SmoothVerdict check_smooth(const MonomialIdeal& ideal);

/// True iff cert respects residues mod n, is a permutation of {1..nd}, and
/// relabels sigma^n(u) to u^p for every u in the set. ShapeMismatch when the
/// certificate was built for another (n, d).
bool verify_certificate(std::span<const Monomial> set, std::size_t n, const SmoothCertificate& cert);

enum class T2Verdict { SufficientHolds, NecessaryFails, Indeterminate };

std::string_view to_string(T2Verdict v) noexcept;

/// Closed-form test for ideals of T_2. Generators are sorted by decreasing
/// x_1-exponent internally. SufficientHolds when total degrees never drop;
/// NecessaryFails when they drop right after a generator divisible by x_2;
/// Indeterminate otherwise. BadAmbient if the ideal is not in T_2.
T2Verdict check_smooth_T2(const MonomialIdeal& ideal);

/// J = (I, v) in T_{n'} for v supported in {x_{n+1}, ..., x_{n'}}.
MonomialIdeal adjoin_disjoint(const MonomialIdeal& ideal, const Monomial& v, std::size_t n_prime);

/// (j, d) pairs meaning x_j^d, j 1-based.
using PurePower = std::pair<std::size_t, Exponent>;

/// Whether every d_l dominates deg(u^(l)) over generators u divisible by
/// x_{j_l}, where u^(l) sets x_{j_l + 1}, ..., x_n to 1. NotMinimal if some
/// x_{j_l}^{d_l} is comparable with a generator.
bool adjoin_pure_powers_condition(const MonomialIdeal& ideal, std::span<const PurePower> powers);

/// (I, x_{j_1}^{d_1}, ..., x_{j_k}^{d_k}) with the same validation as above.
MonomialIdeal adjoin_pure_powers(const MonomialIdeal& ideal, std::span<const PurePower> powers);

/// {u v : u in M, v in M'} in T_{n'} where M lives in T_n with every degree
/// equal and M' lives in T_{n'} supported beyond x_n. Both inputs must be
/// smoothly spreadable on their own.
std::vector<Monomial> product_construct(std::span<const Monomial> first, std::size_t n,
                                        std::span<const Monomial> second, std::size_t n_prime);

/// `(2 5)(3 6 9)`; `()` for the identity.
std::string cycle_notation(std::span<const std::size_t> tau);

}  // namespace mspread
