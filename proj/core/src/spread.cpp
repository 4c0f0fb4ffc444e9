#include "monospread/spread.hpp"

#include <algorithm>

#include "monospread/error.hpp"

namespace mspread {

Monomial sigma(const Monomial& u) { return sigma_t(u, 1); }

Monomial sigma_t(const Monomial& u, std::size_t t) {
  std::vector<std::size_t> idx = u.indices();
  const std::size_t shift = idx.empty() ? 0 : t * (idx.size() - 1);
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] += k * t;
  return Monomial::from_indices(u.ambient() + shift, idx);
}

bool is_t_spread(const Monomial& u, std::size_t t) {
  const std::vector<std::size_t> idx = u.indices();
  for (std::size_t k = 1; k < idx.size(); ++k)
    if (idx[k] - idx[k - 1] < t) return false;
  return true;
}

MonomialIdeal spread_ideal(const MonomialIdeal& ideal, std::size_t t, SpreadAmbient view) {
  const std::size_t n = ideal.ambient();
  const std::size_t d = ideal.degree();
  std::size_t ambient = n + t * (d - 1);
  if (view == SpreadAmbient::Padded) {
    if (t < n) {
      throw Error(ErrorKind::BadParameter,
                  "padded view needs t >= n (t=" + std::to_string(t) + ", n=" + std::to_string(n) + ")");
    }
    ambient = t * d;
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& u : ideal.generators()) gens.push_back(sigma_t(u, t).embedded(ambient));
  MonomialIdeal out(ambient, gens);
  if (out.size() != gens.size()) {
    throw Error(ErrorKind::InternalError, "spread generators of " + to_string(ideal) +
                                              " are not minimal");
  }
  return out;
}

Monomial polarize(const Monomial& u, std::size_t n, std::size_t d) {
  if (u.ambient() != n) {
    throw Error(ErrorKind::AmbientMismatch,
                "monomial has ambient " + std::to_string(u.ambient()) + ", expected " + std::to_string(n));
  }
  if (u.degree() > d) {
    throw Error(ErrorKind::DegreeBound,
                "deg(" + to_string(u) + ") = " + std::to_string(u.degree()) + " > " + std::to_string(d));
  }
  std::vector<Exponent> exps(n * std::max<std::size_t>(d, 1), 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t s = 0; s < u[j]; ++s) exps[j + s * n] = 1;
  return Monomial(std::move(exps));
}

MonomialIdeal polarize_ideal(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ambient();
  const std::size_t d = ideal.degree();
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& u : ideal.generators()) gens.push_back(polarize(u, n, d));
  MonomialIdeal out(n * d, gens);
  if (out.size() != gens.size()) {
    throw Error(ErrorKind::InternalError, "polarized generators are not minimal");
  }
  return out;
}

SpreadEmbedding::SpreadEmbedding(std::size_t n, std::size_t t, std::size_t d) : n_(n), t_(t), d_(d) {
  if (n == 0) throw Error(ErrorKind::BadAmbient, "n must be positive");
  if (t < n) {
    throw Error(ErrorKind::BadParameter,
                "embedding needs t >= n (t=" + std::to_string(t) + ", n=" + std::to_string(n) + ")");
  }
}

std::size_t SpreadEmbedding::operator()(std::size_t j) const {
  if (j == 0 || j > source_size()) {
    throw Error(ErrorKind::BadParameter, "index " + std::to_string(j) + " outside 1.." +
                                             std::to_string(source_size()));
  }
  return (j - 1) / n_ * (t_ - n_) + j;
}

Monomial SpreadEmbedding::apply(const Monomial& u) const {
  if (u.ambient() != source_size()) {
    throw Error(ErrorKind::AmbientMismatch, "embedding expects ambient " + std::to_string(source_size()));
  }
  std::vector<std::size_t> idx = u.indices();
  for (std::size_t& j : idx) j = (*this)(j);
  return Monomial::from_indices(target_size(), idx);
}

std::pair<MonomialIdeal, SpreadEmbedding> embed_spread(const MonomialIdeal& ideal, std::size_t t) {
  const std::size_t n = ideal.ambient();
  SpreadEmbedding phi(n, t, ideal.degree());
  const MonomialIdeal base = spread_ideal(ideal, n, SpreadAmbient::Padded);
  std::vector<Monomial> image;
  image.reserve(base.size());
  for (const Monomial& u : base.generators()) image.push_back(phi.apply(u));
  MonomialIdeal out(phi.target_size(), std::move(image));

  const MonomialIdeal direct = spread_ideal(ideal, t, SpreadAmbient::Padded);
  if (out.generators() != direct.generators()) {
    throw Error(ErrorKind::InternalError, "Phi_t(I^{sigma^n}) = " + to_string(out) +
                                              " differs from I^{sigma^t} = " + to_string(direct));
  }
  return {std::move(out), phi};
}

}  // namespace mspread
