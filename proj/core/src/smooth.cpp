#include "monospread/smooth.hpp"

#include <algorithm>
#include <map>

#include "monospread/error.hpp"
#include "monospread/spread.hpp"

namespace mspread {

namespace {

// Slots [lo, lo + len) of one residue column, in units of n.
struct SlotRange {
  std::size_t lo = 0;
  std::size_t len = 0;
  std::size_t hi() const { return lo + len; }
  bool contains(std::size_t s) const { return s >= lo && s < hi(); }
};

std::size_t prefix_degree(const Monomial& u, std::size_t j) {
  std::size_t p = 0;
  for (std::size_t k = 0; k + 1 < j; ++k) p += u[k];
  return p;
}

SlotRange slot_range(const Monomial& u, std::size_t j) { return {prefix_degree(u, j), u[j - 1]}; }

std::size_t overlap(const SlotRange& a, const SlotRange& b) {
  const std::size_t lo = std::max(a.lo, b.lo);
  const std::size_t hi = std::min(a.hi(), b.hi());
  return hi > lo ? hi - lo : 0;
}

std::size_t max_degree(std::span<const Monomial> set) {
  std::size_t d = 0;
  for (const Monomial& u : set) d = std::max<std::size_t>(d, u.degree());
  return d;
}

void require_set(std::span<const Monomial> set, std::size_t n) {
  if (set.empty()) throw Error(ErrorKind::EmptySet, "empty monomial set");
  if (n == 0) throw Error(ErrorKind::BadAmbient, "n must be positive");
  for (const Monomial& u : set) {
    if (u.ambient() != n) {
      throw Error(ErrorKind::AmbientMismatch, to_string(u) + " has ambient " +
                                                  std::to_string(u.ambient()) + ", expected " +
                                                  std::to_string(n));
    }
  }
}

// Slot s belongs to the ranges listed in its signature; target r < a_i
// belongs to the prefix of generator i. Any bijection matching signatures
// works; group by signature and pair ascending.
std::vector<std::size_t> column_by_signatures(const std::vector<SlotRange>& ranges, std::size_t d) {
  std::map<std::vector<bool>, std::vector<std::size_t>> sources;
  std::map<std::vector<bool>, std::vector<std::size_t>> targets;
  for (std::size_t s = 0; s < d; ++s) {
    std::vector<bool> src(ranges.size());
    std::vector<bool> dst(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      src[i] = ranges[i].contains(s);
      dst[i] = s < ranges[i].len;
    }
    sources[src].push_back(s);
    targets[dst].push_back(s);
  }
  std::vector<std::size_t> lambda(d, d);
  for (const auto& [sig, slots] : sources) {
    auto it = targets.find(sig);
    if (it == targets.end() || it->second.size() != slots.size()) return {};
    for (std::size_t k = 0; k < slots.size(); ++k) lambda[slots[k]] = it->second[k];
  }
  return lambda;
}

// Inside-out assignment along the chain of nested ranges: the smallest range
// goes onto {0..len-1}, each larger one adds its new slots next, unused slots
// fill the tail. Returns empty if the ranges are not a chain.
std::vector<std::size_t> column_by_chain(std::vector<SlotRange> ranges, std::size_t d) {
  std::stable_sort(ranges.begin(), ranges.end(),
                   [](const SlotRange& a, const SlotRange& b) { return a.len < b.len; });
  for (std::size_t k = 1; k < ranges.size(); ++k) {
    if (ranges[k - 1].lo < ranges[k].lo || ranges[k - 1].hi() > ranges[k].hi()) return {};
  }
  std::vector<std::size_t> lambda(d, d);
  std::size_t next = 0;
  auto take = [&](std::size_t s) {
    if (lambda[s] == d) lambda[s] = next++;
  };
  for (const SlotRange& r : ranges)
    for (std::size_t s = r.lo; s < r.hi(); ++s) take(s);
  for (std::size_t s = 0; s < d; ++s) take(s);
  return lambda;
}

}  // namespace

SmoothCertificate SmoothCertificate::from_permutation(std::size_t n, std::size_t d,
                                                      std::vector<std::size_t> tau) {
  if (tau.size() != n * d) {
    throw Error(ErrorKind::ShapeMismatch, "permutation has " + std::to_string(tau.size()) +
                                              " entries, expected n*d = " + std::to_string(n * d));
  }
  SmoothCertificate cert{n, d, std::move(tau), {}};
  cert.column_maps.assign(n, std::vector<std::size_t>(d, d));
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t s = 0; s < d; ++s) {
      const std::size_t image = cert.tau[s * n + j - 1];
      if (image >= 1 && image <= n * d && (image - 1) % n == j - 1) {
        cert.column_maps[j - 1][s] = (image - 1) / n;
      }
    }
  }
  return cert;
}

std::vector<std::size_t> position_set(const Monomial& u, std::size_t j) {
  if (j == 0 || j > u.ambient()) {
    throw Error(ErrorKind::BadParameter, "variable index " + std::to_string(j) + " out of range");
  }
  const std::size_t n = u.ambient();
  const SlotRange r = slot_range(u, j);
  std::vector<std::size_t> out;
  for (std::size_t s = r.lo; s < r.hi(); ++s) out.push_back(s * n + j);
  return out;
}

SmoothVerdict check_smooth(std::span<const Monomial> set, std::size_t n) {
  require_set(set, n);
  const std::size_t d = max_degree(set);

  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t l = i + 1; l < set.size(); ++l) {
      for (std::size_t j = 1; j <= n; ++j) {
        const SlotRange a = slot_range(set[i], j);
        const SlotRange b = slot_range(set[l], j);
        const std::size_t expected = std::min(a.len, b.len);
        const std::size_t found = overlap(a, b);
        if (expected != found) {
          return SmoothWitness{i + 1, l + 1, j, expected, found,
                               position_set(set[i], j), position_set(set[l], j)};
        }
      }
    }
  }

  std::vector<std::size_t> tau(n * d);
  std::vector<std::vector<std::size_t>> columns;
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<SlotRange> ranges;
    for (const Monomial& u : set)
      if (u[j - 1] > 0) ranges.push_back(slot_range(u, j));
    std::vector<std::size_t> lambda = column_by_chain(ranges, d);
    if (lambda.empty()) lambda = column_by_signatures(ranges, d);
    if (lambda.empty()) {
      throw Error(ErrorKind::InternalError,
                  "no column bijection for variable " + std::to_string(j) +
                      " although every pairwise interval identity holds");
    }
    for (std::size_t s = 0; s < d; ++s) tau[s * n + j - 1] = lambda[s] * n + j;
    columns.push_back(std::move(lambda));
  }
  SmoothCertificate cert{n, d, std::move(tau), std::move(columns)};
  if (!verify_certificate(set, n, cert)) {
    // Retry with the signature matching before giving up.
    for (std::size_t j = 1; j <= n; ++j) {
      std::vector<SlotRange> ranges;
      for (const Monomial& u : set)
        if (u[j - 1] > 0) ranges.push_back(slot_range(u, j));
      std::vector<std::size_t> lambda = column_by_signatures(ranges, d);
      if (lambda.empty()) break;
      for (std::size_t s = 0; s < d; ++s) cert.tau[s * n + j - 1] = lambda[s] * n + j;
      cert.column_maps[j - 1] = std::move(lambda);
    }
    if (!verify_certificate(set, n, cert)) {
      throw Error(ErrorKind::InternalError, "constructed certificate failed verification");
    }
  }
  return cert;
}

SmoothVerdict check_smooth(const MonomialIdeal& ideal) {
  return check_smooth(ideal.generators(), ideal.ambient());
}

bool verify_certificate(std::span<const Monomial> set, std::size_t n, const SmoothCertificate& cert) {
  require_set(set, n);
  const std::size_t d = max_degree(set);
  if (cert.n != n || cert.d != d || cert.tau.size() != n * d) {
    throw Error(ErrorKind::ShapeMismatch,
                "certificate shape (n=" + std::to_string(cert.n) + ", d=" + std::to_string(cert.d) +
                    ") does not match (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
  if (d == 0) return true;
  const std::size_t size = n * d;
  std::vector<bool> seen(size + 1, false);
  for (std::size_t k = 1; k <= size; ++k) {
    const std::size_t image = cert.tau[k - 1];
    if (image == 0 || image > size || seen[image]) return false;
    if (image % n != k % n) return false;
    seen[image] = true;
  }
  for (const Monomial& u : set) {
    std::vector<std::size_t> idx = sigma_t(u, n).embedded(size).indices();
    for (std::size_t& k : idx) k = cert.tau[k - 1];
    if (Monomial::from_indices(size, idx) != polarize(u, n, d)) return false;
  }
  return true;
}

std::string_view to_string(T2Verdict v) noexcept {
  switch (v) {
    case T2Verdict::SufficientHolds: return "SufficientHolds";
    case T2Verdict::NecessaryFails: return "NecessaryFails";
    case T2Verdict::Indeterminate: return "Indeterminate";
  }
  return "Unknown";
}

T2Verdict check_smooth_T2(const MonomialIdeal& ideal) {
  if (ideal.ambient() != 2) {
    throw Error(ErrorKind::BadAmbient, "expected an ideal of T_2, got ambient " +
                                           std::to_string(ideal.ambient()));
  }
  std::vector<Monomial> gens = ideal.generators();
  // Decreasing a forces increasing b on a minimal set.
  std::sort(gens.begin(), gens.end(), [](const Monomial& x, const Monomial& y) { return x[0] > y[0]; });
  const std::size_t m = gens.size();
  std::vector<std::size_t> total(m);
  for (std::size_t k = 0; k < m; ++k) total[k] = gens[k].degree();

  const bool sufficient = std::is_sorted(total.begin(), total.end());
  if (sufficient) return T2Verdict::SufficientHolds;

  // The x_2-interval [a_k, a_k + b_k) of the k-th generator has to sit inside
  // every later one as soon as it is nonempty; that forces the total degree
  // to rise from k to k + 1. This covers the inner chain, the first step when
  // b_1 > 0 and the last step whenever b_{m-1} > 0.
  for (std::size_t k = 0; k + 1 < m; ++k)
    if (gens[k][1] > 0 && total[k] > total[k + 1]) return T2Verdict::NecessaryFails;
  return T2Verdict::Indeterminate;
}

MonomialIdeal adjoin_disjoint(const MonomialIdeal& ideal, const Monomial& v, std::size_t n_prime) {
  const std::size_t n = ideal.ambient();
  if (n_prime <= n) {
    throw Error(ErrorKind::BadParameter, "n' = " + std::to_string(n_prime) + " must exceed n = " +
                                             std::to_string(n));
  }
  if (v.ambient() != n_prime) {
    throw Error(ErrorKind::AmbientMismatch, "v must live in T_" + std::to_string(n_prime));
  }
  if (v.is_unit()) throw Error(ErrorKind::UnitGenerator, "v must not be 1");
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j] > 0) {
      throw Error(ErrorKind::SupportOverlap,
                  to_string(v) + " involves x" + std::to_string(j + 1) + " of the base ring");
    }
  }
  std::vector<Monomial> gens;
  for (const Monomial& u : ideal.generators()) gens.push_back(u.embedded(n_prime));
  gens.push_back(v);
  return MonomialIdeal(n_prime, std::move(gens));
}

namespace {

void validate_powers(const MonomialIdeal& ideal, std::span<const PurePower> powers) {
  if (powers.empty()) throw Error(ErrorKind::BadParameter, "no pure powers given");
  std::size_t prev = 0;
  for (const auto& [j, d] : powers) {
    if (j <= prev || j > ideal.ambient()) {
      throw Error(ErrorKind::BadParameter, "variable indices must increase within 1.." +
                                               std::to_string(ideal.ambient()));
    }
    if (d == 0) throw Error(ErrorKind::BadParameter, "pure power exponents must be positive");
    prev = j;
    for (const Monomial& u : ideal.generators()) {
      const bool power_divides_u = u[j - 1] >= d;
      const bool u_divides_power = u.degree() == u[j - 1] && u[j - 1] <= d;
      if (power_divides_u || u_divides_power) {
        throw Error(ErrorKind::NotMinimal, "x" + std::to_string(j) + "^" + std::to_string(d) +
                                               " is comparable with " + to_string(u));
      }
    }
  }
}

}  // namespace

bool adjoin_pure_powers_condition(const MonomialIdeal& ideal, std::span<const PurePower> powers) {
  validate_powers(ideal, powers);
  for (const auto& [j, d] : powers) {
    std::size_t bound = 0;
    for (const Monomial& u : ideal.generators()) {
      if (u[j - 1] == 0) continue;
      bound = std::max(bound, prefix_degree(u, j) + u[j - 1]);
    }
    if (d < bound) return false;
  }
  return true;
}

MonomialIdeal adjoin_pure_powers(const MonomialIdeal& ideal, std::span<const PurePower> powers) {
  validate_powers(ideal, powers);
  std::vector<Monomial> gens = ideal.generators();
  for (const auto& [j, d] : powers) {
    std::vector<Exponent> exps(ideal.ambient(), 0);
    exps[j - 1] = d;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

std::vector<Monomial> product_construct(std::span<const Monomial> first, std::size_t n,
                                        std::span<const Monomial> second, std::size_t n_prime) {
  if (n_prime <= n) {
    throw Error(ErrorKind::BadParameter, "n' = " + std::to_string(n_prime) + " must exceed n = " +
                                             std::to_string(n));
  }
  require_set(first, n);
  require_set(second, n_prime);
  const Degree d = first.front().degree();
  for (const Monomial& u : first) {
    if (u.degree() != d) {
      throw Error(ErrorKind::DegreeMismatch, "all monomials of the first set need degree " +
                                                 std::to_string(d) + ", got " + to_string(u));
    }
  }
  for (const Monomial& v : second) {
    if (v.is_unit()) throw Error(ErrorKind::UnitGenerator, "the second set contains 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] > 0) {
        throw Error(ErrorKind::SupportOverlap,
                    to_string(v) + " involves x" + std::to_string(j + 1) + " of the first ring");
      }
    }
  }
  if (!is_smooth(check_smooth(first, n))) {
    throw Error(ErrorKind::NotSmoothInput, "first set is not smoothly spreadable");
  }
  if (!is_smooth(check_smooth(second, n_prime))) {
    throw Error(ErrorKind::NotSmoothInput, "second set is not smoothly spreadable");
  }
  std::vector<Monomial> out;
  out.reserve(first.size() * second.size());
  for (const Monomial& u : first) {
    const Monomial lifted = u.embedded(n_prime);
    for (const Monomial& v : second) out.push_back(lifted * v);
  }
  return out;
}

std::string cycle_notation(std::span<const std::size_t> tau) {
  std::vector<bool> visited(tau.size() + 1, false);
  std::string out;
  for (std::size_t start = 1; start <= tau.size(); ++start) {
    if (visited[start] || tau[start - 1] == start) continue;
    out += '(';
    std::size_t k = start;
    bool first = true;
    while (!visited[k]) {
      visited[k] = true;
      if (!first) out += ' ';
      out += std::to_string(k);
      first = false;
      k = tau[k - 1];
      if (k == 0 || k > tau.size()) break;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace mspread
