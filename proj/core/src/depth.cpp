#include "monospread/depth.hpp"

#include <algorithm>
#include <tuple>

#include "monospread/error.hpp"
#include "monospread/homology.hpp"
#include "monospread/lattice.hpp"

namespace mspread {

BettiTable::BettiTable(std::vector<BettiEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const BettiEntry& a, const BettiEntry& b) {
    return std::tie(a.i, a.multidegree) < std::tie(b.i, b.multidegree);
  });
}

std::size_t BettiTable::value(std::size_t i, const Monomial& multidegree) const {
  for (const BettiEntry& e : entries_)
    if (e.i == i && e.multidegree == multidegree) return e.value;
  return 0;
}

std::size_t BettiTable::total(std::size_t i) const {
  std::size_t sum = 0;
  for (const BettiEntry& e : entries_)
    if (e.i == i) sum += e.value;
  return sum;
}

std::size_t BettiTable::projective_dimension() const {
  std::size_t pd = 0;
  for (const BettiEntry& e : entries_)
    if (e.value != 0) pd = std::max(pd, e.i);
  return pd;
}

BettiTable multigraded_betti(const MonomialIdeal& ideal) {
  if (ideal.size() > kMaxDepthGenerators) {
    throw Error(ErrorKind::TooLarge, "depth oracle limited to " + std::to_string(kMaxDepthGenerators) +
                                         " generators, got " + std::to_string(ideal.size()));
  }
  const LcmLattice lattice(ideal);
  std::vector<BettiEntry> entries;
  entries.push_back({0, Monomial(ideal.ambient()), 1});
  for (std::size_t m = 0; m < lattice.size(); ++m) {
    if (m == lattice.bottom()) continue;
    const ReducedBetti h = order_complex_betti(lattice, m);
    for (std::size_t pos = 0; pos < h.values.size(); ++pos) {
      if (h.values[pos] == 0) continue;
      // values[pos] is H~_{pos-1}, which feeds b_{pos+1, m}.
      entries.push_back({pos + 1, lattice.element(m), h.values[pos]});
    }
  }
  return BettiTable(std::move(entries));
}

DepthReport depth_quotient(const MonomialIdeal& ideal) {
  DepthReport report;
  report.betti = multigraded_betti(ideal);
  report.projective_dimension = report.betti.projective_dimension();
  report.ambient = ideal.ambient();
  if (report.projective_dimension > report.ambient) {
    throw Error(ErrorKind::InternalError, "projective dimension exceeds the number of variables");
  }
  report.value = report.ambient - report.projective_dimension;
  return report;
}

}  // namespace mspread
