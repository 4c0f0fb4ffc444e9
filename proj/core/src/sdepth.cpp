#include "monospread/sdepth.hpp"

#include <algorithm>
#include <limits>

#include "monospread/error.hpp"

namespace mspread {

CharacteristicPoset::CharacteristicPoset(const MonomialIdeal& ideal) : bound_(ideal.lcm_of_generators()) {
  const std::size_t n = bound_.ambient();
  std::size_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    total *= std::size_t{bound_[j]} + 1;
    if (total > kMaxPosetPoints) {
      throw Error(ErrorKind::TooLarge, "characteristic poset exceeds " +
                                           std::to_string(kMaxPosetPoints) + " points");
    }
  }
  strides_.assign(n, 1);
  for (std::size_t j = n; j-- > 1;) strides_[j - 1] = strides_[j] * (std::size_t{bound_[j]} + 1);
  in_ideal_.resize(total);
  for (std::size_t i = 0; i < total; ++i) in_ideal_[i] = ideal.contains(point(i));
}

Monomial CharacteristicPoset::point(std::size_t index) const {
  std::vector<Exponent> c(bound_.ambient());
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] = static_cast<Exponent>(index / strides_[j]);
    index %= strides_[j];
  }
  return Monomial(std::move(c));
}

std::size_t CharacteristicPoset::index(std::span<const Exponent> point) const {
  std::size_t out = 0;
  for (std::size_t j = 0; j < point.size(); ++j) out += point[j] * strides_[j];
  return out;
}

std::size_t CharacteristicPoset::saturated(std::span<const Exponent> point) const {
  std::size_t count = 0;
  for (std::size_t j = 0; j < point.size(); ++j)
    if (point[j] == bound_[j]) ++count;
  return count;
}

namespace {

// Decides whether the chosen side splits into intervals [a, b] whose upper
// corners saturate at least k coordinates. Any such partition can be refined
// so that every interval is either a singleton with >= k saturated
// coordinates, or raises exactly the coordinates of a k-set S (containing
// every coordinate already saturated at a) to g while fixing the others.
// Intervals are anchored at the lexicographically least uncovered point.
class PartitionSearch {
 public:
  PartitionSearch(const CharacteristicPoset& poset, bool ideal_side)
      : poset_(poset), ideal_side_(ideal_side), covered_(poset.size(), false) {}

  bool on_side(std::size_t i) const { return poset_.in_ideal(i) == ideal_side_; }

  std::size_t upper_bound() const {
    const std::size_t n = poset_.ambient();
    std::vector<std::size_t> best(poset_.size(), 0);
    std::size_t bound = n;
    for (std::size_t i = poset_.size(); i-- > 0;) {
      if (!on_side(i)) continue;
      const Monomial c = poset_.point(i);
      std::size_t b = poset_.saturated(c.exponents());
      std::vector<Exponent> up(c.exponents().begin(), c.exponents().end());
      for (std::size_t j = 0; j < n; ++j) {
        if (up[j] == poset_.bound()[j]) continue;
        ++up[j];
        const std::size_t k = poset_.index(up);
        if (on_side(k)) b = std::max(b, best[k]);
        --up[j];
      }
      best[i] = b;
      bound = std::min(bound, b);
    }
    return bound;
  }

  bool run(std::size_t k) {
    k_ = k;
    std::fill(covered_.begin(), covered_.end(), false);
    chosen_.clear();
    return place(0);
  }

  std::vector<PosetInterval> partition() const { return chosen_; }

 private:
  bool place(std::size_t from) {
    std::size_t i = from;
    while (i < poset_.size() && (covered_[i] || !on_side(i))) ++i;
    if (i == poset_.size()) return true;

    const Monomial a = poset_.point(i);
    const std::size_t n = a.ambient();
    std::vector<std::size_t> free_coords;
    for (std::size_t j = 0; j < n; ++j)
      if (a[j] != poset_.bound()[j]) free_coords.push_back(j);
    const std::size_t sat = n - free_coords.size();

    if (sat >= k_) return try_interval(i, a, a);

    const std::size_t need = k_ - sat;
    if (need > free_coords.size()) return false;
    // Subsets of free_coords of size `need`, in lexicographic order.
    std::vector<std::size_t> pick(need);
    for (std::size_t s = 0; s < need; ++s) pick[s] = s;
    while (true) {
      std::vector<Exponent> upper(a.exponents().begin(), a.exponents().end());
      for (std::size_t s : pick) upper[free_coords[s]] = poset_.bound()[free_coords[s]];
      if (try_interval(i, a, Monomial(std::move(upper)))) return true;
      std::size_t s = need;
      while (s > 0 && pick[s - 1] == free_coords.size() - need + s - 1) --s;
      if (s == 0) break;
      ++pick[s - 1];
      for (std::size_t r = s; r < need; ++r) pick[r] = pick[r - 1] + 1;
    }
    return false;
  }

  bool try_interval(std::size_t anchor, const Monomial& lower, const Monomial& upper) {
    // The quotient side is a down-set, the ideal side an up-set.
    const std::size_t probe = ideal_side_ ? anchor : poset_.index(upper.exponents());
    if (!on_side(probe)) return false;
    std::vector<std::size_t> members;
    std::vector<Exponent> c(lower.exponents().begin(), lower.exponents().end());
    const std::size_t n = c.size();
    while (true) {
      const std::size_t idx = poset_.index(c);
      if (covered_[idx]) return false;
      members.push_back(idx);
      bool advanced = false;
      for (std::size_t j = n; j-- > 0;) {
        if (c[j] < upper[j]) {
          ++c[j];
          for (std::size_t r = j + 1; r < n; ++r) c[r] = lower[r];
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    for (std::size_t idx : members) covered_[idx] = true;
    chosen_.push_back({lower, upper});
    if (place(anchor + 1)) return true;
    chosen_.pop_back();
    for (std::size_t idx : members) covered_[idx] = false;
    return false;
  }

  const CharacteristicPoset& poset_;
  bool ideal_side_;
  std::size_t k_ = 0;
  std::vector<bool> covered_;
  std::vector<PosetInterval> chosen_;
};

SdepthReport run_sdepth(const MonomialIdeal& ideal, bool ideal_side) {
  const CharacteristicPoset poset(ideal);
  PartitionSearch search(poset, ideal_side);
  SdepthReport report;
  report.ambient = ideal.ambient();
  report.ideal_side = ideal_side;
  for (std::size_t k = search.upper_bound() + 1; k-- > 0;) {
    if (search.run(k)) {
      report.value = k;
      report.partition = search.partition();
      return report;
    }
  }
  throw Error(ErrorKind::InternalError, "singleton partition rejected");
}

}  // namespace

SdepthReport sdepth_quotient(const MonomialIdeal& ideal) { return run_sdepth(ideal, false); }

SdepthReport sdepth_ideal(const MonomialIdeal& ideal) { return run_sdepth(ideal, true); }

}  // namespace mspread
