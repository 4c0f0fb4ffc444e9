#include "monospread/homology.hpp"

#include <algorithm>
#include <map>

#include "monospread/error.hpp"

namespace mspread {

std::size_t ReducedBetti::at(int k) const {
  const auto pos = static_cast<std::size_t>(k + 1);
  return k >= -1 && pos < values.size() ? values[pos] : 0;
}

bool ReducedBetti::acyclic() const {
  return std::all_of(values.begin(), values.end(), [](std::size_t v) { return v == 0; });
}

namespace {

using Column = std::vector<std::uint32_t>;

void add_into(Column& target, const Column& other) {
  Column sum;
  sum.reserve(target.size() + other.size());
  std::set_symmetric_difference(target.begin(), target.end(), other.begin(), other.end(),
                                std::back_inserter(sum));
  target.swap(sum);
}

}  // namespace

ReducedBetti reduced_betti_gf2(const FaceList& faces) {
  std::size_t top = 0;
  for (const auto& f : faces) {
    if (f.empty()) throw Error(ErrorKind::BadParameter, "face list contains the empty face");
    top = std::max(top, f.size() - 1);
  }
  if (faces.empty()) return ReducedBetti{{1}};

  std::vector<std::vector<const std::vector<std::uint32_t>*>> by_dim(top + 1);
  for (const auto& f : faces) by_dim[f.size() - 1].push_back(&f);
  std::vector<std::map<std::vector<std::uint32_t>, std::uint32_t>> index(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    std::sort(by_dim[k].begin(), by_dim[k].end(), [](auto* a, auto* b) { return *a < *b; });
    for (std::size_t i = 0; i < by_dim[k].size(); ++i) {
      if (!index[k].emplace(*by_dim[k][i], static_cast<std::uint32_t>(i)).second) {
        throw Error(ErrorKind::BadParameter, "duplicate face");
      }
    }
  }

  // rank[k] = rank of boundary C_k -> C_{k-1}; rank[0] is the augmentation.
  std::vector<std::size_t> rank(top + 2, 0);
  rank[0] = by_dim[0].empty() ? 0 : 1;
  std::vector<std::vector<bool>> cleared(top + 1);
  for (std::size_t k = 0; k <= top; ++k) cleared[k].assign(by_dim[k].size(), false);

  for (std::size_t k = top; k >= 1; --k) {
    const std::size_t rows = by_dim[k - 1].size();
    std::vector<std::int64_t> pivot_of(rows, -1);
    std::vector<Column> reduced(by_dim[k].size());
    for (std::size_t j = 0; j < by_dim[k].size(); ++j) {
      if (cleared[k][j]) continue;
      const auto& face = *by_dim[k][j];
      Column col;
      col.reserve(face.size());
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        std::vector<std::uint32_t> sub;
        sub.reserve(face.size() - 1);
        for (std::size_t v = 0; v < face.size(); ++v)
          if (v != drop) sub.push_back(face[v]);
        auto it = index[k - 1].find(sub);
        if (it == index[k - 1].end()) {
          throw Error(ErrorKind::BadParameter, "face list is not closed under subfaces");
        }
        col.push_back(it->second);
      }
      std::sort(col.begin(), col.end());
      while (!col.empty() && pivot_of[col.back()] >= 0) {
        add_into(col, reduced[static_cast<std::size_t>(pivot_of[col.back()])]);
      }
      if (!col.empty()) {
        pivot_of[col.back()] = static_cast<std::int64_t>(j);
        cleared[k - 1][col.back()] = true;
        ++rank[k];
        reduced[j] = std::move(col);
      }
    }
  }

  ReducedBetti out;
  out.values.resize(top + 2);
  out.values[0] = 1 - rank[0];
  for (std::size_t k = 0; k <= top; ++k) {
    out.values[k + 1] = by_dim[k].size() - rank[k] - rank[k + 1];
  }
  return out;
}

FaceList order_complex(const LcmLattice& lattice, std::size_t m) {
  std::vector<std::size_t> inside;
  for (std::size_t e = 0; e < lattice.size(); ++e) {
    if (e != lattice.bottom() && e != m && lattice.leq(e, m)) inside.push_back(e);
  }
  FaceList faces;
  std::vector<std::uint32_t> chain;
  // Element indices follow a linear extension, so chains increase in index.
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t v = from; v < inside.size(); ++v) {
      if (!chain.empty() && !lattice.leq(inside[chain.back()], inside[v])) continue;
      chain.push_back(static_cast<std::uint32_t>(v));
      faces.push_back(chain);
      self(self, v + 1);
      chain.pop_back();
    }
  };
  extend(extend, 0);
  return faces;
}

ReducedBetti order_complex_betti(const LcmLattice& lattice, std::size_t m) {
  if (m >= lattice.size()) throw Error(ErrorKind::BadParameter, "element index out of range");
  if (m == lattice.bottom()) {
    throw Error(ErrorKind::BadParameter, "the interval below the bottom element is undefined");
  }
  return reduced_betti_gf2(order_complex(lattice, m));
}

}  // namespace mspread
