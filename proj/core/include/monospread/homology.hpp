#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monospread/lattice.hpp"

namespace mspread {

/// Reduced Betti numbers over GF(2); `values[k + 1]` is dim H~_k for
/// k >= -1.
struct ReducedBetti {
  std::vector<std::size_t> values;

  std::size_t at(int k) const;
  bool acyclic() const;
};

/// A simplicial complex given by its nonempty faces, each a strictly
/// increasing vertex list. The empty face is implicit. The list must be
/// closed under taking nonempty subfaces.
using FaceList = std::vector<std::vector<std::uint32_t>>;

/// Reduced homology over GF(2) by sparse boundary-matrix reduction.
ReducedBetti reduced_betti_gf2(const FaceList& faces);

/// Chains of the open interval (bottom, m) of `lattice`.
FaceList order_complex(const LcmLattice& lattice, std::size_t m);

/// Reduced homology of the order complex of (bottom, m). BadParameter if m
/// is the bottom.
ReducedBetti order_complex_betti(const LcmLattice& lattice, std::size_t m);

}  // namespace mspread
