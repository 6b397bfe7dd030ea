#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "srpl/complex.hpp"
#include "srpl/linalg.hpp"

namespace srpl {

/// Dimensions of H̃^i(Δ; K) for i = -1 .. dim Δ. The void complex has none.
struct CohomologyDims {
  std::vector<std::size_t> dims;  // dims[k] is H̃^{k-1}

  std::size_t at(int i) const {
    const int k = i + 1;
    return (k >= 0 && k < static_cast<int>(dims.size())) ? dims[k] : 0;
  }
  bool vanishes() const {
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
  }
  /// Lowest i with H̃^i ≠ 0, or nullopt.
  std::optional<int> lowest_nonzero() const {
    for (std::size_t k = 0; k < dims.size(); ++k)
      if (dims[k] != 0) return static_cast<int>(k) - 1;
    return std::nullopt;
  }
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// Matrix of ∂ from faces of size k+1 to faces of size k, with the sign of
/// deleting the j-th smallest vertex equal to (-1)^j.
inline IntMatrix boundary_matrix(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  IntMatrix m(lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const Face f = upper[c];
    int j = 0;
    for (Face rest = f; rest != 0; rest &= rest - 1, ++j) {
      const Face g = f & ~(rest & -rest);
      const auto it = std::lower_bound(lower.begin(), lower.end(), g);
      m.at(static_cast<std::size_t>(it - lower.begin()), c) = (j % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

/// Reduced simplicial cohomology dimensions from ranks of the (co)boundary maps.
inline CohomologyDims reduced_cohomology_dims(const SimplicialComplex& c, const Field& field) {
  CohomologyDims out;
  if (c.is_void()) return out;
  const int d = c.dimension();
  std::vector<std::vector<Face>> by_size(static_cast<std::size_t>(d) + 2);
  for (Face f : c.faces()) by_size[face_size(f)].push_back(f);  // ascending within each size
  // ranks[k] = rank of ∂ from size k+1 to size k, k = 0..d
  std::vector<std::size_t> ranks(static_cast<std::size_t>(d) + 2, 0);
  for (int k = 0; k <= d; ++k)
    ranks[k] = rank(boundary_matrix(by_size[k], by_size[k + 1]), field);
  out.dims.resize(static_cast<std::size_t>(d) + 2);
  for (int k = 0; k <= d + 1; ++k) {
    // H̃^{k-1}: cochains on faces of size k
    const std::size_t into = k >= 1 ? ranks[k - 1] : 0;   // image of δ into size k
    const std::size_t out_rank = k <= d ? ranks[k] : 0;   // rank of δ out of size k
    out.dims[k] = by_size[k].size() - into - out_rank;
  }
  return out;
}

}  // namespace srpl
