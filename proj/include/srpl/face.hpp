#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace srpl {

/// A set of vertices of the ambient range {1..n}, stored as a bitmask.
/// Vertex label v occupies bit v-1.
using Face = std::uint32_t;

/// Upper bound on the ambient size. 2^n tables are allocated for some
/// operations, so the practical limit is lower.
inline constexpr int kMaxAmbient = 24;

inline constexpr Face vertex_bit(int label) { return Face{1} << (label - 1); }

inline constexpr Face full_face(int n) {
  return n >= 32 ? ~Face{0} : (Face{1} << n) - 1;
}

inline int face_size(Face f) { return std::popcount(f); }

inline constexpr bool is_subset(Face a, Face b) { return (a & ~b) == 0; }

inline bool contains_vertex(Face f, int label) { return (f & vertex_bit(label)) != 0; }

inline void check_ambient(int n) {
  if (n < 0 || n > kMaxAmbient)
    throw std::invalid_argument("ambient size " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxAmbient) + "]");
}

/// 1-based vertex labels of a face, increasing.
inline std::vector<int> face_labels(Face f) {
  std::vector<int> out;
  out.reserve(face_size(f));
  while (f != 0) {
    out.push_back(std::countr_zero(f) + 1);
    f &= f - 1;
  }
  return out;
}

inline Face face_from_labels(int n, const std::vector<int>& labels) {
  Face f = 0;
  for (int v : labels) {
    if (v < 1 || v > n)
      throw std::out_of_range("vertex label " + std::to_string(v) + " outside 1.." +
                              std::to_string(n));
    f |= vertex_bit(v);
  }
  return f;
}

/// "{1,2,5}"
inline std::string face_to_string(Face f) {
  std::string s = "{";
  bool first = true;
  for (int v : face_labels(f)) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

/// Keeps only inclusion-maximal sets; result sorted ascending.
inline std::vector<Face> maximal_elements(std::vector<Face> sets) {
  std::sort(sets.begin(), sets.end(),
            [](Face a, Face b) { return face_size(a) != face_size(b) ? face_size(a) > face_size(b) : a < b; });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Face> keep;
  for (Face s : sets) {
    bool dominated = false;
    for (Face k : keep)
      if (is_subset(s, k)) {
        dominated = true;
        break;
      }
    if (!dominated) keep.push_back(s);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

/// Keeps only inclusion-minimal sets; result sorted ascending.
inline std::vector<Face> minimal_elements(std::vector<Face> sets) {
  std::sort(sets.begin(), sets.end(),
            [](Face a, Face b) { return face_size(a) != face_size(b) ? face_size(a) < face_size(b) : a < b; });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Face> keep;
  for (Face s : sets) {
    bool dominated = false;
    for (Face k : keep)
      if (is_subset(k, s)) {
        dominated = true;
        break;
      }
    if (!dominated) keep.push_back(s);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

}  // namespace srpl
