#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "srpl/complex.hpp"

namespace srpl {

/// Set of faces of a complex on at most 6 vertices: bit f is set iff the face
/// with mask f belongs to the complex.
using FaceSet = std::uint64_t;

inline constexpr int kMaxEnumerated = 6;

inline SimplicialComplex complex_from_face_set(int k, FaceSet s) {
  std::vector<std::uint8_t> table(std::size_t{1} << k);
  for (std::size_t f = 0; f < table.size(); ++f) table[f] = (s >> f) & 1;
  return SimplicialComplex::from_face_table(k, table);
}

/// Compact text form, e.g. "6:1234,1256,3456".
inline std::string signature(const SimplicialComplex& c) {
  std::string s = std::to_string(c.ambient_size()) + ":";
  if (c.is_void()) return s + "void";
  bool first = true;
  for (Face f : c.facets()) {
    if (!first) s += ',';
    first = false;
    if (f == 0) s += "{}";
    for (int v : face_labels(f)) {
      if (v >= 10) s += '(' + std::to_string(v) + ')';
      else s += static_cast<char>('0' + v);
    }
  }
  return s;
}

namespace detail {

class ClassEnumerator {
 public:
  explicit ClassEnumerator(int k) : k_(k) {
    for (Face f = 0; f < (Face{1} << k); ++f)
      if (face_size(f) >= 2) order_.push_back(f);
    std::stable_sort(order_.begin(), order_.end(),
                     [](Face a, Face b) { return face_size(a) < face_size(b); });
  }

  std::vector<SimplicialComplex> run() {
    FaceSet s = 1;  // the empty face
    for (int v = 1; v <= k_; ++v) s |= FaceSet{1} << vertex_bit(v);
    keys_.fill(0);
    descend(0, s);
    std::sort(found_.begin(), found_.end());
    std::vector<SimplicialComplex> out;
    out.reserve(found_.size());
    for (FaceSet f : found_) out.push_back(complex_from_face_set(k_, f));
    return out;
  }

 private:
  // Per-vertex invariant: counts of faces of each size through the vertex.
  static constexpr std::uint64_t weight(int size) { return std::uint64_t{1} << (8 * size); }

  void descend(std::size_t i, FaceSet s) {
    if (i == order_.size()) {
      if (is_representative(s)) found_.push_back(s);
      return;
    }
    const Face f = order_[i];
    descend(i + 1, s);
    for (Face rest = f; rest != 0; rest &= rest - 1)
      if (!((s >> (f & ~(rest & -rest))) & 1)) return;
    for (int v : face_labels(f)) keys_[v - 1] += weight(face_size(f));
    descend(i + 1, s | (FaceSet{1} << f));
    for (int v : face_labels(f)) keys_[v - 1] -= weight(face_size(f));
  }

  static FaceSet apply(const std::array<int, kMaxEnumerated>& perm, int k, FaceSet s) {
    FaceSet out = 0;
    for (FaceSet rest = s; rest != 0; rest &= rest - 1) {
      const Face f = static_cast<Face>(std::countr_zero(rest));
      Face g = 0;
      for (int v = 0; v < k; ++v)
        if (f & (Face{1} << v)) g |= Face{1} << perm[v];
      out |= FaceSet{1} << g;
    }
    return out;
  }

  // Keeps the labeling whose vertex keys are non-increasing and whose face set
  // is largest among all such labelings.
  bool is_representative(FaceSet s) const {
    for (int v = 1; v < k_; ++v)
      if (keys_[v - 1] < keys_[v]) return false;
    std::array<int, kMaxEnumerated> perm{};
    for (int v = 0; v < k_; ++v) perm[v] = v;
    // permute inside runs of equal keys: odometer over per-run permutations
    std::vector<std::pair<int, int>> runs;
    for (int a = 0; a < k_;) {
      int b = a + 1;
      while (b < k_ && keys_[b] == keys_[a]) ++b;
      if (b - a > 1) runs.emplace_back(a, b);
      a = b;
    }
    while (true) {
      std::size_t r = 0;
      for (; r < runs.size(); ++r)
        if (std::next_permutation(perm.begin() + runs[r].first, perm.begin() + runs[r].second)) break;
      if (r == runs.size()) return true;
      if (apply(perm, k_, s) > s) return false;
    }
  }

  int k_;
  std::vector<Face> order_;
  std::array<std::uint64_t, kMaxEnumerated> keys_{};
  std::vector<FaceSet> found_;
};

}  // namespace detail

/// One complex per isomorphism class of complexes with vertex set exactly {1..k}.
inline std::vector<SimplicialComplex> complex_classes(int k) {
  if (k < 1 || k > kMaxEnumerated)
    throw std::invalid_argument("exhaustive enumeration needs 1 <= k <= " + std::to_string(kMaxEnumerated));
  return detail::ClassEnumerator(k).run();
}

/// Classes on exactly k vertices for every k = 1..n, in order of k.
inline std::vector<SimplicialComplex> complex_classes_up_to(int n) {
  std::vector<SimplicialComplex> out;
  for (int k = 1; k <= n; ++k) {
    auto part = complex_classes(k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Deterministic choice of `count` items (all of them if fewer), kept in
/// their original order.
template <typename T>
std::vector<T> fixed_sample(const std::vector<T>& items, std::size_t count, std::uint64_t seed) {
  if (count >= items.size()) return items;
  std::mt19937_64 rng(seed);
  std::set<std::size_t> chosen;
  // Floyd's algorithm
  for (std::size_t j = items.size() - count; j < items.size(); ++j) {
    const std::size_t t = static_cast<std::size_t>(rng() % (j + 1));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i : chosen) out.push_back(items[i]);
  return out;
}

/// Cheap isomorphism invariant: sorted facet sizes and sorted vertex degrees.
inline std::string invariant_signature(const SimplicialComplex& c) {
  std::vector<int> sizes;
  for (Face f : c.facets()) sizes.push_back(face_size(f));
  std::sort(sizes.begin(), sizes.end());
  std::vector<std::vector<int>> degs;
  for (int v = 1; v <= c.ambient_size(); ++v) {
    std::vector<int> d;
    for (Face f : c.facets())
      if (contains_vertex(f, v)) d.push_back(face_size(f));
    std::sort(d.begin(), d.end());
    degs.push_back(std::move(d));
  }
  std::sort(degs.begin(), degs.end());
  std::string s;
  for (int x : sizes) s += std::to_string(x) + ',';
  s += '|';
  for (const auto& d : degs) {
    for (int x : d) s += std::to_string(x) + ',';
    s += ';';
  }
  return s;
}

/// Random complexes on exactly {1..n} (n ≤ 7 beyond the exhaustive range),
/// deduplicated by `invariant_signature`.
inline std::vector<SimplicialComplex> random_complexes(int n, std::size_t count, std::uint64_t seed) {
  check_ambient(n);
  std::mt19937_64 rng(seed);
  std::set<std::string> seen;
  std::vector<SimplicialComplex> out;
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 50 * count + 100) {
    ++attempts;
    const int facets = 1 + static_cast<int>(rng() % 6);
    std::vector<Face> gens;
    for (int i = 0; i < facets; ++i) gens.push_back(static_cast<Face>(rng() & full_face(n)));
    for (int v = 1; v <= n; ++v) gens.push_back(vertex_bit(v));
    auto c = SimplicialComplex::from_facets(n, std::move(gens));
    if (seen.insert(invariant_signature(c)).second) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace srpl
