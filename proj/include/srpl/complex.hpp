#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "srpl/face.hpp"

namespace srpl {

/// Simplicial complex on the ambient vertex range {1..n}, stored by its facets.
///
/// Two degenerate values are kept apart: the void complex has no faces at all,
/// while the empty complex {∅} has exactly one face, the empty set. Ambient
/// vertices that lie in no facet are allowed; they are simply not in V(Δ).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Complex generated by `generators`; non-maximal generators are dropped.
  /// An empty generator list gives {∅}.
  static SimplicialComplex from_facets(int n, std::vector<Face> generators) {
    check_ambient(n);
    const Face range = full_face(n);
    for (Face g : generators)
      if (!is_subset(g, range))
        throw std::out_of_range("generator " + face_to_string(g) + " not inside 1.." +
                                std::to_string(n));
    if (generators.empty()) generators.push_back(0);
    SimplicialComplex c;
    c.n_ = n;
    c.void_ = false;
    c.facets_ = maximal_elements(std::move(generators));
    return c;
  }

  /// Same, with 1-based vertex labels.
  static SimplicialComplex from_label_sets(int n, const std::vector<std::vector<int>>& sets) {
    check_ambient(n);
    std::vector<Face> gens;
    gens.reserve(sets.size());
    for (const auto& s : sets) gens.push_back(face_from_labels(n, s));
    return from_facets(n, std::move(gens));
  }

  static SimplicialComplex empty(int n) { return from_facets(n, {}); }

  static SimplicialComplex void_complex(int n) {
    check_ambient(n);
    SimplicialComplex c;
    c.n_ = n;
    c.void_ = true;
    return c;
  }

  /// Complex of all subsets of {1..n} containing none of `nonfaces`.
  /// Void when ∅ itself is listed.
  static SimplicialComplex from_nonfaces(int n, const std::vector<Face>& nonfaces) {
    check_ambient(n);
    for (Face h : nonfaces)
      if (h == 0) return void_complex(n);
    std::vector<std::uint8_t> table(std::size_t{1} << n, 1);
    for (Face h : nonfaces) {
      // mark every superset of h
      const Face rest = full_face(n) & ~h;
      for (Face sub = rest;; sub = (sub - 1) & rest) {
        table[sub | h] = 0;
        if (sub == 0) break;
      }
    }
    return from_face_table(n, table);
  }

  /// Builds a complex from a down-closed membership table indexed by face mask.
  static SimplicialComplex from_face_table(int n, const std::vector<std::uint8_t>& table) {
    check_ambient(n);
    if (table.empty() || !table[0]) return void_complex(n);
    std::vector<Face> facets;
    const Face top = full_face(n);
    for (Face s = 0;; ++s) {
      if (table[s]) {
        bool maximal = true;
        for (Face rest = top & ~s; rest != 0; rest &= rest - 1)
          if (table[s | (rest & -rest)]) {
            maximal = false;
            break;
          }
        if (maximal) facets.push_back(s);
      }
      if (s == top) break;
    }
    SimplicialComplex c;
    c.n_ = n;
    c.void_ = false;
    c.facets_ = std::move(facets);
    return c;
  }

  int ambient_size() const { return n_; }
  bool is_void() const { return void_; }
  /// True for {∅}.
  bool is_empty_complex() const { return !void_ && facets_.size() == 1 && facets_[0] == 0; }
  const std::vector<Face>& facets() const { return facets_; }

  bool contains(Face f) const {
    for (Face g : facets_)
      if (is_subset(f, g)) return true;
    return false;
  }

  Face vertex_set() const {
    Face v = 0;
    for (Face f : facets_) v |= f;
    return v;
  }

  int dimension() const {
    if (void_) throw std::domain_error("dimension of the void complex is undefined");
    int d = -1;
    for (Face f : facets_) d = std::max(d, face_size(f) - 1);
    return d;
  }

  bool is_pure() const {
    if (void_) return true;
    for (Face f : facets_)
      if (face_size(f) != face_size(facets_.front())) return false;
    return true;
  }

  /// Membership table over all 2^n subsets of the ambient range.
  std::vector<std::uint8_t> face_table() const {
    std::vector<std::uint8_t> table(std::size_t{1} << n_, 0);
    for (Face f : facets_)
      for (Face sub = f;; sub = (sub - 1) & f) {
        table[sub] = 1;
        if (sub == 0) break;
      }
    return table;
  }

  /// All faces, ascending by mask.
  std::vector<Face> faces() const {
    std::vector<Face> out;
    if (void_) return out;
    const auto table = face_table();
    for (std::size_t s = 0; s < table.size(); ++s)
      if (table[s]) out.push_back(static_cast<Face>(s));
    return out;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  bool void_ = true;
  std::vector<Face> facets_;  // antichain, ascending
};

/// "[{1,2},{2,3}]", or "void" / "{∅}".
inline std::string to_string(const SimplicialComplex& c) {
  if (c.is_void()) return "void";
  if (c.is_empty_complex()) return "{∅}";
  std::string s = "[";
  for (std::size_t i = 0; i < c.facets().size(); ++i) {
    if (i) s += ",";
    s += face_to_string(c.facets()[i]);
  }
  return s + "]";
}

inline int dimension(const SimplicialComplex& c) { return c.dimension(); }
inline bool is_pure(const SimplicialComplex& c) { return c.is_pure(); }
inline Face vertex_set(const SimplicialComplex& c) { return c.vertex_set(); }

/// Inclusion-minimal subsets of {1..n} that are not faces.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
  if (c.is_void()) return {0};
  const auto table = c.face_table();
  std::vector<Face> out;
  for (std::size_t s = 1; s < table.size(); ++s) {
    if (table[s]) continue;
    bool minimal = true;
    for (Face rest = static_cast<Face>(s); rest != 0; rest &= rest - 1)
      if (!table[s & ~(rest & -rest)]) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(static_cast<Face>(s));
  }
  return out;
}

inline void require_face(const SimplicialComplex& c, Face g) {
  if (c.is_void() || !c.contains(g))
    throw std::invalid_argument(face_to_string(g) + " is not a face of " + to_string(c));
}

/// lk(G) = {F \ G : G ⊆ F ∈ Δ}, same ambient range.
inline SimplicialComplex link(const SimplicialComplex& c, Face g) {
  require_face(c, g);
  std::vector<Face> gens;
  for (Face f : c.facets())
    if (is_subset(g, f)) gens.push_back(f & ~g);
  return SimplicialComplex::from_facets(c.ambient_size(), std::move(gens));
}

/// st(G) = {F ∈ Δ : F ∪ G ∈ Δ}, generated by the facets containing G.
inline SimplicialComplex star(const SimplicialComplex& c, Face g) {
  require_face(c, g);
  std::vector<Face> gens;
  for (Face f : c.facets())
    if (is_subset(g, f)) gens.push_back(f);
  return SimplicialComplex::from_facets(c.ambient_size(), std::move(gens));
}

/// Connected components of the 1-skeleton on V(Δ), as vertex masks (ascending).
inline std::vector<Face> connected_components(const SimplicialComplex& c) {
  std::vector<Face> comps;
  for (Face f : c.facets()) {
    if (f == 0) continue;
    Face merged = f;
    std::vector<Face> keep;
    for (Face comp : comps) {
      if (comp & merged)
        merged |= comp;
      else
        keep.push_back(comp);
    }
    keep.push_back(merged);
    comps = std::move(keep);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

inline bool is_connected(const SimplicialComplex& c) {
  if (c.is_void() || c.dimension() < 0)
    throw std::domain_error("connectivity needs a complex with at least one vertex");
  return connected_components(c).size() == 1;
}

/// Faces of Δ contained in W.
inline SimplicialComplex induced(const SimplicialComplex& c, Face w) {
  if (c.is_void()) return c;
  std::vector<Face> gens;
  for (Face f : c.facets()) gens.push_back(f & w);
  return SimplicialComplex::from_facets(c.ambient_size(), std::move(gens));
}

/// Join of complexes on disjoint vertex sets; ambient size is the larger one.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int n = std::max(a.ambient_size(), b.ambient_size());
  if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(n);
  if (a.vertex_set() & b.vertex_set())
    throw std::invalid_argument("join needs disjoint vertex sets: " + to_string(a) + " and " +
                                to_string(b));
  std::vector<Face> gens;
  for (Face f : a.facets())
    for (Face g : b.facets()) gens.push_back(f | g);
  return SimplicialComplex::from_facets(n, std::move(gens));
}

/// Δ^c: generated by the complements of the facets in {1..n}.
inline SimplicialComplex complement_complex(const SimplicialComplex& c) {
  if (c.is_void()) return c;
  std::vector<Face> gens;
  for (Face f : c.facets()) gens.push_back(full_face(c.ambient_size()) & ~f);
  return SimplicialComplex::from_facets(c.ambient_size(), std::move(gens));
}

/// Places `b` on fresh labels after `a`'s ambient range.
inline SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int shift = a.ambient_size();
  const int n = shift + b.ambient_size();
  check_ambient(n);
  std::vector<Face> gens = a.is_void() ? std::vector<Face>{} : a.facets();
  if (!b.is_void())
    for (Face f : b.facets()) gens.push_back(f << shift);
  if (a.is_void() && b.is_void()) return SimplicialComplex::void_complex(n);
  return SimplicialComplex::from_facets(n, std::move(gens));
}

/// Join after relabeling `b` onto fresh labels.
inline SimplicialComplex join_disjoint(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int shift = a.ambient_size();
  const int n = shift + b.ambient_size();
  check_ambient(n);
  if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(n);
  std::vector<Face> gens;
  for (Face f : a.facets())
    for (Face g : b.facets()) gens.push_back(f | (g << shift));
  return SimplicialComplex::from_facets(n, std::move(gens));
}

// ---------------------------------------------------------------------------
// Named complexes

/// All subsets of {1..n} of size k, ascending.
inline std::vector<Face> subsets_of_size(int n, int k) {
  std::vector<Face> out;
  for (Face s = 0; s <= full_face(n); ++s) {
    if (face_size(s) == k) out.push_back(s);
    if (s == full_face(n)) break;
  }
  return out;
}

inline SimplicialComplex simplex(int n) {
  if (n < 1) throw std::invalid_argument("simplex needs n >= 1");
  return SimplicialComplex::from_facets(n, {full_face(n)});
}

/// Facets: all (r+1)-subsets of {1..n}.
inline SimplicialComplex uniform_matroid(int n, int r) {
  if (n < 1 || r < 0 || r >= n)
    throw std::invalid_argument("uniform_matroid needs 0 <= r < n, got n=" + std::to_string(n) +
                                " r=" + std::to_string(r));
  check_ambient(n);
  return SimplicialComplex::from_facets(n, subsets_of_size(n, r + 1));
}

inline SimplicialComplex complete_graph(int k) {
  if (k < 2) throw std::invalid_argument("complete graph needs k >= 2");
  return uniform_matroid(k, 1);
}

inline SimplicialComplex cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
  check_ambient(k);
  std::vector<Face> edges;
  for (int i = 1; i <= k; ++i) edges.push_back(vertex_bit(i) | vertex_bit(i % k + 1));
  return SimplicialComplex::from_facets(k, std::move(edges));
}

/// Path on k vertices 1-2-...-k.
inline SimplicialComplex path(int k) {
  if (k < 2) throw std::invalid_argument("path needs k >= 2");
  check_ambient(k);
  std::vector<Face> edges;
  for (int i = 1; i < k; ++i) edges.push_back(vertex_bit(i) | vertex_bit(i + 1));
  return SimplicialComplex::from_facets(k, std::move(edges));
}

}  // namespace srpl
