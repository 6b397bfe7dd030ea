#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srpl/complex.hpp"

namespace srpl {

/// A pair of faces F, G with |F| > |G| such that no vertex of F \ G extends G.
struct ExchangeViolation {
  Face larger;
  Face smaller;
};

namespace detail {

inline std::vector<std::vector<Face>> faces_by_size(const SimplicialComplex& c,
                                                    const std::vector<std::uint8_t>& table) {
  std::vector<std::vector<Face>> by_size(c.ambient_size() + 1);
  for (std::size_t s = 0; s < table.size(); ++s)
    if (table[s]) by_size[face_size(static_cast<Face>(s))].push_back(static_cast<Face>(s));
  return by_size;
}

}  // namespace detail

/// Exchange axiom: for faces F, G with |F| > |G| some i ∈ F \ G has G ∪ {i} ∈ Δ.
/// Only |F| = |G| + 1 needs scanning, since any larger F contains such a face.
inline std::optional<ExchangeViolation> find_exchange_violation(const SimplicialComplex& c) {
  if (c.is_void()) return std::nullopt;
  const auto table = c.face_table();
  const auto by_size = detail::faces_by_size(c, table);
  for (std::size_t k = 0; k + 1 < by_size.size(); ++k) {
    for (Face g : by_size[k]) {
      Face extenders = 0;
      for (Face rest = c.vertex_set() & ~g; rest != 0; rest &= rest - 1) {
        const Face bit = rest & -rest;
        if (table[g | bit]) extenders |= bit;
      }
      for (Face f : by_size[k + 1])
        if ((f & ~g & extenders) == 0) return ExchangeViolation{f, g};
    }
  }
  return std::nullopt;
}

inline bool is_matroid_exchange(const SimplicialComplex& c) {
  return !find_exchange_violation(c).has_value();
}

/// Pair criterion: for faces F, G with |F \ G| = 1 and |G \ F| = 2 some
/// i ∈ G \ F has F ∪ {i} ∈ Δ.
inline bool is_matroid_pair(const SimplicialComplex& c) {
  if (c.is_void()) return true;
  const auto table = c.face_table();
  const auto faces = c.faces();
  for (Face f : faces)
    for (Face g : faces) {
      const Face only_f = f & ~g;
      const Face only_g = g & ~f;
      if (face_size(only_f) != 1 || face_size(only_g) != 2) continue;
      bool extended = false;
      for (Face rest = only_g; rest != 0; rest &= rest - 1)
        if (table[f | (rest & -rest)]) {
          extended = true;
          break;
        }
      if (!extended) return false;
    }
  return true;
}

inline void require_graph(const SimplicialComplex& g) {
  if (g.is_void() || g.dimension() != 1 || !g.is_pure())
    throw std::invalid_argument("expected a graph (pure 1-dimensional complex), got " +
                                to_string(g));
}

/// Every pair of disjoint edges lies in a 4-cycle of the graph.
inline bool graph_matroid_criterion(const SimplicialComplex& g) {
  require_graph(g);
  const auto& edges = g.facets();
  auto edge = [&](int a, int b) { return g.contains(vertex_bit(a) | vertex_bit(b)); };
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i] & edges[j]) continue;
      const auto e = face_labels(edges[i]);
      const auto f = face_labels(edges[j]);
      // 4-cycles through both edges: e0-e1-f?-f?-e0
      const bool cyc = (edge(e[1], f[0]) && edge(f[1], e[0])) ||
                       (edge(e[1], f[1]) && edge(f[0], e[0]));
      if (!cyc) return false;
    }
  return true;
}

/// Minimal nonfaces pairwise disjoint.
inline bool is_complete_intersection(const SimplicialComplex& c) {
  const auto nonfaces = minimal_nonfaces(c);
  Face seen = 0;
  for (Face h : nonfaces) {
    if (seen & h) return false;
    seen |= h;
  }
  return true;
}

/// Two minimal nonfaces sharing a vertex, if any.
inline std::optional<std::pair<Face, Face>> find_overlapping_nonfaces(const SimplicialComplex& c) {
  const auto nonfaces = minimal_nonfaces(c);
  for (std::size_t i = 0; i < nonfaces.size(); ++i)
    for (std::size_t j = i + 1; j < nonfaces.size(); ++j)
      if (nonfaces[i] & nonfaces[j]) return std::pair{nonfaces[i], nonfaces[j]};
  return std::nullopt;
}

/// First vertex of V(Δ) whose link fails `pred`, if any.
template <typename Pred>
std::optional<int> find_bad_vertex_link(const SimplicialComplex& c, Pred pred) {
  for (int v : face_labels(c.vertex_set()))
    if (!pred(link(c, vertex_bit(v)))) return v;
  return std::nullopt;
}

inline bool is_locally_matroid(const SimplicialComplex& c) {
  return !find_bad_vertex_link(c, [](const SimplicialComplex& l) { return is_matroid_exchange(l); });
}

inline bool is_locally_ci(const SimplicialComplex& c) {
  return !find_bad_vertex_link(c, [](const SimplicialComplex& l) { return is_complete_intersection(l); });
}

/// Outcome of splitting Δ into connected components that should each be matroids.
struct ComponentSplit {
  std::vector<SimplicialComplex> components;
  /// Index into `components` of the first non-matroid, or the reason for failure.
  std::optional<std::size_t> failed_component;
  bool not_pure = false;

  bool ok() const { return !failed_component && !not_pure; }
};

inline std::vector<SimplicialComplex> component_complexes(const SimplicialComplex& c) {
  std::vector<SimplicialComplex> out;
  for (Face comp : connected_components(c)) out.push_back(induced(c, comp));
  return out;
}

/// Connected components of Δ, reported as a failure unless Δ is pure and
/// every component satisfies the exchange axiom.
inline ComponentSplit matroid_components(const SimplicialComplex& c) {
  ComponentSplit split;
  split.components = component_complexes(c);
  split.not_pure = !c.is_pure();
  for (std::size_t i = 0; i < split.components.size(); ++i)
    if (!is_matroid_exchange(split.components[i])) {
      split.failed_component = i;
      break;
    }
  return split;
}

/// True iff Δ is pure and each connected component is a complete intersection.
/// Singleton nonfaces outside a component never overlap anything, so each
/// component can be tested on the full ambient range.
inline bool is_disjoint_union_of_ci(const SimplicialComplex& c) {
  if (!c.is_pure()) return false;
  for (const auto& comp : component_complexes(c))
    if (!is_complete_intersection(comp)) return false;
  return true;
}

/// Restricts `c` to its own vertex set by relabeling onto 1..|V(Δ)|.
inline SimplicialComplex compress_to_vertex_set(const SimplicialComplex& c) {
  const auto labels = face_labels(c.vertex_set());
  const int k = static_cast<int>(labels.size());
  if (c.is_void()) return SimplicialComplex::void_complex(k);
  std::vector<Face> gens;
  for (Face f : c.facets()) {
    Face g = 0;
    for (int i = 0; i < k; ++i)
      if (contains_vertex(f, labels[i])) g |= vertex_bit(i + 1);
    gens.push_back(g);
  }
  return SimplicialComplex::from_facets(k, std::move(gens));
}

// ---------------------------------------------------------------------------
// Join decomposition for matroids whose minimal nonfaces all have 3 elements.

enum class FactorKind { uniform1, simplex };

struct JoinFactor {
  FactorKind kind;
  SimplicialComplex complex;
};

namespace detail {

inline bool is_one_uniform_on(const SimplicialComplex& c, Face v) {
  if (face_size(v) < 2) return false;
  for (Face f : c.facets())
    if (face_size(f) != 2) return false;
  return c.facets().size() ==
         static_cast<std::size_t>(face_size(v)) * static_cast<std::size_t>(face_size(v) - 1) / 2;
}

}  // namespace detail

/// Splits Δ into a join of 1-uniform matroids and possibly a simplex, peeling
/// off Γ = Δ restricted to V(Δ) \ V(lk F) for the smallest edge F inside a
/// minimal nonface and recursing on lk F.
inline std::vector<JoinFactor> join_decomposition(const SimplicialComplex& c) {
  if (c.is_void()) throw std::invalid_argument("join_decomposition: void complex");
  const auto nonfaces = minimal_nonfaces(c);
  const Face vertices = c.vertex_set();
  std::vector<Face> own_nonfaces;
  for (Face h : nonfaces)
    if (is_subset(h, vertices)) own_nonfaces.push_back(h);
  for (Face h : own_nonfaces)
    if (face_size(h) != 3)
      throw std::invalid_argument("join_decomposition: minimal nonface " + face_to_string(h) +
                                  " does not have 3 elements");
  if (!is_matroid_exchange(c))
    throw std::invalid_argument("join_decomposition: " + to_string(c) + " is not a matroid");

  std::vector<JoinFactor> factors;
  SimplicialComplex current = c;
  while (true) {
    const Face v = current.vertex_set();
    std::vector<Face> local;
    for (Face h : minimal_nonfaces(current))
      if (is_subset(h, v)) local.push_back(h);
    if (local.empty()) {
      if (v != 0) factors.push_back({FactorKind::simplex, current});
      break;
    }
    if (current.dimension() == 1) {
      if (!detail::is_one_uniform_on(current, v))
        throw std::logic_error("join_decomposition: 1-dimensional factor is not 1-uniform");
      factors.push_back({FactorKind::uniform1, current});
      break;
    }
    // smallest edge contained in a minimal nonface
    Face edge = 0;
    for (Face h : local)
      for (Face rest = h; rest != 0; rest &= rest - 1) {
        const Face e = h & ~(rest & -rest);
        if (edge == 0 || e < edge) edge = e;
      }
    const SimplicialComplex rest_link = link(current, edge);
    const SimplicialComplex gamma = induced(current, v & ~rest_link.vertex_set());
    if (join(rest_link, gamma) != current)
      throw std::logic_error("join_decomposition: Δ ≠ lk F * Γ for F = " + face_to_string(edge));
    if (!detail::is_one_uniform_on(gamma, gamma.vertex_set()))
      throw std::logic_error("join_decomposition: peeled factor is not 1-uniform");
    factors.push_back({FactorKind::uniform1, gamma});
    current = rest_link;
  }
  return factors;
}

/// Joins the factors back together.
inline SimplicialComplex rejoin(int n, const std::vector<JoinFactor>& factors) {
  SimplicialComplex acc = SimplicialComplex::empty(n);
  for (const auto& f : factors) acc = join(acc, f.complex);
  return acc;
}

/// For a minimal nonface H, whether all maximal proper subsets of H have the same link.
inline bool shared_link_check(const SimplicialComplex& c, Face h) {
  const auto nonfaces = minimal_nonfaces(c);
  if (std::find(nonfaces.begin(), nonfaces.end(), h) == nonfaces.end())
    throw std::invalid_argument(face_to_string(h) + " is not a minimal nonface");
  std::optional<SimplicialComplex> first;
  for (Face rest = h; rest != 0; rest &= rest - 1) {
    const auto l = link(c, h & ~(rest & -rest));
    if (!first)
      first = l;
    else if (l != *first)
      return false;
  }
  return true;
}

/// Each connected component is an r-uniform matroid on its vertex set
/// (all (r+1)-subsets of the component's vertices).
inline bool is_disjoint_union_of_uniform(const SimplicialComplex& c, int r) {
  if (c.is_void()) return false;
  for (Face comp : connected_components(c)) {
    const int k = face_size(comp);
    if (k < r + 1) return false;
    for (Face f : c.facets())
      if ((f & comp) && face_size(f) != r + 1) return false;
    std::size_t count = 0;
    for (Face f : c.facets())
      if (f & comp) ++count;
    // C(k, r+1)
    std::size_t binom = 1;
    for (int i = 0; i < r + 1; ++i) binom = binom * static_cast<std::size_t>(k - i) / static_cast<std::size_t>(i + 1);
    if (count != binom) return false;
  }
  return true;
}

}  // namespace srpl
