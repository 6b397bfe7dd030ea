#pragma once

#include "srpl/cohomology.hpp"
#include "srpl/local_cohomology.hpp"

namespace srpl {

/// Reisner's criterion: Δ is Cohen–Macaulay iff H̃^i(lk F) = 0 for all faces F
/// and all i < dim lk F. Uses only links and simplicial cohomology.
inline bool reisner_is_cm(const SimplicialComplex& c, const Field& field = Field::rationals()) {
  if (c.is_void()) throw std::invalid_argument("reisner_is_cm of the void complex");
  for (Face f : c.faces()) {
    const auto lk = link(c, f);
    const int d = lk.dimension();
    const auto h = reduced_cohomology_dims(lk, field);
    for (int i = -1; i < d; ++i)
      if (h.at(i) != 0) return false;
  }
  return true;
}

/// Degree vector with a_i = -1 on G and 0 elsewhere.
inline Exponents negative_indicator(int n, Face g) {
  Exponents a(n, 0);
  for (int v : face_labels(g)) a[v - 1] = -1;
  return a;
}

/// Hochster's consistency for a ∈ {-1,0}^n: Δ_a(I_Δ) = lk_Δ(G_a) if G_a ∈ Δ,
/// void otherwise. Returns the first G that disagrees.
inline std::optional<Face> hochster_degree_complex_mismatch(const SimplicialComplex& c) {
  const MonomialIdeal I = sr_ideal(c);
  const int n = c.ambient_size();
  for (Face g = 0;; ++g) {
    const auto delta = degree_complex(I, {negative_indicator(n, g)});
    const auto expected = c.contains(g) ? link(c, g) : SimplicialComplex::void_complex(n);
    if (delta != expected) return g;
    if (g == full_face(n)) break;
  }
  return std::nullopt;
}

}  // namespace srpl
