#pragma once

// Slow, direct implementations used as test oracles. They share no code with
// the library beyond the data types.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "srpl/complex.hpp"
#include "srpl/monomial.hpp"

namespace brute {

using srpl::Exponents;
using srpl::Face;
using srpl::SimplicialComplex;

inline int popcount(Face f) { return __builtin_popcount(f); }

inline std::vector<Face> all_faces(const SimplicialComplex& c) {
  std::vector<Face> out;
  if (c.is_void()) return out;
  const Face top = (Face{1} << c.ambient_size()) - 1;
  for (Face s = 0; s <= top; ++s) {
    for (Face f : c.facets())
      if ((s & ~f) == 0) {
        out.push_back(s);
        break;
      }
    if (s == top) break;
  }
  return out;
}

inline bool has(const std::vector<Face>& faces, Face f) {
  return std::find(faces.begin(), faces.end(), f) != faces.end();
}

/// Independent-set exchange over every pair |F| > |G|.
inline bool is_matroid(const SimplicialComplex& c) {
  const auto faces = all_faces(c);
  for (Face f : faces)
    for (Face g : faces) {
      if (popcount(f) <= popcount(g)) continue;
      bool ok = false;
      for (int v = 0; v < c.ambient_size() && !ok; ++v) {
        const Face b = Face{1} << v;
        if ((f & b) && !(g & b) && has(faces, g | b)) ok = true;
      }
      if (!ok) return false;
    }
  return true;
}

inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
  const auto faces = all_faces(c);
  std::vector<Face> out;
  const Face top = (Face{1} << c.ambient_size()) - 1;
  for (Face s = 0; s <= top; ++s) {
    if (!has(faces, s)) {
      bool minimal = true;
      for (int v = 0; v < c.ambient_size(); ++v)
        if ((s >> v & 1) && !has(faces, s & ~(Face{1} << v))) minimal = false;
      if (minimal) out.push_back(s);
    }
    if (s == top) break;
  }
  return out;
}

/// Connected components of the 1-skeleton over the vertex set, by flood fill.
inline int component_count(const SimplicialComplex& c) {
  const auto faces = all_faces(c);
  std::vector<int> verts;
  for (int v = 0; v < c.ambient_size(); ++v)
    if (has(faces, Face{1} << v)) verts.push_back(v);
  std::set<int> seen;
  int count = 0;
  for (int s : verts) {
    if (seen.count(s)) continue;
    ++count;
    std::vector<int> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : verts)
        if (!seen.count(w) && has(faces, (Face{1} << u) | (Face{1} << w))) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
  }
  return count;
}

inline bool divides(const Exponents& u, const Exponents& a) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > a[i]) return false;
  return true;
}

inline bool member(const Exponents& a, const std::vector<Exponents>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exponents& g) { return divides(g, a); });
}

/// Every monomial with exponents in {0..top}^n, in lex order of the odometer.
template <typename F>
void for_each_monomial(int n, int top, F&& f) {
  Exponents a(n, 0);
  while (true) {
    f(a);
    int i = 0;
    while (i < n && a[i] == top) a[i++] = 0;
    if (i == n) return;
    ++a[i];
  }
}

/// Minimal elements of the set of monomials in {0..top}^n satisfying `in`.
template <typename Pred>
std::set<Exponents> minimal_monomials(int n, int top, Pred&& in) {
  std::vector<Exponents> hits;
  for_each_monomial(n, top, [&](const Exponents& a) {
    if (in(a)) hits.push_back(a);
  });
  std::set<Exponents> out;
  for (const auto& a : hits) {
    bool minimal = true;
    for (const auto& b : hits)
      if (b != a && divides(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.insert(a);
  }
  return out;
}

inline std::set<Exponents> gens_set(const srpl::MonomialIdeal& I) {
  return {I.generators().begin(), I.generators().end()};
}

/// x^a ∈ P_W^m iff Σ_{i∈W} a_i ≥ m.
inline bool in_prime_power(const Exponents& a, Face w, int m) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (w >> i & 1) s += a[i];
  return s >= m;
}

/// Minimal vertex covers of a hypergraph given by its edges.
inline std::vector<Face> minimal_covers(int n, const std::vector<Face>& edges) {
  std::vector<Face> covers;
  const Face top = (Face{1} << n) - 1;
  for (Face s = 0; s <= top; ++s) {
    if (std::all_of(edges.begin(), edges.end(), [&](Face e) { return (e & s) != 0; })) covers.push_back(s);
    if (s == top) break;
  }
  std::vector<Face> out;
  for (Face s : covers)
    if (std::none_of(covers.begin(), covers.end(), [&](Face t) { return t != s && (t & ~s) == 0; }))
      out.push_back(s);
  return out;
}

}  // namespace brute
