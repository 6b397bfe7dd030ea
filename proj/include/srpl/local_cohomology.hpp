#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "srpl/budget.hpp"
#include "srpl/cohomology.hpp"
#include "srpl/monomial.hpp"

namespace srpl {

/// A degree a ∈ Z^n of the local cohomology of S/I.
struct DegreeVector {
  Exponents a;

  /// G_a = {i : a_i < 0}.
  Face negative_support() const {
    Face g = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] < 0) g |= vertex_bit(static_cast<int>(i) + 1);
    return g;
  }
};

/// Δ_a = {F \ G_a : G_a ⊆ F ⊆ [n], x^a ∉ I·S[x_i^{-1} : i ∈ F]}.
///
/// x^a lies in the localization at F exactly when some generator u has
/// {j : u_j > a_j} ⊆ F, so those sets are the obstructions.
inline SimplicialComplex degree_complex(const MonomialIdeal& I, const DegreeVector& deg) {
  const int n = I.ambient_size();
  if (static_cast<int>(deg.a.size()) != n)
    throw std::invalid_argument("degree vector length does not match ambient size");
  if (I.is_unit()) throw std::invalid_argument("degree complex of the unit ideal");
  const Face neg = deg.negative_support();
  std::vector<Face> blockers;
  blockers.reserve(I.generators().size());
  for (const auto& u : I.generators()) {
    Face b = 0;
    for (int j = 0; j < n; ++j)
      if (u[j] > deg.a[j]) b |= vertex_bit(j + 1);
    blockers.push_back(b & ~neg);  // G_a ⊆ F always
  }
  for (int v : face_labels(neg)) blockers.push_back(vertex_bit(v));  // faces live on [n] \ G_a
  blockers = minimal_elements(std::move(blockers));
  if (std::find(blockers.begin(), blockers.end(), Face{0}) != blockers.end())
    return SimplicialComplex::void_complex(n);
  return SimplicialComplex::from_nonfaces(n, blockers);
}

namespace detail {

struct FacetsHash {
  std::size_t operator()(const std::vector<Face>& v) const {
    std::size_t h = v.size();
    for (Face f : v) h = h * 0x9E3779B97F4A7C15ull + f;
    return h;
  }
};

/// Cohomology memo; the same small complexes recur across degrees.
inline const CohomologyDims& cached_cohomology(const SimplicialComplex& c, const Field& field) {
  thread_local std::unordered_map<std::vector<Face>, CohomologyDims, FacetsHash> cache[2];
  thread_local std::uint32_t cached_char = 0;
  auto& table = cache[field.is_rational() ? 0 : 1];
  if (!field.is_rational() && cached_char != field.characteristic()) {
    table.clear();
    cached_char = field.characteristic();
  }
  if (table.size() > 200000) table.clear();
  auto it = table.find(c.facets());
  if (it == table.end()) it = table.emplace(c.facets(), reduced_cohomology_dims(c, field)).first;
  return it->second;
}

}  // namespace detail

/// H^i_m(S/I) ≠ 0 witnessed at degree a.
struct Witness {
  int index;           // i
  Exponents degree;    // a
  std::size_t dimension;  // dim_K [H^i_m(S/I)]_a
};

struct DepthReport {
  int depth = 0;
  int dim = 0;
  bool is_cm = false;
  std::vector<Witness> witnesses;  // one per i < dim with H^i_m ≠ 0
};

struct OracleOptions {
  Field field = Field::rationals();
  Deadline deadline;
};

namespace detail {

/// Scans the degrees a with a_i ∈ {-1, ..., ρ_i - 1}. Outside this box the
/// graded pieces vanish, and every negative coordinate gives the same Δ_a.
/// [H^i_m(S/I)]_a ≅ H̃^{i-|G_a|-1}(Δ_a).
///
/// Stops early once an index below `stop_below` is found.
inline int scan_local_cohomology(const MonomialIdeal& I, const OracleOptions& opt, int dim,
                                 int stop_below, std::vector<Witness>* witnesses) {
  const int n = I.ambient_size();
  std::vector<int> lo(n, -1), hi(n);
  for (int i = 0; i < n; ++i) hi[i] = I.max_exponent(i) - 1;
  DegreeVector deg{lo};
  int lowest = dim;
  std::vector<bool> have(static_cast<std::size_t>(dim) + 1, false);
  std::size_t steps = 0;
  while (true) {
    if ((++steps & 255) == 0) opt.deadline.check("local cohomology scan");
    const SimplicialComplex delta = degree_complex(I, deg);
    if (!delta.is_void()) {
      const auto& h = cached_cohomology(delta, opt.field);
      const int shift = face_size(deg.negative_support()) + 1;
      for (std::size_t k = 0; k < h.dims.size(); ++k) {
        if (h.dims[k] == 0) continue;
        const int index = static_cast<int>(k) - 1 + shift;
        if (index < lowest) lowest = index;
        if (witnesses && index < dim && !have[index]) {
          have[index] = true;
          witnesses->push_back({index, deg.a, h.dims[k]});
        }
      }
      if (lowest < stop_below) return lowest;
    }
    int i = 0;
    while (i < n && deg.a[i] == hi[i]) {
      deg.a[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++deg.a[i];
  }
  return lowest;
}

}  // namespace detail

/// Krull dimension of S/I: dim of the complex of √I plus one.
inline int krull_dimension(const MonomialIdeal& I) {
  return dimension(complex_of_radical(I)) + 1;
}

inline DepthReport depth_dim(const MonomialIdeal& I, const OracleOptions& opt = {}) {
  if (I.is_unit()) throw std::invalid_argument("depth of the unit ideal");
  DepthReport r;
  r.dim = krull_dimension(I);
  if (I.is_zero()) {
    r.depth = r.dim;
    r.is_cm = true;
    return r;
  }
  r.depth = detail::scan_local_cohomology(I, opt, r.dim, -1, &r.witnesses);
  std::sort(r.witnesses.begin(), r.witnesses.end(),
            [](const Witness& a, const Witness& b) { return a.index < b.index; });
  r.is_cm = r.depth == r.dim;
  return r;
}

inline bool is_cm(const MonomialIdeal& I, const OracleOptions& opt = {}) {
  if (I.is_unit()) throw std::invalid_argument("is_cm of the unit ideal");
  if (I.is_zero()) return true;
  const int dim = krull_dimension(I);
  return detail::scan_local_cohomology(I, opt, dim, dim, nullptr) >= dim;
}

inline bool is_equidimensional(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("is_equidimensional of the unit ideal");
  return complex_of_radical(I).is_pure();
}

/// depth ≥ min(2, dim) for S/I.
inline bool depth_at_least_min2(const MonomialIdeal& I, const OracleOptions& opt) {
  if (I.is_zero()) return true;
  const int dim = krull_dimension(I);
  const int need = std::min(2, dim);
  if (need <= 0) return true;
  return detail::scan_local_cohomology(I, opt, dim, need, nullptr) >= need;
}

/// Serre's (S2): depth (S/I)_P ≥ min(2, dim (S/I)_P) at every monomial prime
/// P_W ⊇ I, computed on the contraction of I to the variables of W.
inline bool is_s2(const MonomialIdeal& I, const OracleOptions& opt = {}) {
  if (I.is_unit()) throw std::invalid_argument("is_s2 of the unit ideal");
  const int n = I.ambient_size();
  std::map<std::pair<int, std::vector<Exponents>>, bool> memo;
  for (Face w = 0;; ++w) {
    const auto local = contract(I, full_face(n) & ~w).ideal;
    if (!local.is_unit()) {
      const auto key = std::pair{local.ambient_size(), local.generators()};
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, depth_at_least_min2(local, opt)).first;
      if (!it->second) return false;
    }
    if (w == full_face(n)) break;
  }
  return true;
}

/// Equidimensional and I·S[x_i^{-1}] Cohen–Macaulay for every i.
inline bool is_generalized_cm(const MonomialIdeal& I, const OracleOptions& opt = {}) {
  if (I.is_unit()) throw std::invalid_argument("is_generalized_cm of the unit ideal");
  if (!is_equidimensional(I)) return false;
  for (int i = 1; i <= I.ambient_size(); ++i) {
    const auto local = contract(I, vertex_bit(i)).ideal;
    if (local.is_unit()) continue;
    if (!is_cm(local, opt)) return false;
  }
  return true;
}

/// The m-th ordinary or symbolic power of I_Δ.
inline MonomialIdeal sr_power(const SimplicialComplex& c, int m, PowerKind kind) {
  return kind == PowerKind::ordinary ? power(sr_ideal(c), m) : symbolic_power(c, m);
}

/// For m ≥ 2, Δ_e = Δ_0 = Δ for every unit vector e, where the ideal is the
/// m-th power of I_Δ of the given kind.
inline bool qb_connectivity_consequence(const SimplicialComplex& c, int m, PowerKind kind) {
  if (m < 2) throw std::invalid_argument("the connectivity consequence needs m >= 2");
  const MonomialIdeal I = sr_power(c, m, kind);
  const int n = c.ambient_size();
  const SimplicialComplex base = degree_complex(I, {Exponents(n, 0)});
  if (base != complex_of_radical(I) || base != c) return false;
  for (int j = 0; j < n; ++j) {
    Exponents e(n, 0);
    e[j] = 1;
    if (degree_complex(I, {e}) != base) return false;
  }
  return true;
}

}  // namespace srpl
