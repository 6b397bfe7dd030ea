#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srpl/local_cohomology.hpp"
#include "srpl/matroid.hpp"

namespace srpl {

enum class IdealKind { stanley_reisner, facet, cover };
enum class Property { cm, s2, gcm, buchsbaum, quasi_buchsbaum };
enum class Verdict { holds, fails, oracle_only };

inline const char* to_string(IdealKind k) {
  switch (k) {
    case IdealKind::stanley_reisner: return "stanley-reisner";
    case IdealKind::facet: return "facet";
    case IdealKind::cover: return "cover";
  }
  return "?";
}

inline const char* to_string(Property p) {
  switch (p) {
    case Property::cm: return "cm";
    case Property::s2: return "s2";
    case Property::gcm: return "gcm";
    case Property::buchsbaum: return "buchsbaum";
    case Property::quasi_buchsbaum: return "quasi-buchsbaum";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::oracle_only: return "oracle_only";
  }
  return "?";
}

/// Does the `m`-th power (or every power, when m is empty) of the chosen ideal
/// of `complex` have `property`?
struct Query {
  SimplicialComplex complex;
  IdealKind ideal_kind = IdealKind::stanley_reisner;
  PowerKind power_kind = PowerKind::symbolic;
  Property property = Property::cm;
  std::optional<int> m;  // empty means "all m"
};

struct OracleSection {
  bool ran = false;
  std::optional<bool> result;
  double seconds = 0;
};

struct ClassificationReport {
  Verdict verdict = Verdict::oracle_only;
  /// Name of the characterization that decided the verdict, or "none".
  std::string theorem = "none";
  /// Combinatorial evidence (failing exchange pair, overlapping nonfaces, ...).
  std::string witness;
  std::vector<std::string> notes;
  OracleSection oracle;
};

// Tags for the characterizations the engine applies. Each names the power,
// the property, and the combinatorial condition it is equivalent to (m ≥ 3).
namespace theorem {
inline constexpr const char* symbolic_cm = "symbolic-cm-s2-iff-matroid";
inline constexpr const char* symbolic_gcm = "symbolic-gcm-iff-disjoint-equidimensional-matroids";
inline constexpr const char* symbolic_gcm_graph = "symbolic-gcm-for-pure-graphs";
inline constexpr const char* symbolic_bbm = "symbolic-buchsbaum-iff-matroid";
inline constexpr const char* ordinary_cm = "ordinary-cm-s2-iff-complete-intersection";
inline constexpr const char* ordinary_gcm_graph = "ordinary-gcm-graph-iff-paths-and-cycles";
inline constexpr const char* ordinary_gcm = "ordinary-gcm-iff-disjoint-equidimensional-ci";
inline constexpr const char* ordinary_bbm_graph = "ordinary-buchsbaum-graph-m4-iff-ci";
inline constexpr const char* ordinary_bbm = "ordinary-buchsbaum-iff-ci";
inline constexpr const char* gcm_needs_pure = "generalized-cm-needs-equidimensional";
inline constexpr const char* facet_graph = "facet-graph-cm-iff-disjoint-complete-graphs";
inline constexpr const char* facet_2dim = "facet-2dim-cm-iff-disjoint-2-uniform-matroids";
inline constexpr const char* facet_dual = "facet-cm-iff-dual-complex-matroid";
inline constexpr const char* cover_cm = "cover-cm-iff-matroid";
}  // namespace theorem

namespace detail {

inline std::string describe(const ExchangeViolation& v) {
  return "exchange fails: F=" + face_to_string(v.larger) + " G=" + face_to_string(v.smaller);
}

inline void decide_matroid(ClassificationReport& r, const SimplicialComplex& c, const char* tag) {
  r.theorem = tag;
  if (auto v = find_exchange_violation(c)) {
    r.verdict = Verdict::fails;
    r.witness = "not a matroid; " + describe(*v);
  } else {
    r.verdict = Verdict::holds;
    r.witness = "matroid";
  }
}

inline void decide_ci(ClassificationReport& r, const SimplicialComplex& c, const char* tag) {
  r.theorem = tag;
  if (auto p = find_overlapping_nonfaces(c)) {
    r.verdict = Verdict::fails;
    r.witness = "not a complete intersection; minimal nonfaces " + face_to_string(p->first) +
                " and " + face_to_string(p->second) + " overlap";
  } else {
    r.verdict = Verdict::holds;
    r.witness = "complete intersection";
  }
}

inline void decide(ClassificationReport& r, bool ok, const char* tag, std::string yes, std::string no) {
  r.theorem = tag;
  r.verdict = ok ? Verdict::holds : Verdict::fails;
  r.witness = ok ? std::move(yes) : std::move(no);
}

inline int max_vertex_degree(const SimplicialComplex& g) {
  int best = 0;
  for (int v : face_labels(g.vertex_set())) {
    int deg = 0;
    for (Face e : g.facets())
      if (contains_vertex(e, v)) ++deg;
    best = std::max(best, deg);
  }
  return best;
}

inline void classify_sr_symbolic(ClassificationReport& r, const Query& q, int dim) {
  const auto& c = q.complex;
  switch (q.property) {
    case Property::cm:
      if (dim >= 1) decide_matroid(r, c, theorem::symbolic_cm);
      return;
    case Property::s2:
      if (dim >= 2) decide_matroid(r, c, theorem::symbolic_cm);
      else r.notes.push_back("(S2) for 1-dimensional complexes is left to the oracle");
      return;
    case Property::buchsbaum:
    case Property::quasi_buchsbaum:
      r.notes.push_back("no algebraic oracle for (quasi-)Buchsbaumness");
      if (dim < 2) return;
      if (!c.is_pure()) {
        decide(r, false, theorem::gcm_needs_pure, "", "not pure, so not equidimensional");
        return;
      }
      decide_matroid(r, c, theorem::symbolic_bbm);
      return;
    case Property::gcm:
      if (dim == 1) {
        decide(r, c.is_pure(), theorem::symbolic_gcm_graph, "pure graph", "not pure, so not equidimensional");
      } else if (dim >= 2) {
        const auto split = matroid_components(c);
        std::string why;
        if (split.not_pure) why = "not pure, so components differ in dimension";
        else if (split.failed_component)
          why = "component " + to_string(split.components[*split.failed_component]) + " is not a matroid";
        decide(r, split.ok(), theorem::symbolic_gcm,
               std::to_string(split.components.size()) + " disjoint matroid component(s) of equal dimension",
               why);
      }
      return;
  }
}

inline void classify_sr_ordinary(ClassificationReport& r, const Query& q, int dim) {
  const auto& c = q.complex;
  switch (q.property) {
    case Property::cm:
    case Property::s2:
      if (dim >= 1) decide_ci(r, c, theorem::ordinary_cm);
      return;
    case Property::buchsbaum:
    case Property::quasi_buchsbaum:
      r.notes.push_back("no algebraic oracle for (quasi-)Buchsbaumness");
      if (dim >= 2) {
        decide_ci(r, c, theorem::ordinary_bbm);
      } else if (dim == 1) {
        if (!q.m || *q.m >= 4) decide_ci(r, c, theorem::ordinary_bbm_graph);
        else r.notes.push_back("graphs at m = 3 are not covered by a characterization here");
      }
      return;
    case Property::gcm:
      if (dim == 1) {
        if (!c.is_pure()) {
          decide(r, false, theorem::gcm_needs_pure, "", "not pure, so not equidimensional");
          return;
        }
        const int deg = max_vertex_degree(c);
        decide(r, deg <= 2, theorem::ordinary_gcm_graph, "disjoint union of paths and cycles",
               "a vertex has degree " + std::to_string(deg));
      } else if (dim >= 2) {
        decide(r, is_disjoint_union_of_ci(c), theorem::ordinary_gcm,
               "disjoint complete intersections of equal dimension",
               c.is_pure() ? "some component is not a complete intersection" : "not pure");
      }
      return;
  }
}

inline void classify_facet(ClassificationReport& r, const Query& q, int dim) {
  const auto& c = q.complex;
  if (q.property != Property::cm) return;
  for (Face f : c.facets())
    if (face_size(f) <= 1) {
      r.notes.push_back("a facet with at most one vertex puts a variable in the facet ideal");
      return;
    }
  const SimplicialComplex dual = dual_complex(c);
  if (dual.dimension() < 1) {
    r.notes.push_back("dual complex has dimension < 1");
    return;
  }
  const bool dual_matroid = is_matroid_exchange(dual);
  if (dim == 1 && c.is_pure()) {
    const bool structural = is_disjoint_union_of_uniform(c, 1);
    if (structural != dual_matroid)
      throw std::logic_error("facet ideal: complete-graph structure disagrees with dual matroid test");
    decide(r, structural, theorem::facet_graph, "disjoint union of complete graphs",
           "not a disjoint union of complete graphs");
  } else if (dim == 2 && c.is_pure()) {
    const bool structural = is_disjoint_union_of_uniform(c, 2);
    if (structural != dual_matroid)
      throw std::logic_error("facet ideal: 2-uniform structure disagrees with dual matroid test");
    decide(r, structural, theorem::facet_2dim, "disjoint union of 2-uniform matroids",
           "not a disjoint union of 2-uniform matroids");
  } else {
    decide_matroid(r, dual, theorem::facet_dual);
    r.witness = "dual complex: " + r.witness;
    r.notes.push_back("dim " + std::to_string(dim) +
                      ": no structure theorem; decided on the dual complex, confirm with the oracle");
  }
}

inline void classify_cover(ClassificationReport& r, const Query& q) {
  const auto& c = q.complex;
  if (q.property != Property::cm) return;
  decide_matroid(r, c, theorem::cover_cm);
  if (c.dimension() == 1 && c.is_pure()) {
    const bool four_cycles = graph_matroid_criterion(c);
    r.notes.push_back(std::string("disjoint edges in 4-cycles: ") + (four_cycles ? "yes" : "no"));
  }
}

}  // namespace detail

/// Decides a query from the combinatorics of Δ alone, or marks it oracle_only
/// when no characterization applies (m ≤ 2, or a hypothesis is not met).
inline ClassificationReport classify(const Query& q) {
  if (q.complex.is_void()) throw std::invalid_argument("query on the void complex");
  if (q.m && *q.m < 1) throw std::invalid_argument("power must be positive");
  if (q.ideal_kind != IdealKind::stanley_reisner && q.power_kind != PowerKind::symbolic)
    throw std::invalid_argument("facet and cover ideals take symbolic powers only");
  if (q.ideal_kind == IdealKind::stanley_reisner) require_all_vertices(q.complex);

  ClassificationReport r;
  if (q.m && *q.m <= 2) {
    r.notes.push_back("m <= 2: no combinatorial characterization; use the oracle");
    return r;
  }
  const int dim = q.complex.dimension();
  switch (q.ideal_kind) {
    case IdealKind::stanley_reisner:
      if (q.power_kind == PowerKind::symbolic) detail::classify_sr_symbolic(r, q, dim);
      else detail::classify_sr_ordinary(r, q, dim);
      break;
    case IdealKind::facet: detail::classify_facet(r, q, dim); break;
    case IdealKind::cover: detail::classify_cover(r, q); break;
  }
  return r;
}

/// The concrete ideal a query talks about at power m.
inline MonomialIdeal query_ideal(const Query& q, int m) {
  switch (q.ideal_kind) {
    case IdealKind::stanley_reisner: return sr_power(q.complex, m, q.power_kind);
    case IdealKind::facet: return symbolic_power(facet_ideal(q.complex), m);
    case IdealKind::cover: return cover_symbolic_power(q.complex, m);
  }
  throw std::logic_error("unknown ideal kind");
}

/// Runs the local cohomology oracle for CM, S2 or gCM.
inline bool oracle_property(const MonomialIdeal& I, Property p, const OracleOptions& opt) {
  switch (p) {
    case Property::cm: return is_cm(I, opt);
    case Property::s2: return is_s2(I, opt);
    case Property::gcm: return is_generalized_cm(I, opt);
    default: throw std::invalid_argument(std::string("no oracle for property ") + to_string(p));
  }
}

/// Fills the oracle section of a report for the query's power m.
inline void run_oracle(ClassificationReport& r, const Query& q, const OracleOptions& opt) {
  if (!q.m) throw std::invalid_argument("the oracle needs a concrete power m");
  const auto start = std::chrono::steady_clock::now();
  const MonomialIdeal I = query_ideal(q, *q.m);
  r.oracle.result = oracle_property(I, q.property, opt);
  r.oracle.ran = true;
  r.oracle.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct OracleComparison {
  ClassificationReport report;  // theorem verdict plus the oracle section
  bool oracle_verdict = false;
  /// Empty when the theorem route gave no verdict.
  std::optional<bool> agree;
};

inline OracleComparison verify_against_oracle(const Query& q, const OracleOptions& opt = {}) {
  if (q.property != Property::cm && q.property != Property::s2 && q.property != Property::gcm)
    throw std::invalid_argument("verify_against_oracle supports cm, s2 and gcm only");
  OracleComparison out;
  out.report = classify(q);
  run_oracle(out.report, q, opt);
  out.oracle_verdict = *out.report.oracle.result;
  if (out.report.verdict != Verdict::oracle_only)
    out.agree = (out.report.verdict == Verdict::holds) == out.oracle_verdict;
  return out;
}

}  // namespace srpl
