#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "srpl/complex.hpp"

namespace srpl {

/// Exponent vector of a monomial x^a. Entries may be negative when used as a
/// degree; a negative entry never lies in an ideal of the polynomial ring.
using Exponents = std::vector<int>;

inline constexpr int kMaxPower = 16;

/// Monomial ideal of K[x_1..x_n] given by its minimal generators.
///
/// The zero ideal has no generators; the unit ideal has the single generator 0.
/// Generators are kept sorted lexicographically.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal from_generators(int n, std::vector<Exponents> gens) {
    if (n < 0) throw std::invalid_argument("negative ambient size");
    for (const auto& g : gens) {
      if (static_cast<int>(g.size()) != n)
        throw std::invalid_argument("generator length " + std::to_string(g.size()) +
                                    " does not match ambient size " + std::to_string(n));
      for (int e : g)
        if (e < 0) throw std::invalid_argument("negative exponent in generator");
    }
    MonomialIdeal I;
    I.n_ = n;
    I.gens_ = minimalize(std::move(gens));
    return I;
  }

  static MonomialIdeal zero(int n) { return from_generators(n, {}); }
  static MonomialIdeal unit(int n) { return from_generators(n, {Exponents(n, 0)}); }

  /// Squarefree ideal generated by x^S for each listed support.
  static MonomialIdeal from_supports(int n, const std::vector<Face>& supports) {
    std::vector<Exponents> gens;
    for (Face s : supports) gens.push_back(indicator(n, s));
    return from_generators(n, std::move(gens));
  }

  static Exponents indicator(int n, Face s) {
    Exponents e(n, 0);
    for (int v : face_labels(s)) {
      if (v > n) throw std::out_of_range("support outside ambient range");
      e[v - 1] = 1;
    }
    return e;
  }

  int ambient_size() const { return n_; }
  const std::vector<Exponents>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(), [](int e) { return e == 0; });
  }
  bool is_proper() const { return !is_unit(); }

  bool is_squarefree() const {
    for (const auto& g : gens_)
      for (int e : g)
        if (e > 1) return false;
    return true;
  }

  /// Some minimal generator is a single variable.
  bool contains_variable() const {
    for (const auto& g : gens_)
      if (std::accumulate(g.begin(), g.end(), 0) == 1) return true;
    return false;
  }

  /// ρ_i: the largest exponent of x_i among the generators.
  int max_exponent(int i) const {
    int r = 0;
    for (const auto& g : gens_) r = std::max(r, g[i]);
    return r;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  static bool divides(const Exponents& u, const Exponents& a) {
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] > a[i]) return false;
    return true;
  }

  static std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
    auto degree = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0L); };
    std::sort(gens.begin(), gens.end(), [&](const Exponents& a, const Exponents& b) {
      const long da = degree(a), db = degree(b);
      return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponents> keep;
    for (auto& g : gens) {
      bool redundant = false;
      for (const auto& k : keep)
        if (divides(k, g)) {
          redundant = true;
          break;
        }
      if (!redundant) keep.push_back(std::move(g));
    }
    std::sort(keep.begin(), keep.end());
    return keep;
  }

 private:
  int n_ = 0;
  std::vector<Exponents> gens_;
};

inline Face support(const Exponents& e) {
  Face s = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) s |= vertex_bit(static_cast<int>(i) + 1);
  return s;
}

/// "x1^2*x3" style rendering; "1" for the unit monomial.
inline std::string monomial_to_string(const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < I.generators().size(); ++i) {
    if (i) s += ", ";
    s += monomial_to_string(I.generators()[i]);
  }
  return s + ")";
}

inline void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ambient_size() != J.ambient_size())
    throw std::invalid_argument("ideals live in rings with " + std::to_string(I.ambient_size()) +
                                " and " + std::to_string(J.ambient_size()) + " variables");
}

inline void require_power(int m) {
  if (m < 1 || m > kMaxPower)
    throw std::invalid_argument("power " + std::to_string(m) + " outside [1, " +
                                std::to_string(kMaxPower) + "]");
}

// ---------------------------------------------------------------------------
// Membership and comparison

/// x^a ∈ I for a ∈ Z^n.
inline bool membership(const Exponents& a, const MonomialIdeal& I) {
  if (static_cast<int>(a.size()) != I.ambient_size())
    throw std::invalid_argument("degree vector length does not match ambient size");
  for (int e : a)
    if (e < 0) return false;
  for (const auto& g : I.generators())
    if (MonomialIdeal::divides(g, a)) return true;
  return false;
}

/// J ⊆ I.
inline bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  for (const auto& g : J.generators())
    if (!membership(g, I)) return false;
  return true;
}

inline bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
  return contains(I, J) && contains(J, I);
}

/// x^a ∈ I·S[x_i^{-1} : i ∈ F]: some generator u has u_j ≤ a_j for all j ∉ F.
inline bool localized_membership(const Exponents& a, const MonomialIdeal& I, Face f) {
  if (static_cast<int>(a.size()) != I.ambient_size())
    throw std::invalid_argument("degree vector length does not match ambient size");
  for (const auto& g : I.generators()) {
    bool ok = true;
    for (std::size_t j = 0; j < a.size() && ok; ++j)
      if (!contains_vertex(f, static_cast<int>(j) + 1) && g[j] > a[j]) ok = false;
    if (ok) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Arithmetic

inline int checked_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal::from_generators(I.ambient_size(), std::move(gens));
}

/// Generators: minimalized pairwise lcms.
inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<Exponents> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const auto& u : I.generators())
    for (const auto& v : J.generators()) {
      Exponents w(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) w[i] = std::max(u[i], v[i]);
      gens.push_back(std::move(w));
    }
  return MonomialIdeal::from_generators(I.ambient_size(), std::move(gens));
}

inline MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<Exponents> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const auto& u : I.generators())
    for (const auto& v : J.generators()) {
      Exponents w(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) w[i] = checked_add(u[i], v[i]);
      gens.push_back(std::move(w));
    }
  return MonomialIdeal::from_generators(I.ambient_size(), std::move(gens));
}

inline MonomialIdeal power(const MonomialIdeal& I, int m) {
  require_power(m);
  MonomialIdeal acc = I;
  for (int k = 1; k < m; ++k) acc = multiply(acc, I);
  return acc;
}

/// Monomial x^a times the ideal.
inline MonomialIdeal shift(const MonomialIdeal& I, const Exponents& a) {
  std::vector<Exponents> gens;
  for (const auto& g : I.generators()) {
    Exponents w(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) w[i] = checked_add(g[i], a[i]);
    gens.push_back(std::move(w));
  }
  return MonomialIdeal::from_generators(I.ambient_size(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Prime powers and their intersections

/// Generators of P_W^m: all monomials of degree m in the variables of W.
inline MonomialIdeal prime_power(int n, Face w, int m) {
  require_power(m);
  const auto vars = face_labels(w);
  if (vars.empty()) return MonomialIdeal::zero(n);
  std::vector<Exponents> gens;
  Exponents cur(n, 0);
  // distribute m among vars
  auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
    if (idx + 1 == vars.size()) {
      cur[vars[idx] - 1] = left;
      gens.push_back(cur);
      cur[vars[idx] - 1] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[vars[idx] - 1] = e;
      self(self, idx + 1, left - e);
    }
    cur[vars[idx] - 1] = 0;
  };
  rec(rec, 0, m);
  return MonomialIdeal::from_generators(n, std::move(gens));
}

/// ∩_W P_W^m by enumerating the box {0..m}^n. A minimal generator never has an
/// exponent above m: lowering such an exponent to m keeps every W-sum ≥ m.
/// An empty list of supports gives the unit ideal.
inline MonomialIdeal intersect_prime_powers_box(int n, const std::vector<Face>& supports, int m) {
  require_power(m);
  for (Face w : supports)
    if (w == 0) return MonomialIdeal::zero(n);
  if (supports.empty()) return MonomialIdeal::unit(n);
  std::vector<Exponents> gens;
  Exponents a(n, 0);
  std::vector<int> sums(supports.size(), 0);
  const std::size_t total = [&] {
    std::size_t t = 1;
    for (int i = 0; i < n; ++i) {
      if (t > (std::size_t{1} << 40) / static_cast<std::size_t>(m + 1))
        throw std::length_error("symbolic power box too large");
      t *= static_cast<std::size_t>(m + 1);
    }
    return t;
  }();
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int i = 0; i < n; ++i) {
      a[i] = static_cast<int>(rest % static_cast<std::size_t>(m + 1));
      rest /= static_cast<std::size_t>(m + 1);
    }
    bool member = true;
    for (std::size_t k = 0; k < supports.size() && member; ++k) {
      int s = 0;
      for (Face w = supports[k]; w != 0; w &= w - 1) s += a[std::countr_zero(w)];
      sums[k] = s;
      if (s < m) member = false;
    }
    if (!member) continue;
    // minimal iff every positive coordinate sits in some tight support
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i) {
      if (a[i] == 0) continue;
      bool tight = false;
      for (std::size_t k = 0; k < supports.size(); ++k)
        if (sums[k] == m && contains_vertex(supports[k], i + 1)) {
          tight = true;
          break;
        }
      minimal = tight;
    }
    if (minimal) gens.push_back(a);
  }
  return MonomialIdeal::from_generators(n, std::move(gens));
}

/// Same ideal by iterated lcm intersection of the prime powers.
inline MonomialIdeal intersect_prime_powers_iterated(int n, const std::vector<Face>& supports, int m) {
  MonomialIdeal acc = MonomialIdeal::unit(n);
  for (Face w : supports) acc = intersect(acc, prime_power(n, w, m));
  return acc;
}

// ---------------------------------------------------------------------------
// Stanley–Reisner translation

inline void require_all_vertices(const SimplicialComplex& c) {
  if (c.is_void())
    throw std::invalid_argument("the void complex has no Stanley-Reisner ideal in this setting");
  for (int i = 1; i <= c.ambient_size(); ++i)
    if (!c.contains(vertex_bit(i)))
      throw std::invalid_argument("vertex " + std::to_string(i) +
                                  " is not a face; its Stanley-Reisner ideal would contain x" +
                                  std::to_string(i));
}

/// I_Δ: generated by the minimal nonfaces.
inline MonomialIdeal sr_ideal(const SimplicialComplex& c) {
  require_all_vertices(c);
  return MonomialIdeal::from_supports(c.ambient_size(), minimal_nonfaces(c));
}

/// Complex of √I: the sets containing no generator support.
inline SimplicialComplex complex_of_radical(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("the unit ideal has no associated complex");
  std::vector<Face> nonfaces;
  for (const auto& g : I.generators()) nonfaces.push_back(support(g));
  return SimplicialComplex::from_nonfaces(I.ambient_size(), minimal_elements(std::move(nonfaces)));
}

/// Complements of the facets of Δ, i.e. supports of the minimal primes of I_Δ.
inline std::vector<Face> facet_complements(const SimplicialComplex& c) {
  std::vector<Face> out;
  for (Face f : c.facets()) out.push_back(full_face(c.ambient_size()) & ~f);
  return out;
}

/// I_Δ^(m) = ∩_F P_{F̄}^m over the facets of Δ.
inline MonomialIdeal symbolic_power(const SimplicialComplex& c, int m) {
  require_power(m);
  require_all_vertices(c);
  return intersect_prime_powers_box(c.ambient_size(), facet_complements(c), m);
}

/// Supports W of the minimal primes P_W of a squarefree ideal.
inline std::vector<Face> minimal_primes(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw std::invalid_argument("minimal_primes needs a squarefree ideal");
  if (I.is_unit() || I.is_zero()) throw std::invalid_argument("minimal_primes needs a proper nonzero ideal");
  auto primes = facet_complements(complex_of_radical(I));
  std::sort(primes.begin(), primes.end());
  return primes;
}

/// I^(m) of a squarefree ideal: intersection of the m-th powers of its minimal primes.
inline MonomialIdeal symbolic_power(const MonomialIdeal& I, int m) {
  require_power(m);
  if (I.is_zero()) return I;
  if (I.is_unit()) return I;
  return intersect_prime_powers_box(I.ambient_size(), minimal_primes(I), m);
}

// ---------------------------------------------------------------------------
// Facet and cover ideals

inline MonomialIdeal facet_ideal(const SimplicialComplex& c) {
  if (c.is_void()) return MonomialIdeal::zero(c.ambient_size());
  return MonomialIdeal::from_supports(c.ambient_size(), c.facets());
}

/// J(Δ) = ∩_F P_F over facets; generated by the minimal vertex covers.
inline MonomialIdeal cover_ideal(const SimplicialComplex& c) {
  if (c.is_void()) return MonomialIdeal::unit(c.ambient_size());
  return intersect_prime_powers_box(c.ambient_size(), c.facets(), 1);
}

/// J(Δ)^(m) = ∩_F P_F^m.
inline MonomialIdeal cover_symbolic_power(const SimplicialComplex& c, int m) {
  require_power(m);
  if (c.is_void()) return MonomialIdeal::unit(c.ambient_size());
  return intersect_prime_powers_box(c.ambient_size(), c.facets(), m);
}

/// Δ*: the complex whose Stanley–Reisner ideal is I(Δ).
inline SimplicialComplex dual_complex(const SimplicialComplex& c) {
  if (c.is_void()) throw std::invalid_argument("dual_complex of the void complex");
  for (Face f : c.facets())
    if (face_size(f) <= 1)
      throw std::invalid_argument("facet " + face_to_string(f) +
                                  " makes the facet ideal contain a variable or 1");
  return complex_of_radical(facet_ideal(c));
}

// ---------------------------------------------------------------------------
// Contraction: I·S[x_i^{-1} : i ∈ G] ∩ K[x_j : j ∉ G]

struct Contraction {
  MonomialIdeal ideal;
  /// old 0-based index -> new 0-based index, or -1 for inverted variables.
  std::vector<int> old_to_new;
};

inline Contraction contract(const MonomialIdeal& I, Face g) {
  const int n = I.ambient_size();
  if (!is_subset(g, full_face(n))) throw std::out_of_range("contraction set outside ambient range");
  Contraction out;
  out.old_to_new.assign(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i)
    if (!contains_vertex(g, i + 1)) out.old_to_new[i] = next++;
  std::vector<Exponents> gens;
  gens.reserve(I.generators().size());
  for (const auto& u : I.generators()) {
    Exponents w(next, 0);
    for (int i = 0; i < n; ++i)
      if (out.old_to_new[i] >= 0) w[out.old_to_new[i]] = u[i];
    gens.push_back(std::move(w));
  }
  out.ideal = MonomialIdeal::from_generators(next, std::move(gens));
  return out;
}

// ---------------------------------------------------------------------------
// Extension by a new variable y

enum class PowerKind { ordinary, symbolic };

inline const char* to_string(PowerKind k) { return k == PowerKind::ordinary ? "ordinary" : "symbolic"; }

/// The k-th power of the given kind; k = 0 gives the unit ideal.
inline MonomialIdeal power_of_kind(const MonomialIdeal& I, int k, PowerKind kind) {
  if (k == 0) return MonomialIdeal::unit(I.ambient_size());
  return kind == PowerKind::ordinary ? power(I, k) : symbolic_power(I, k);
}

inline MonomialIdeal append_variable(const MonomialIdeal& I, int y_exponent) {
  std::vector<Exponents> gens;
  for (auto g : I.generators()) {
    g.push_back(y_exponent);
    gens.push_back(std::move(g));
  }
  return MonomialIdeal::from_generators(I.ambient_size() + 1, std::move(gens));
}

/// Checks (I, y)^m = Σ_{k=0}^{m} I^k y^{m-k} for the given kind of power.
inline bool extension_decomposition_check(const MonomialIdeal& I, int m, PowerKind kind) {
  require_power(m);
  if (kind == PowerKind::symbolic && !I.is_squarefree())
    throw std::invalid_argument("symbolic extension check needs a squarefree ideal");
  const int n = I.ambient_size();
  Exponents y(n + 1, 0);
  y[n] = 1;
  const MonomialIdeal extended = sum(append_variable(I, 0), MonomialIdeal::from_generators(n + 1, {y}));
  const MonomialIdeal lhs = power_of_kind(extended, m, kind);
  MonomialIdeal rhs = MonomialIdeal::zero(n + 1);
  for (int k = 0; k <= m; ++k) rhs = sum(rhs, append_variable(power_of_kind(I, k, kind), m - k));
  return lhs == rhs;
}

}  // namespace srpl
