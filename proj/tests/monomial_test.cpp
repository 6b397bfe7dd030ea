#include <random>

#include <gtest/gtest.h>

#include "brute.hpp"
#include "srpl/enumerate.hpp"
#include "srpl/io.hpp"

using namespace srpl;

namespace {

MonomialIdeal random_ideal(std::mt19937& rng, int n, int gens, int top) {
  std::vector<Exponents> g;
  for (int i = 0; i < gens; ++i) {
    Exponents e(n);
    for (int& x : e) x = static_cast<int>(rng() % (top + 1));
    g.push_back(e);
  }
  return MonomialIdeal::from_generators(n, g);
}

}  // namespace

TEST(Monomial, GeneratorsAreMinimalAndLexSorted) {
  const auto I = MonomialIdeal::from_generators(3, {{1, 1, 0}, {2, 1, 0}, {0, 0, 1}, {1, 1, 0}});
  EXPECT_EQ(I.generators(), (std::vector<Exponents>{{0, 0, 1}, {1, 1, 0}}));
  EXPECT_EQ(to_string(I), "(x3, x1*x2)");
}

TEST(Monomial, RejectsBadGenerators) {
  EXPECT_THROW(MonomialIdeal::from_generators(2, {{1, 2, 3}}), std::invalid_argument);
  EXPECT_THROW(MonomialIdeal::from_generators(2, {{-1, 0}}), std::invalid_argument);
  EXPECT_THROW(sum(MonomialIdeal::zero(2), MonomialIdeal::zero(3)), std::invalid_argument);
  EXPECT_THROW(power(MonomialIdeal::zero(2), kMaxPower + 1), std::invalid_argument);
}

TEST(Monomial, ZeroAndUnit) {
  EXPECT_TRUE(MonomialIdeal::zero(3).is_zero());
  EXPECT_TRUE(MonomialIdeal::unit(3).is_unit());
  EXPECT_TRUE(membership({0, 0, 0}, MonomialIdeal::unit(3)));
  EXPECT_FALSE(membership({5, 5, 5}, MonomialIdeal::zero(3)));
}

TEST(Monomial, ArithmeticMatchesBruteForce) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const auto I = random_ideal(rng, n, 1 + trial % 3, 2);
    const auto J = random_ideal(rng, n, 1 + trial % 2, 2);
    const int top = 5;
    const auto gi = I.generators();
    const auto gj = J.generators();
    EXPECT_EQ(brute::gens_set(sum(I, J)), brute::minimal_monomials(n, top, [&](const Exponents& a) {
                return brute::member(a, gi) || brute::member(a, gj);
              }));
    EXPECT_EQ(brute::gens_set(intersect(I, J)), brute::minimal_monomials(n, top, [&](const Exponents& a) {
                return brute::member(a, gi) && brute::member(a, gj);
              }));
    std::vector<Exponents> products;
    for (const auto& u : gi)
      for (const auto& v : gj) {
        Exponents w(n);
        for (int k = 0; k < n; ++k) w[k] = u[k] + v[k];
        products.push_back(w);
      }
    EXPECT_EQ(brute::gens_set(multiply(I, J)), brute::minimal_monomials(n, 4, [&](const Exponents& a) {
                return brute::member(a, products);
              }));
  }
}

TEST(Monomial, ContainmentAndEquality) {
  const auto I = MonomialIdeal::from_supports(3, {vertex_bit(1), vertex_bit(2)});
  const auto J = MonomialIdeal::from_supports(3, {vertex_bit(1) | vertex_bit(2)});
  EXPECT_TRUE(contains(I, J));
  EXPECT_FALSE(contains(J, I));
  EXPECT_TRUE(equals(I, sum(I, J)));
}

TEST(Monomial, SymbolicPowerByDefinition) {
  // small complexes: generators equal the minimal monomials lying in every P_{F̄}^m
  for (const auto& c : complex_classes_up_to(4))
    for (int m = 1; m <= 3; ++m) {
      const auto comps = facet_complements(c);
      const auto expected = brute::minimal_monomials(c.ambient_size(), m, [&](const Exponents& a) {
        for (Face w : comps)
          if (!brute::in_prime_power(a, w, m)) return false;
        return true;
      });
      EXPECT_EQ(brute::gens_set(symbolic_power(c, m)), expected) << to_string(c) << " m=" << m;
    }
}

TEST(Monomial, BoxAndIteratedIntersectionAgree) {
  for (const auto& c : complex_classes_up_to(5))
    for (int m = 1; m <= 3; ++m) {
      const auto comps = facet_complements(c);
      EXPECT_EQ(intersect_prime_powers_box(c.ambient_size(), comps, m),
                intersect_prime_powers_iterated(c.ambient_size(), comps, m))
          << to_string(c) << " m=" << m;
    }
}

TEST(Monomial, BoxAndIteratedAgreeOnSixVertexSample) {
  const auto sample = fixed_sample(complex_classes(6), 300, 11);
  for (const auto& c : sample)
    for (int m = 2; m <= 3; ++m) {
      const auto comps = facet_complements(c);
      EXPECT_EQ(intersect_prime_powers_box(6, comps, m), intersect_prime_powers_iterated(6, comps, m));
    }
}

TEST(Monomial, OrdinaryPowerInsideSymbolicPower) {
  for (const auto& c : complex_classes_up_to(5))
    for (int m = 1; m <= 3; ++m) EXPECT_TRUE(contains(symbolic_power(c, m), power(sr_ideal(c), m)));
}

TEST(Monomial, SymbolicPowerOfIdealUsesMinimalPrimes) {
  const auto c = cycle(5);
  EXPECT_EQ(symbolic_power(sr_ideal(c), 3), symbolic_power(c, 3));
}

TEST(Monomial, BuchsbaumSquareFixture) {
  const auto c = example_buchsbaum_square();
  const auto I = sr_ideal(c);
  EXPECT_EQ(to_string(I), "(x2*x5, x1*x5, x1*x2*x3*x4)");
  const auto extra = MonomialIdeal::from_generators(5, {{1, 1, 1, 1, 1}});
  EXPECT_EQ(symbolic_power(c, 2), sum(power(I, 2), extra));
}

TEST(Monomial, StanleyReisnerRoundTrip) {
  for (const auto& c : complex_classes_up_to(5)) EXPECT_EQ(complex_of_radical(sr_ideal(c)), c);
}

TEST(Monomial, CoverIdealIsIdealOfComplement) {
  for (const auto& c : complex_classes_up_to(5)) {
    const auto comp = complement_complex(c);
    if (comp.vertex_set() != full_face(c.ambient_size())) continue;
    EXPECT_TRUE(equals(cover_ideal(c), sr_ideal(comp))) << to_string(c);
  }
}

TEST(Monomial, FacetIdealPrimesAreMinimalCovers) {
  const auto c = example_three_blocks();
  auto primes = minimal_primes(facet_ideal(c));
  auto covers = brute::minimal_covers(6, c.facets());
  std::sort(primes.begin(), primes.end());
  std::sort(covers.begin(), covers.end());
  EXPECT_EQ(primes, covers);
  EXPECT_EQ(primes.size(), 12u);
  for (Face p : primes) EXPECT_EQ(face_size(p), 2);
}

TEST(Monomial, DualComplexNonfacesAreFacets) {
  for (const auto& c : complex_classes_up_to(5)) {
    bool ok = true;
    for (Face f : c.facets()) ok = ok && face_size(f) >= 2;
    if (!ok) continue;
    const auto d = dual_complex(c);
    auto nonfaces = brute::minimal_nonfaces(d);
    auto facets = c.facets();
    std::sort(nonfaces.begin(), nonfaces.end());
    std::sort(facets.begin(), facets.end());
    EXPECT_EQ(nonfaces, facets) << to_string(c);
  }
  EXPECT_THROW(dual_complex(SimplicialComplex::from_label_sets(3, {{1, 2}, {3}})), std::invalid_argument);
}

TEST(Monomial, ContractionComposes) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5;
    const auto I = random_ideal(rng, n, 4, 3);
    const Face g = static_cast<Face>(rng() % 32);
    const Face h = static_cast<Face>(rng() % 32) & ~g;
    const auto first = contract(I, g);
    // h in the new coordinates
    Face h_new = 0;
    for (int i = 0; i < n; ++i)
      if ((h >> i & 1) && first.old_to_new[i] >= 0) h_new |= Face{1} << first.old_to_new[i];
    EXPECT_EQ(contract(first.ideal, h_new).ideal, contract(I, g | h).ideal);
  }
}

TEST(Monomial, ContractionMatchesLocalizedMembership) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto I = random_ideal(rng, 4, 3, 2);
    const Face g = static_cast<Face>(rng() % 16);
    const auto c = contract(I, g);
    brute::for_each_monomial(4, 3, [&](const Exponents& a) {
      Exponents b;
      for (int i = 0; i < 4; ++i)
        if (c.old_to_new[i] >= 0) b.push_back(a[i]);
      EXPECT_EQ(localized_membership(a, I, g), membership(b, c.ideal));
    });
  }
}

TEST(Monomial, ExtensionDecomposition) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto I = random_ideal(rng, 3, 2, 1);
    if (I.is_unit()) continue;
    for (int m = 1; m <= 3; ++m) {
      EXPECT_TRUE(extension_decomposition_check(I, m, PowerKind::ordinary));
      EXPECT_TRUE(extension_decomposition_check(I, m, PowerKind::symbolic));
    }
  }
}

TEST(Monomial, OverflowIsReported) {
  const auto big = MonomialIdeal::from_generators(1, {{1 << 30}});
  EXPECT_THROW(multiply(big, big), std::overflow_error);
}
