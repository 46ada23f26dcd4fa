#include <gtest/gtest.h>

#include <bit>

#include "support/generators.hpp"

using namespace conncheck;

namespace {

SimplicialComplex cx(std::size_t n, std::vector<std::vector<std::size_t>> facets) {
  return SimplicialComplex(n, std::move(facets));
}

Polynomial squarefree(const RingPtr& R, std::uint32_t mask) {
  std::vector<std::uint32_t> e(R->nvars(), 0);
  for (std::size_t v = 0; v < R->nvars(); ++v)
    e[v] = mask >> v & 1u;
  return Polynomial::monomial(R, Monomial(std::move(e)), R->field().one());
}

} // namespace

TEST(SimplicialComplex, RejectsComparableFacetsAndBadVertices) {
  EXPECT_THROW(cx(3, {{0, 1}, {0}}), StructuralError);
  EXPECT_THROW(cx(3, {{0, 3}}), StructuralError);
  EXPECT_THROW(SimplicialComplex(25, {}), PreconditionError);
}

TEST(SimplicialComplex, PrintsOneBasedFacets) {
  EXPECT_EQ(cx(4, {{1, 2, 3}, {0, 1, 2}}).to_string(), "{{1,2,3}, {2,3,4}}");
  EXPECT_EQ(cx(4, {{0, 1, 2}, {1, 2, 3}}), cx(4, {{1, 2, 3}, {0, 1, 2}}));
}

TEST(SrIdeal, Examples) {
  const auto D = cx(4, {{0, 1, 2}, {1, 2, 3}});
  EXPECT_EQ(sr_ideal(D, face_ring_ambient(D)).canonical_string(), "(x1*x4)");
  const auto S = SimplicialComplex::simplex(3);
  EXPECT_TRUE(sr_ideal(S, face_ring_ambient(S)).is_zero());
  // the boundary of a triangle
  const auto B = cx(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(sr_ideal(B, face_ring_ambient(B)).canonical_string(), "(x1*x2*x3)");
  // an isolated vertex and an edge
  const auto E = cx(3, {{0}, {1, 2}});
  EXPECT_EQ(sr_ideal(E, face_ring_ambient(E)).canonical_string(), "(x1*x2, x1*x3)");
}

TEST(SrIdeal, FacesAreExactlyTheSurvivingSquarefreeMonomials) {
  testgen::Gen g(61);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 2 + g.below(5);
    const auto D = g.complex(n, 5);
    const auto R = face_ring_ambient(D);
    const Ideal I = sr_ideal(D, R);
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      EXPECT_EQ(D.is_face(s), !I.contains(squarefree(R, s))) << D.to_string() << " " << s;
  }
}

TEST(FacetMinPrimes, Examples) {
  const auto D = cx(4, {{0, 1, 2}, {1, 2, 3}});
  std::vector<std::string> got;
  for (const auto& p : facet_min_primes(D, face_ring_ambient(D)).primes)
    got.push_back(p.ideal.canonical_string());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"(x1)", "(x4)"}));
}

TEST(FacetMinPrimes, MatchGenericMonomialDecomposition) {
  testgen::Gen g(62);
  for (int i = 0; i < 60; ++i) {
    const auto D = g.complex(2 + g.below(5), 5);
    const auto R = face_ring_ambient(D);
    const auto a = facet_min_primes(D, R);
    const auto b = monomial_minimal_primes(sr_ideal(D, R));
    ASSERT_EQ(a.primes.size(), b.primes.size()) << D.to_string();
    for (std::size_t k = 0; k < a.primes.size(); ++k)
      EXPECT_EQ(a.primes[k].ideal, b.primes[k].ideal);
    EXPECT_TRUE(verify_decomposition(a.for_ideal, a.ideals()).pass);
  }
}

TEST(FaceRing, DimensionIsLargestFacetSize) {
  testgen::Gen g(63);
  for (int i = 0; i < 40; ++i) {
    const auto D = g.complex(2 + g.below(5), 4);
    const auto K = face_ring(D);
    EXPECT_EQ(ring_dimension(K), D.max_facet_size());
    EXPECT_EQ(K.equidimensional == Certainty::certified, is_pure(D));
  }
}

TEST(FaceRing, IsPure) {
  EXPECT_TRUE(is_pure(cx(4, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(is_pure(cx(3, {{0}, {1, 2}})));
}

TEST(CombinatorialGamma, MatchesHeightBasedGamma) {
  testgen::Gen g(64);
  for (int i = 0; i < 80; ++i) {
    const std::size_t n = 3 + g.below(4);
    const auto D = g.pure_complex(n, 2 + g.below(std::min<std::size_t>(3, n - 1)), 6);
    const auto a = combinatorial_gamma(D);
    const auto b = build_gamma(face_ring(D));
    EXPECT_EQ(a, b.graph) << D.to_string();
    EXPECT_EQ(a.labels(), b.graph.labels());
  }
  EXPECT_THROW(combinatorial_gamma(cx(3, {{0}, {1, 2}})), PreconditionError);
}

TEST(Join, FacetsAndDimension) {
  const auto A = cx(2, {{0}, {1}});
  const auto B = cx(3, {{0, 1}, {1, 2}});
  const auto J = join(A, B);
  EXPECT_EQ(J.n_vertices(), 5u);
  EXPECT_EQ(J.facet_masks().size(), 4u);
  EXPECT_EQ(ring_dimension(face_ring(J)), 3);
  EXPECT_FALSE(J.is_face(0b00011u));
  EXPECT_TRUE(J.is_face(0b01101u));
}

TEST(RandomComplex, Examples) {
  EXPECT_EQ(random_pure_connected_complex(3, 3, 1, 7), SimplicialComplex::simplex(3));
  const auto D = random_pure_connected_complex(4, 3, 2, 11);
  ASSERT_EQ(D.facet_masks().size(), 2u);
  EXPECT_EQ(std::popcount(D.facet_masks()[0] & D.facet_masks()[1]), 2);
  EXPECT_THROW(random_pure_connected_complex(4, 3, 5, 1), PreconditionError);
  EXPECT_THROW(random_pure_connected_complex(4, 5, 1, 1), PreconditionError);
}

TEST(RandomComplex, PureConnectedAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto D = random_pure_connected_complex(5, 3, 4, seed);
    EXPECT_EQ(D, random_pure_connected_complex(5, 3, 4, seed));
    EXPECT_TRUE(is_pure(D));
    EXPECT_EQ(D.facet_masks().size(), 4u);
    EXPECT_EQ(D.max_facet_size(), 3);
    EXPECT_TRUE(is_connected(combinatorial_gamma(D)).connected());
  }
}

TEST(Harness, SmallRunPassesAndIsReproducible) {
  HarnessOptions opt;
  opt.trials = 25;
  opt.max_vertices = 6;
  opt.seed = 99;
  const auto a = faltings_harness(opt);
  EXPECT_EQ(a.trials, 25u);
  EXPECT_EQ(a.passed, 25u);
  EXPECT_TRUE(a.failures.empty());
  const auto b = faltings_harness(opt);
  ASSERT_EQ(a.instances.size(), b.instances.size());
  for (std::size_t t = 0; t < a.instances.size(); ++t) {
    EXPECT_EQ(a.instances[t].complex, b.instances[t].complex);
    EXPECT_EQ(a.instances[t].generators, b.instances[t].generators);
    EXPECT_EQ(a.instances[t].seed, b.instances[t].seed);
  }
  opt.seed = 100;
  const auto c = faltings_harness(opt);
  bool differs = false;
  for (std::size_t t = 0; t < a.instances.size(); ++t)
    differs = differs || !(a.instances[t].complex == c.instances[t].complex);
  EXPECT_TRUE(differs);
}

TEST(Harness, InstancesRespectBounds) {
  HarnessOptions opt;
  opt.trials = 40;
  opt.seed = 5;
  for (const auto& inst : faltings_harness(opt).instances) {
    const auto s = static_cast<std::size_t>(inst.complex.max_facet_size());
    EXPECT_GE(inst.complex.n_vertices(), opt.min_vertices);
    EXPECT_LE(inst.complex.n_vertices(), opt.max_vertices);
    EXPECT_TRUE(is_pure(inst.complex));
    EXPECT_LE(inst.generators.size(), s - 2);
    for (const auto& m : inst.generators) {
      EXPECT_GE(m.degree(), 1u);
      EXPECT_LE(m.degree(), opt.max_generator_degree);
    }
  }
}

TEST(Harness, TooManyGeneratorsCanDisconnect) {
  // two triangles sharing an edge, cut by two generic-enough monomials
  const auto D = cx(4, {{0, 1, 2}, {1, 2, 3}});
  EXPECT_EQ(harness_check(D, {}), ConnectivityStatus::connected);
  const Monomial x2({0, 1, 0, 0}), x3({0, 0, 1, 0});
  EXPECT_EQ(harness_check(D, {x2}), ConnectivityStatus::connected);
  EXPECT_NE(harness_check(D, {x2, x3}), ConnectivityStatus::connected);
}

TEST(Harness, RejectsInfeasibleOptions) {
  HarnessOptions opt;
  opt.max_vertices = 25;
  EXPECT_THROW(faltings_harness(opt), PreconditionError);
}
