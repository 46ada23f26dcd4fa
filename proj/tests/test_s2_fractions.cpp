#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace conncheck;

namespace {

Polynomial var(const RingPtr& R, std::size_t i) { return Polynomial::variable(R, i); }

/// a..e mapped to x, y, yz, z(z - x), z^2(z - x); the kernel is prime.
std::shared_ptr<const PresentedRing> kernel_ring() {
  static const auto ring = [] {
    const auto A = PolyRing::make({"a", "b", "c", "d", "e"});
    const auto S = PolyRing::make({"x", "y", "z"});
    const auto x = var(S, 0), y = var(S, 1), z = var(S, 2);
    const RingMap phi(A, S, {x, y, y * z, z * (z - x), z * z * (z - x)});
    const Ideal J = ring_map_kernel(phi);
    return std::make_shared<const PresentedRing>(
        attach_min_primes(PresentedRing(J), asserted_minimal_primes(J, {{J, phi}})));
  }();
  return ring;
}

std::shared_ptr<const PresentedRing> share(PresentedRing R) { return std::make_shared<const PresentedRing>(std::move(R)); }

bool contains_all(const Ideal& big, const std::vector<Polynomial>& gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return big.contains(g); });
}

} // namespace

TEST(Conductor, KernelExampleFraction) {
  const auto R = kernel_ring();
  const auto A = R->ambient();
  const Fraction f(R, var(A, 4), var(A, 3));
  const auto c = conductor(f);
  EXPECT_EQ(c.ideal, Ideal::variables(A, {1, 2, 3, 4}));
  EXPECT_EQ(c.height, 2);
  EXPECT_TRUE(c.member);
  // e/d is not in the ring itself: the conductor is proper
  EXPECT_FALSE(c.ideal.is_unit());
}

TEST(Conductor, RingElementsHaveUnitConductor) {
  const auto R = kernel_ring();
  const auto A = R->ambient();
  const Fraction f(R, var(A, 0) * var(A, 1) + var(A, 2), Polynomial::constant(A, 1));
  const auto c = conductor(f);
  EXPECT_TRUE(c.ideal.is_unit());
  EXPECT_TRUE(c.height.is_infinite());
  EXPECT_TRUE(c.member);
}

TEST(Conductor, InverseOfAVariableIsNotAMember) {
  const auto S = PolyRing::make({"x", "y"});
  const auto R = share(PresentedRing::polynomial(S));
  const auto c = conductor(Fraction(R, Polynomial::constant(S, 1), var(S, 0)));
  EXPECT_EQ(c.ideal, Ideal(S, {var(S, 0)}));
  EXPECT_EQ(c.height, 1);
  EXPECT_FALSE(c.member);
}

TEST(Fraction, ZerodivisorDenominatorRejected) {
  const auto S = PolyRing::make({"x", "y"});
  const auto R = share(presented_ring(Ideal(S, {var(S, 0) * var(S, 1)})));
  EXPECT_THROW(Fraction(R, Polynomial::constant(S, 1), var(S, 0)), PreconditionError);
  EXPECT_NO_THROW(Fraction(R, Polynomial::constant(S, 1), var(S, 0) + var(S, 1)));
}

TEST(Fraction, ArithmeticOverDifferentRingsRejected) {
  const auto S = PolyRing::make({"x", "y"});
  const auto R1 = share(PresentedRing::polynomial(S));
  const auto R2 = share(presented_ring(Ideal(S, {var(S, 0) * var(S, 1)})));
  const Fraction a(R1, var(S, 0), Polynomial::constant(S, 1));
  const Fraction b(R2, var(S, 0), Polynomial::constant(S, 1));
  EXPECT_THROW(a + b, StructuralError);
}

TEST(Conductor, FilterProperties) {
  // two triangles sharing an edge: K[x1..x4]/(x1*x4)
  const auto D = SimplicialComplex(4, {{0, 1, 2}, {1, 2, 3}});
  const auto R = share(face_ring(D));
  const auto A = R->ambient();
  testgen::Gen g(71);
  std::vector<Fraction> fs;
  while (fs.size() < 12) {
    const auto u = g.polynomial(A, 3, 2);
    const auto v = g.nonzero_polynomial(A, 2, 1);
    try {
      fs.emplace_back(R, u, v);
    } catch (const PreconditionError&) {
    }
  }
  for (std::size_t i = 0; i + 1 < fs.size(); i += 2) {
    const auto& f = fs[i];
    const auto& h = fs[i + 1];
    const auto cf = conductor(f).ideal, ch = conductor(h).ideal;
    EXPECT_TRUE(contains_all(conductor(f * h).ideal, ideal_product(cf, ch).generators()));
    EXPECT_TRUE(contains_all(conductor(f + h).ideal, ideal_intersection(cf, ch).generators()));
    EXPECT_TRUE(contains_all(conductor(f - h).ideal, ideal_intersection(cf, ch).generators()));
    if (conductor(f).member && conductor(h).member) {
      EXPECT_TRUE(conductor(f * h).member);
      EXPECT_TRUE(conductor(f + h).member);
    }
  }
}

TEST(Conductor, IndependentOfRepresentative) {
  const auto D = SimplicialComplex(4, {{0, 1, 2}, {1, 2, 3}});
  const auto R = share(face_ring(D));
  const auto A = R->ambient();
  testgen::Gen g(72);
  int checked = 0;
  while (checked < 10) {
    const auto u = g.polynomial(A, 3, 2);
    const auto v = g.nonzero_polynomial(A, 2, 1);
    const auto w = g.nonzero_polynomial(A, 2, 1);
    try {
      const Fraction f(R, u, v);
      const Fraction scaled(R, u * w, v * w);
      const Fraction shifted(R, u + v * g.polynomial(A, 2, 1) + R->defining.generators().front(), v);
      EXPECT_EQ(conductor(f).ideal, conductor(scaled).ideal);
      EXPECT_EQ(conductor(f).ideal, conductor(shifted).ideal);
      ++checked;
    } catch (const PreconditionError&) {
    }
  }
}

TEST(S2Local, KernelExampleIsLocal) {
  const auto r = s2_local_decision(*kernel_ring());
  EXPECT_TRUE(r.local);
  EXPECT_FALSE(r.reduced_to_top_components);
  ASSERT_EQ(r.conditions.size(), 5u);
  for (const auto& c : r.conditions)
    EXPECT_TRUE(c.holds) << c.key;
}

TEST(S2Local, TwoPlanesMeetingAtAPointAreNotLocal) {
  const auto S = PolyRing::make({"x", "y", "z", "w"});
  const auto x = var(S, 0), y = var(S, 1), z = var(S, 2), w = var(S, 3);
  const auto r = s2_local_decision(presented_ring(Ideal(S, {x * z, x * w, y * z, y * w})));
  EXPECT_FALSE(r.local);
  EXPECT_EQ(r.gamma.status, ConnectivityStatus::disconnected);
  for (const auto& c : r.conditions) {
    EXPECT_FALSE(c.holds) << c.key;
    EXPECT_TRUE(c.provenance == "computed" || c.provenance == "by-equivalence");
  }
}

TEST(S2Local, MixedDimensionPassesToTopComponents) {
  // a plane with a line sticking out: only the plane is top dimensional
  const auto S = PolyRing::make({"x", "y", "z"});
  const auto x = var(S, 0), y = var(S, 1), z = var(S, 2);
  const auto r = s2_local_decision(presented_ring(Ideal(S, {x * y, x * z})));
  EXPECT_TRUE(r.reduced_to_top_components);
  EXPECT_EQ(r.ring_ideal, Ideal(S, {x}));
  EXPECT_TRUE(r.local);
}

TEST(S2Local, NonReducedMixedDimensionRefused) {
  const auto S = PolyRing::make({"x", "y", "z"});
  const auto x = var(S, 0), y = var(S, 1), z = var(S, 2);
  const auto K = presented_ring(Ideal(S, {x * x * y, x * x * z}));
  ASSERT_EQ(K.reduced, Certainty::refuted);
  EXPECT_THROW(s2_local_decision(K), PreconditionError);
}

TEST(S2Local, AgreesWithGammaOnFaceRings) {
  testgen::Gen g(73);
  for (int i = 0; i < 40; ++i) {
    const auto D = g.complex(3 + g.below(4), 5);
    const auto K = face_ring(D);
    const auto r = s2_local_decision(K);
    // non-pure complexes pass through their top-dimensional facets
    std::vector<std::uint32_t> top;
    for (auto f : D.facet_masks())
      if (std::popcount(f) == D.max_facet_size())
        top.push_back(f);
    const auto T = SimplicialComplex::from_masks(D.n_vertices(), top);
    EXPECT_EQ(r.local, is_connected(combinatorial_gamma(T)).connected()) << D.to_string();
    EXPECT_EQ(r.reduced_to_top_components, !is_pure(D));
  }
}
