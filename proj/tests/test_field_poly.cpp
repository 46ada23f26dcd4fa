#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace conncheck;

namespace {

RingPtr xyz() { return PolyRing::make({"x", "y", "z"}); }

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

} // namespace

TEST(Field, RationalsStayInLowestTerms) {
  const auto F = Field::rationals();
  const auto a = F.from_rational(mpq_class(6, -4));
  EXPECT_EQ(a.rational().get_num(), -3);
  EXPECT_EQ(a.rational().get_den(), 2);
  EXPECT_EQ((a * F.from_integer(2)).to_string(), "-3");
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Field, PrimeResiduesStayInRange) {
  const auto F = Field::prime(7);
  EXPECT_EQ(F.from_integer(-1).residue(), 6u);
  EXPECT_EQ(F.from_integer(3).inverse().residue(), 5u);
  EXPECT_EQ(F.from_rational(mpq_class(1, 2)).residue(), 4u);
  EXPECT_THROW(Field::prime(9), StructuralError);
  EXPECT_THROW(F.from_integer(0).inverse(), StructuralError);
}

TEST(Field, MixingFieldsIsStructuralError) {
  EXPECT_THROW(Field::rationals().one() + Field::prime(5).one(), StructuralError);
  EXPECT_THROW(Field::prime(5).one() + Field::prime(7).one(), StructuralError);
}

TEST(MonomialOrder, LexPrefersFirstExponent) {
  EXPECT_EQ(monomial_compare(mono({2, 1, 0}), mono({1, 3, 0}), MonomialOrder::lex()), std::strong_ordering::greater);
}

TEST(MonomialOrder, Reflexive) {
  for (auto o : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination(1)})
    EXPECT_EQ(monomial_compare(mono({1, 2, 3}), mono({1, 2, 3}), o), std::strong_ordering::equal);
}

TEST(MonomialOrder, GrevlexYSquaredBeatsXZ) {
  EXPECT_EQ(monomial_compare(mono({1, 0, 1}), mono({0, 2, 0}), MonomialOrder::grevlex()), std::strong_ordering::less);
}

TEST(MonomialOrder, LengthMismatchIsStructuralError) {
  EXPECT_THROW(monomial_compare(mono({1, 0}), mono({1, 0, 0}), MonomialOrder::lex()), StructuralError);
}

TEST(MonomialOrder, EliminationOrderRanksBlockFirst) {
  // t > any monomial in x, y alone
  EXPECT_EQ(monomial_compare(mono({1, 0, 0}), mono({0, 5, 5}), MonomialOrder::elimination(1)),
            std::strong_ordering::greater);
  EXPECT_EQ(monomial_compare(mono({0, 5, 5}), mono({1, 0, 0}), MonomialOrder::grevlex()),
            std::strong_ordering::greater);
}

TEST(MonomialOrder, TotalMultiplicativeWellOrderOnRandomTriples) {
  testgen::Gen g(11);
  for (auto o : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination(2)}) {
    for (int i = 0; i < 400; ++i) {
      const auto a = g.monomial(4, 5), b = g.monomial(4, 5), c = g.monomial(4, 5);
      const auto ab = monomial_compare(a, b, o), ba = monomial_compare(b, a, o);
      EXPECT_EQ(ab == std::strong_ordering::less, ba == std::strong_ordering::greater);
      EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
      EXPECT_EQ(monomial_compare(a * c, b * c, o), ab);
      EXPECT_NE(monomial_compare(Monomial(4), a, o), std::strong_ordering::greater);
      if (ab == std::strong_ordering::less && monomial_compare(b, c, o) == std::strong_ordering::less) {
        EXPECT_EQ(monomial_compare(a, c, o), std::strong_ordering::less);
      }
    }
  }
}

TEST(Polynomial, BasicArithmetic) {
  const auto R = xyz();
  const auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  EXPECT_EQ((x + y) + (x - y), Polynomial::constant(R, 2) * x);
  EXPECT_TRUE((x * Polynomial(R)).is_zero());
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
  EXPECT_EQ(((x + y) * (x - y)).to_string(), "x^2 - y^2");
}

TEST(Polynomial, TermsStrictlyDescendingWithoutZeros) {
  const auto R = xyz();
  const auto F = R->field();
  Polynomial p(R, {{mono({0, 1, 0}), F.from_integer(2)},
                   {mono({1, 0, 0}), F.from_integer(1)},
                   {mono({0, 1, 0}), F.from_integer(-2)},
                   {mono({1, 0, 0}), F.from_integer(3)}});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.to_string(), "4*x");
}

TEST(Polynomial, AmbientMismatchIsStructuralError) {
  const auto R = xyz();
  const auto S = PolyRing::make({"a", "b"});
  EXPECT_THROW(Polynomial::variable(R, 0) + Polynomial::variable(S, 0), StructuralError);
  const auto Fp = PolyRing::make({"x", "y", "z"}, Field::prime(5));
  EXPECT_THROW(Polynomial::variable(R, 0) * Polynomial::variable(Fp, 0), StructuralError);
}

TEST(Polynomial, RingAxiomsOnRandomTriples) {
  testgen::Gen g(3);
  for (auto field : {Field::rationals(), Field::prime(101)}) {
    const auto R = PolyRing::make({"x", "y", "z"}, field);
    for (int i = 0; i < 150; ++i) {
      const auto a = g.polynomial(R, 4, 3), b = g.polynomial(R, 4, 3), c = g.polynomial(R, 4, 3);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + b, b + a);
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Polynomial, EvaluationIsARingHomomorphism) {
  testgen::Gen g(5);
  const auto R = xyz();
  const auto F = R->field();
  for (int i = 0; i < 150; ++i) {
    const auto a = g.polynomial(R, 4, 3), b = g.polynomial(R, 4, 3);
    std::vector<FieldElement> pt{F.from_integer(g.between(-4, 4)), F.from_integer(g.between(-4, 4)),
                                 F.from_integer(g.between(-4, 4))};
    EXPECT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    EXPECT_EQ((a - b).evaluate(pt), a.evaluate(pt) - b.evaluate(pt));
  }
}

TEST(Polynomial, OrderChangeKeepsValue) {
  testgen::Gen g(8);
  const auto R = xyz();
  for (int i = 0; i < 50; ++i) {
    const auto a = g.polynomial(R, 5, 4);
    const auto l = a.with_order(MonomialOrder::lex());
    EXPECT_EQ(l, a);
    EXPECT_EQ(l.with_order(MonomialOrder::grevlex()).to_string(), a.to_string());
  }
}

TEST(Polynomial, WeightedHomogeneity) {
  const auto R = PolyRing::make({"x", "y"}, Field::rationals(), {1, 2});
  const auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  EXPECT_TRUE((x * x - y).is_homogeneous());
  EXPECT_FALSE((x - y).is_homogeneous());
  EXPECT_THROW(PolyRing::make({"x", "y"}, Field::rationals(), {1, 0}), StructuralError);
}

TEST(Polynomial, ExactDivision) {
  const auto R = xyz();
  const auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  EXPECT_EQ(divide_exact((x + y) * (x - y), x - y), x + y);
  EXPECT_FALSE(try_divide_exact(x * x + y, x).has_value());
}
