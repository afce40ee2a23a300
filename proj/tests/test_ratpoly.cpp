#include "hyperint/polynomial.hpp"
#include "hyperint/rational.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <array>

using namespace hyperint;

namespace {

RationalPolynomial example_quintic() {
  // t(1-t)(1-t/4)(1-t/3)(1-t/2)
  return RationalPolynomial({Rational(0), Rational(1), Rational(-25, 12), Rational(35, 24),
                             Rational(-5, 12), Rational(1, 24)});
}

// Binomial form of the Taylor shift: b_j = sum_{i>=j} C(i,j) a_i p^{i-j}.
RationalPolynomial shift_by_binomials(const RationalPolynomial& q, const Rational& p) {
  std::vector<Rational> b(static_cast<std::size_t>(q.degree() + 1), Rational(0));
  for (long j = 0; j <= q.degree(); ++j)
    for (long i = j; i <= q.degree(); ++i)
      b[static_cast<std::size_t>(j)] += binomial(i, j) * q[i] * ipow(p, static_cast<unsigned>(i - j));
  return RationalPolynomial(std::move(b));
}

}  // namespace

TEST(Rational, ParsesAndPrintsCanonicalText) {
  EXPECT_EQ(to_string(parse_rational("-15/256")), "-15/256");
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("+8/4")), "2");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "1/-2", "a", "1 /2", "--1"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, ToDoubleRoundsToNearest) {
  EXPECT_EQ(to_double(Rational(1, 3)), 1.0 / 3.0);
  EXPECT_EQ(to_double(Rational(2, 3)), 2.0 / 3.0);
  EXPECT_EQ(to_double(Rational(-7, 10)), -7.0 / 10.0);
  EXPECT_EQ(to_double(Rational(1027, 450)), 1027.0 / 450.0);
}

TEST(Rational, StaysInLowestTerms) {
  fixtures::Generator gen(7);
  for (int i = 0; i < 200; ++i) {
    Rational a = gen.rational(50, 50), b = gen.nonzero_rational(50, 50);
    a.canonicalize();
    const Rational r = a * b + a / b - b;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    EXPECT_EQ(g, 1);
    EXPECT_GT(r.get_den(), 0);
  }
}

TEST(PolyShift, ExampleQuinticAboutThreeHalves) {
  const RationalPolynomial b = poly_shift(example_quintic(), Rational(3, 2));
  EXPECT_EQ(b[0], Rational(-15, 256));
  EXPECT_EQ(b[1], Rational(3, 128));
  // 25/96, not -25/98: consistent with the matrix entry -2 b_2 = -25/48.
  EXPECT_EQ(b[2], Rational(25, 96));
  EXPECT_EQ(b[3], Rational(-5, 48));
  EXPECT_EQ(b[4], Rational(-5, 48));
  EXPECT_EQ(b[5], Rational(1, 24));
  EXPECT_EQ(b.degree(), 5);
}

TEST(PolyShift, ZeroShiftIsIdentity) {
  const RationalPolynomial q = example_quintic();
  EXPECT_EQ(poly_shift(q, Rational(0)), q);
}

TEST(PolyShift, AgreesWithBinomialFormAndRoundTrips) {
  fixtures::Generator gen(11);
  for (int i = 0; i < 100; ++i) {
    const RationalPolynomial q = gen.polynomial(gen.integer(0, 9));
    const Rational p = gen.rational();
    const RationalPolynomial b = poly_shift(q, p);
    EXPECT_EQ(b, shift_by_binomials(q, p));
    EXPECT_EQ(poly_shift(b, Rational(-p)), q);
    const Rational x = gen.rational();
    EXPECT_EQ(poly_eval(q, x), poly_eval(b, Rational(x - p)));
  }
}

TEST(PolyEval, Examples) {
  EXPECT_EQ(poly_eval(example_quintic(), Rational(3, 2)), Rational(-15, 256));
  EXPECT_EQ(poly_eval(RationalPolynomial(), Rational(5, 7)), Rational(0));
  EXPECT_EQ(poly_eval(RationalPolynomial::monomial(2), Rational(7, 2)), Rational(49, 4));
}

TEST(PolyDerivative, Examples) {
  EXPECT_EQ(poly_derivative(RationalPolynomial::monomial(3)), RationalPolynomial::monomial(2, Rational(3)));
  EXPECT_TRUE(poly_derivative(RationalPolynomial::constant(Rational(4))).is_zero());
  const RationalPolynomial d = poly_derivative(example_quintic());
  for (long j = 1; j <= 5; ++j) EXPECT_EQ(d[j - 1], Rational(j) * example_quintic()[j]);
}

TEST(PolyFromRoots, Examples) {
  const std::array<Rational, 2> r12{Rational(1), Rational(2)};
  EXPECT_EQ(poly_from_roots<Rational>(Rational(1), r12),
            RationalPolynomial({Rational(2), Rational(-3), Rational(1)}));
  const std::array<Rational, 1> r0{Rational(0)};
  EXPECT_EQ(poly_from_roots<Rational>(Rational(5), r0), RationalPolynomial({Rational(0), Rational(5)}));
  const std::array<Rational, 4> r1234{Rational(1), Rational(2), Rational(3), Rational(4)};
  EXPECT_EQ(poly_from_roots<Rational>(Rational(1), r1234),
            RationalPolynomial({Rational(24), Rational(-50), Rational(35), Rational(-10), Rational(1)}));
}

TEST(ElementarySymmetric, Examples) {
  const std::array<Rational, 3> v{Rational(1), Rational(1, 2), Rational(1, 3)};
  EXPECT_EQ(elementary_symmetric<Rational>(v, 0), Rational(1));
  EXPECT_EQ(elementary_symmetric<Rational>(v, 2), Rational(1));
  EXPECT_EQ(elementary_symmetric<Rational>(v, 3), Rational(1, 6));
  EXPECT_THROW(elementary_symmetric<Rational>(v, 4), std::out_of_range);
  EXPECT_THROW(elementary_symmetric<Rational>(v, -1), std::out_of_range);
}

// t(1-t)(1-k_2 t)...(1-k_{n-2} t) has a_i = (-1)^{i-1} sigma_{i-1}(1, k_2, ...).
TEST(ElementarySymmetric, CanonicalWeightCoefficients) {
  fixtures::Generator gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    const long n = gen.integer(2, 9);
    std::vector<Rational> us{Rational(1)};
    RationalPolynomial w({Rational(0), Rational(1)});
    w *= RationalPolynomial({Rational(1), Rational(-1)});
    for (long j = 2; j <= n - 2; ++j) {
      Rational k = gen.rational(9, 10);
      k.canonicalize();
      us.push_back(k);
      w *= RationalPolynomial({Rational(1), Rational(-k)});
    }
    for (long i = 1; i <= w.degree(); ++i) {
      const Rational sigma = elementary_symmetric<Rational>(us, i - 1);
      EXPECT_EQ(w[i], (i % 2 == 1 ? sigma : Rational(-sigma)));
    }
  }
}

TEST(Laurent, DerivativeAndProducts) {
  LaurentPolynomial e(Rational(3, 2));
  e.add(-2, Rational(5));
  e.add(1, Rational(2));
  const LaurentPolynomial d = e.derivative();
  EXPECT_EQ(d.coeff(-3), Rational(-10));
  EXPECT_EQ(d.coeff(0), Rational(2));
  EXPECT_EQ(d.terms().size(), 2u);
  e.add(1, Rational(-2));
  EXPECT_EQ(e.terms().size(), 1u);
  const LaurentPolynomial prod = e.times(RationalPolynomial({Rational(1), Rational(1)}));
  EXPECT_EQ(prod.coeff(-2), Rational(5));
  EXPECT_EQ(prod.coeff(-1), Rational(5));
}

TEST(Polynomial, FloatingInstantiation) {
  const Polynomial<double> q({1.0, -3.0, 2.0});
  EXPECT_DOUBLE_EQ(q(2.0), 3.0);
  EXPECT_DOUBLE_EQ(poly_shift(q, 1.0)[0], 0.0);
  EXPECT_NEAR(example_quintic()(1.5), -15.0 / 256.0, 1e-14);
}
