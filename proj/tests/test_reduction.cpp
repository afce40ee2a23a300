#include "hyperint/reduction.hpp"
#include "example_data.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hyperint;
using hyperint::fixtures::Generator;

namespace {

RationalPolynomial random_degree7(Generator& gen) { return gen.polynomial(7); }

Rational random_pole(Generator& gen, const RationalPolynomial& q) {
  for (;;) {
    Rational p = gen.rational();
    p.canonicalize();
    if (!is_zero(poly_eval(q, p))) return p;
  }
}

}  // namespace

TEST(MatrixA, Examples) {
  Generator gen(1);
  const RationalPolynomial q = random_degree7(gen);
  EXPECT_EQ(matrix_a_entry(q, 9, 9), 13 * q[7]);
  EXPECT_EQ(matrix_a_entry(q, 3, 3), Rational(1));
  EXPECT_EQ(matrix_a_entry(q, 1, 9), Rational(0));
  EXPECT_EQ(matrix_a_entry(q, 10, 9), Rational(0));
  // n = M-1: rows 0..M-1, and the l = -1 summand is absent.
  EXPECT_EQ(matrix_a_entry(q, 0, 6), Rational(1) * q[1]);
  EXPECT_EQ(matrix_a_entry(q, 6, 6), Rational(7) * q[7]);
}

TEST(MatrixA, BandConfinement) {
  Generator gen(2);
  for (int trial = 0; trial < 20; ++trial) {
    const long m = gen.integer(3, 8);
    const RationalPolynomial q = gen.polynomial(m);
    for (long n = 0; n <= 3 * m; ++n)
      for (long l = 0; l <= 3 * m + 2; ++l) {
        const Rational v = matrix_a_entry(q, l, n);
        if (n <= m - 2) {
          EXPECT_EQ(v, Rational(l == n ? 1 : 0));
        } else if (l > n || l < n - m) {
          EXPECT_EQ(v, Rational(0));
        }
      }
  }
}

TEST(MatrixT, QuinticExample) {
  const auto q = fixtures::quintic_example();
  const auto p = fixtures::quintic_pole();
  EXPECT_EQ(matrix_t_entry(q, p, -3, -3), Rational(15, 64));
  EXPECT_EQ(matrix_t_entry(q, p, 0, 0), Rational(1));
  EXPECT_EQ(matrix_t_entry(q, p, 2, -3), Rational(1, 24));
  EXPECT_EQ(matrix_t_entry(q, p, -2, -3), Rational(-9, 128));
  EXPECT_EQ(matrix_t_entry(q, p, 3, -3), Rational(0));
  EXPECT_THROW(matrix_t_entry(q, Rational(1), -3, -3), std::domain_error);
}

TEST(SolveBColumn, ClosedFormsDegreeSeven) {
  Generator gen(3);
  const RationalPolynomial q = random_degree7(gen);
  const BandColumn col = solve_b_column(q, 9);
  EXPECT_EQ(col.at(9), Rational(1) / (13 * q[7]));
  EXPECT_EQ(col.at(8), -12 * q[6] / (11 * 13 * q[7] * q[7]));
  for (const auto& [row, value] : fixtures::degree7_b_column_closed_form(q)) EXPECT_EQ(col.at(row), value);
}

TEST(SolveBColumn, UnitColumnsAndTriangularity) {
  Generator gen(4);
  for (int trial = 0; trial < 20; ++trial) {
    const long m = gen.integer(3, 8);
    const RationalPolynomial q = gen.polynomial(m);
    for (long n = 0; n <= m - 2; ++n) {
      const BandColumn col = solve_b_column(q, n);
      ASSERT_EQ(col.entries.size(), 1u);
      EXPECT_EQ(col.at(n), Rational(1));
    }
    const long n = gen.integer(m - 1, 4 * m);
    for (const auto& [row, value] : solve_b_column(q, n).entries) {
      EXPECT_GE(row, 0);
      EXPECT_LE(row, n);
    }
  }
}

// Column n of B times A is e_n.
TEST(SolveBColumn, InvertsTransitionMatrix) {
  Generator gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const long m = gen.integer(3, 8);
    const RationalPolynomial q = gen.polynomial(m);
    const long n = gen.integer(0, 4 * m);
    const BandColumn col = solve_b_column(q, n);
    for (long k = 0; k <= n; ++k) {
      Rational s(0);
      for (const auto& [l, v] : col.entries) s += matrix_a_entry(q, k, l) * v;
      EXPECT_EQ(s, Rational(k == n ? 1 : 0)) << "m=" << m << " n=" << n << " k=" << k;
    }
  }
}

TEST(SolveUColumn, QuinticExample) {
  const BandColumn col = solve_u_column(fixtures::quintic_example(), fixtures::quintic_pole(), -3);
  for (const auto& [row, value] : fixtures::quintic_u_column()) EXPECT_EQ(col.at(row), value) << row;
  EXPECT_EQ(col.entries.size(), 7u);
}

TEST(SolveUColumn, InvertsTransitionMatrix) {
  Generator gen(6);
  for (int trial = 0; trial < 20; ++trial) {
    const long m = gen.integer(3, 8);
    const RationalPolynomial q = gen.polynomial(m);
    const Rational p = random_pole(gen, q);
    const long n = gen.integer(-12, m - 2);
    const BandColumn col = solve_u_column(q, p, n);
    for (const auto& [row, value] : col.entries) {
      EXPECT_GE(row, n);
      EXPECT_LE(row, m - 2);
    }
    for (long k = n; k <= m - 2; ++k) {
      Rational s(0);
      for (const auto& [l, v] : col.entries) s += matrix_t_entry(q, p, k, l) * v;
      EXPECT_EQ(s, Rational(k == n ? 1 : 0));
    }
    if (n >= -1) {
      EXPECT_EQ(col.entries.size(), 1u);
    }
  }
}

TEST(BinomialRebase, Examples) {
  const auto r0 = binomial_rebase(0, Rational(5));
  EXPECT_EQ(r0, (std::map<long, Rational>{{0, Rational(1)}}));
  const auto r1 = binomial_rebase(1, Rational(2, 7));
  EXPECT_EQ(r1, (std::map<long, Rational>{{0, Rational(1)}, {1, Rational(-2, 7)}}));
  const auto r2 = binomial_rebase(2, Rational(3, 2));
  EXPECT_EQ(r2, (std::map<long, Rational>{{0, Rational(1)}, {1, Rational(-3)}, {2, Rational(9, 4)}}));
}

TEST(Reduce, BasisElementsAreThemselves) {
  Generator gen(7);
  const RationalPolynomial q = gen.polynomial(5);
  const ReductionResult r0 = reduce(q, Rational(0), 0);
  EXPECT_EQ(r0.basic, (std::map<long, Rational>{{0, Rational(1)}}));
  EXPECT_TRUE(r0.elementary.is_zero());
  const Rational p = random_pole(gen, q);
  const ReductionResult rm1 = reduce(q, p, -1);
  EXPECT_EQ(rm1.basic, (std::map<long, Rational>{{-1, Rational(1)}}));
  EXPECT_TRUE(rm1.elementary.is_zero());
}

TEST(Reduce, QuinticExampleOnCanonicalBasis) {
  const ReductionResult r = reduce(fixtures::quintic_example(), fixtures::quintic_pole(), -3);
  // U_{l,-3} I_{l,3/2} re-expanded through the binomial rebase.
  const std::map<long, Rational> expected{{-1, Rational(1027, 450)}, {0, Rational(233, 225)},
                                          {1, Rational(-74, 25)},    {2, Rational(404, 225)},
                                          {3, Rational(-8, 25)}};
  EXPECT_EQ(r.basic, expected);
  EXPECT_EQ(r.elementary.coeff(-2), Rational(128, 15));
  EXPECT_EQ(r.elementary.coeff(-1), Rational(128, 25));
  EXPECT_EQ(r.elementary.terms().size(), 2u);
  EXPECT_TRUE(reduction_residual(fixtures::quintic_example(), -3, r).is_zero());
}

TEST(Reduce, DegreeSevenExampleColumn) {
  Generator gen(8);
  const RationalPolynomial q = random_degree7(gen);
  const ReductionResult r = reduce(q, Rational(0), 9);
  const BandColumn col = solve_b_column(q, 9);
  for (long l = 0; l <= 5; ++l) EXPECT_EQ(r.coeff(l), col.at(l));
  for (long l = 6; l <= 9; ++l) EXPECT_EQ(r.elementary.coeff(l - 6), 2 * col.at(l));
}

TEST(Reduce, ElementaryExponentRanges) {
  Generator gen(9);
  for (int trial = 0; trial < 40; ++trial) {
    const long m = gen.integer(3, 8);
    const RationalPolynomial q = gen.polynomial(m);
    const Rational p = random_pole(gen, q);
    const long n = gen.integer(-8, 20);
    const ReductionResult r = reduce(q, p, n);
    for (const auto& [e, c] : r.elementary.terms()) {
      if (n >= 0) {
        EXPECT_GE(e, 0);
        EXPECT_LE(e, n + 1 - m);
      } else {
        EXPECT_GE(e, n + 1);
        EXPECT_LE(e, -1);
      }
    }
    for (const auto& [l, c] : r.basic) {
      EXPECT_GE(l, n >= 0 ? 0 : -1);
      EXPECT_LE(l, m - 2);
    }
  }
}

TEST(Reduce, IdentityAndOracleAgreeOnRandomCases) {
  Generator gen(10);
  for (int trial = 0; trial < 60; ++trial) {
    const long m = gen.integer(3, 8);
    const RationalPolynomial q = gen.polynomial(m);
    const Rational p = random_pole(gen, q);
    const long n = gen.integer(-6, 15);
    const ReductionResult r = reduce(q, p, n);
    EXPECT_TRUE(reduction_residual(q, n, r).is_zero()) << "m=" << m << " n=" << n;
    EXPECT_EQ(r, recurrence_oracle(q, p, n)) << "m=" << m << " n=" << n;
  }
}

TEST(Reduce, LargeExponentsStayExact) {
  Generator gen(12);
  const RationalPolynomial q = gen.polynomial(4);
  const Rational p = random_pole(gen, q);
  EXPECT_TRUE(reduction_residual(q, 150, reduce(q, p, 150)).is_zero());
  EXPECT_TRUE(reduction_residual(q, -150, reduce(q, p, -150)).is_zero());
}

TEST(Reduce, RejectsDegenerateInput) {
  const RationalPolynomial quadratic({Rational(1), Rational(0), Rational(1)});
  EXPECT_THROW(reduce(quadratic, Rational(0), 3), std::domain_error);
  EXPECT_THROW(recurrence_oracle(quadratic, Rational(0), 3), std::domain_error);
  const auto q = fixtures::quintic_example();
  EXPECT_THROW(reduce(q, Rational(1), -2), std::domain_error);
  EXPECT_THROW(reduce(q, Rational(0), -1), std::domain_error);
  EXPECT_THROW(recurrence_oracle(q, Rational(2), -3), std::domain_error);
  EXPECT_NO_THROW(reduce(q, Rational(1), 4));
}

TEST(RecurrenceOracle, BasisElement) {
  const ReductionResult r = recurrence_oracle(fixtures::quintic_example(), Rational(3, 2), 0);
  EXPECT_EQ(r.basic, (std::map<long, Rational>{{0, Rational(1)}}));
  EXPECT_TRUE(r.elementary.is_zero());
}

// b_3 I_1 - b_1 I_{-1} = (2/x) sqrt(Q) for Q = b_3 x^3 + b_2 x^2 + b_1 x.
TEST(ReduceRootPole, CubicThroughOrigin) {
  Generator gen(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational b1 = gen.nonzero_rational(), b2 = gen.rational(), b3 = gen.nonzero_rational();
    const RationalPolynomial q({Rational(0), b1, b2, b3});
    const ReductionResult r = reduce_root_pole(q, Rational(0));
    EXPECT_EQ(r.basic, (std::map<long, Rational>{{1, b3 / b1}}));
    EXPECT_EQ(r.elementary.coeff(-1), Rational(-2) / b1);
    EXPECT_EQ(r.elementary.terms().size(), 1u);
    EXPECT_TRUE(reduction_residual(q, -1, r).is_zero());
  }
}

TEST(ReduceRootPole, Examples) {
  const RationalPolynomial q({Rational(0), Rational(-1), Rational(0), Rational(1)});  // x^3 - x
  const ReductionResult r = reduce_root_pole(q, Rational(0));
  // b_3 = 1, b_1 = -1: I_1 + I_{-1} = (2/x) sqrt(Q), so I_{-1} = (2/x) sqrt(Q) - I_1.
  EXPECT_EQ(r.basic, (std::map<long, Rational>{{1, Rational(-1)}}));
  EXPECT_EQ(r.elementary.coeff(-1), Rational(2));
  const RationalPolynomial doubled({Rational(0), Rational(0), Rational(-1), Rational(0), Rational(1)});
  EXPECT_THROW(reduce_root_pole(doubled, Rational(0)), std::domain_error);
  EXPECT_THROW(reduce_root_pole(q, Rational(2)), std::domain_error);
}

TEST(ReduceRootPole, ShiftedRootsOfHigherDegree) {
  Generator gen(14);
  for (int trial = 0; trial < 20; ++trial) {
    const long m = gen.integer(3, 8);
    const auto roots = gen.distinct_sorted(static_cast<std::size_t>(m));
    const RationalPolynomial q = poly_from_roots<Rational>(gen.nonzero_rational(), roots);
    const Rational& p = roots[static_cast<std::size_t>(gen.integer(0, m - 1))];
    const ReductionResult r = reduce_root_pole(q, p);
    EXPECT_TRUE(reduction_residual(q, -1, r).is_zero());
    EXPECT_EQ(r.coeff(-1), Rational(0));
  }
}

TEST(Residual, DetectsCorruption) {
  const auto q = fixtures::quintic_example();
  ReductionResult r = reduce(q, fixtures::quintic_pole(), -3);
  r.basic[2] += Rational(1, 1000);
  EXPECT_FALSE(reduction_residual(q, -3, r).is_zero());
}

TEST(FundamentalBasis, Sizes) {
  EXPECT_EQ((FundamentalBasis{5, std::nullopt}).size(), 4u);
  const FundamentalBasis with_pole{5, Rational(3, 2)};
  EXPECT_EQ(with_pole.size(), 5u);
  EXPECT_EQ(with_pole.indices(), (std::vector<long>{-1, 0, 1, 2, 3}));
}
