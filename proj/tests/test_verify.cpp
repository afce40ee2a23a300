#include "hyperint/verify.hpp"
#include "example_data.hpp"

#include <gtest/gtest.h>

using namespace hyperint;

namespace {

const std::vector<Rational> unit_roots{Rational(1), Rational(2), Rational(3), Rational(4)};

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

}  // namespace

TEST(VerifyReductionExact, QuinticExampleAndControls) {
  const auto q = fixtures::quintic_example();
  const Rational p = fixtures::quintic_pole();
  ReductionResult r = reduce(q, p, -3);
  const auto ok = verify_reduction_exact(q, p, -3, r);
  EXPECT_TRUE(ok.pass);
  EXPECT_EQ(ok.residual, "0");
  EXPECT_TRUE(verify_reduction_exact(q, p, 0, reduce(q, p, 0)).pass);
  r.basic[1] += Rational(1, 7);
  const auto bad = verify_reduction_exact(q, p, -3, r);
  EXPECT_FALSE(bad.pass);
  EXPECT_NE(bad.residual, "0");
}

TEST(VerifyReductionNumeric, QuinticOnPositiveAndNegativeStretches) {
  const auto q = fixtures::quintic_example();
  const Rational p = fixtures::quintic_pole();
  const auto r = reduce(q, p, -3);
  EXPECT_TRUE(verify_reduction_numeric(q, p, -3, r, 0.1, 0.9).pass);
  // Q < 0 on (1, 2): the elementary boundary term changes sign.
  EXPECT_TRUE(verify_reduction_numeric(q, p, -3, r, 1.1, 1.4).pass);
  EXPECT_TRUE(verify_reduction_numeric(q, p, 0, reduce(q, p, 0), 0.1, 0.9).pass);
  EXPECT_TRUE(verify_reduction_numeric(q, p, 7, reduce(q, p, 7), 0.2, 0.7).pass);
  EXPECT_THROW(verify_reduction_numeric(q, p, -3, r, 0.5, 1.2), std::domain_error);
  EXPECT_THROW(verify_reduction_numeric(q, p, -3, r, 1.2, 1.8), std::domain_error);
}

TEST(VerifyReductionNumeric, CorruptedCoefficientFails) {
  const auto q = fixtures::quintic_example();
  const Rational p = fixtures::quintic_pole();
  auto r = reduce(q, p, -3);
  r.basic[0] += Rational(1, 100);
  EXPECT_FALSE(verify_reduction_numeric(q, p, -3, r, 0.1, 0.9).pass);
}

TEST(VerifyOrbit, ThreeIntegralsOnUnitRoots) {
  for (const auto& rep : verify_orbit_suite()) EXPECT_TRUE(rep.pass) << rep.case_id << " " << rep.residual;
  const auto rep = verify_orbit(IntegrandKind::x, Rational(2), unit_roots, Rational(10));
  EXPECT_TRUE(rep.pass) << rep.detail;
}

TEST(VerifyDefinite, UnitRootIntegrals) {
  const std::optional<Rational> p(Rational(5));
  EXPECT_TRUE(verify_definite(IntegrandKind::constant, Rational(1), unit_roots, Rational(6)).pass);
  EXPECT_TRUE(verify_definite(IntegrandKind::x, Rational(1), unit_roots, Rational(6)).pass);
  EXPECT_TRUE(verify_definite(IntegrandKind::pole, Rational(1), unit_roots, Rational(6), p).pass);
}

TEST(VerifyLauricella, IdentityDefiniteAndNegativeControl) {
  const auto id = verify_lauricella();
  EXPECT_TRUE(id.pass) << id.detail;
  EXPECT_TRUE(verify_lauricella_definite().pass);
  auto column = fixtures::quintic_u_column();
  EXPECT_TRUE(verify_lauricella(column).pass);
  column[2] = Rational(17, 45);
  EXPECT_FALSE(verify_lauricella(column).pass);
  for (const auto& rep : verify_lauricella_suite()) EXPECT_TRUE(rep.pass) << rep.case_id;
}

TEST(VerifySuites, SeededSuitesPassAndAreDeterministic) {
  const auto a = run_suite("reduction", 42, 25);
  EXPECT_EQ(a.size(), 25u);
  EXPECT_TRUE(all_pass(a));
  const auto b = run_suite("reduction", 42, 25);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
  EXPECT_TRUE(all_pass(run_suite("canonical", 42, 20)));
  const auto props = run_suite("properties", 42, 200);
  EXPECT_EQ(props.size(), 7u);
  for (const auto& rep : props) EXPECT_TRUE(rep.pass) << rep.case_id << " " << rep.detail;
  EXPECT_THROW(run_suite("nope", 1), std::invalid_argument);
}

TEST(VerifyReport, JsonShape) {
  const auto rep = verify_reduction_exact(fixtures::quintic_example(), Rational(3, 2), -3,
                                          reduce(fixtures::quintic_example(), Rational(3, 2), -3), "example");
  const Json j = to_json(rep);
  EXPECT_EQ(j["case"], "example");
  EXPECT_EQ(j["mode"], "exact");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["residual"], "0");
  EXPECT_FALSE(j.contains("tolerance"));
}
