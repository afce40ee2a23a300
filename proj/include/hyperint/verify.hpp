#pragma once

// Verification harness: exact replay of reductions, canonical identities,
// numeric cross-checks against quadrature, and the seeded property suites.
// Every check returns a report; failures are data, not exceptions.

#include "hyperint/canonical.hpp"
#include "hyperint/io.hpp"
#include "hyperint/moebius.hpp"
#include "hyperint/reduction.hpp"
#include "hyperint/sampling.hpp"
#include "hyperint/special.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hyperint {

struct VerificationReport {
  std::string case_id;
  std::string mode;  // "exact" or "numeric"
  bool pass = false;
  std::string residual;
  double tolerance = 0.0;
  std::optional<std::uint64_t> seed;
  std::string detail;
};

inline Json to_json(const VerificationReport& r) {
  Json out;
  out["case"] = r.case_id;
  out["mode"] = r.mode;
  out["pass"] = r.pass;
  out["residual"] = r.residual;
  if (r.mode == "numeric") out["tolerance"] = r.tolerance;
  if (r.seed) out["seed"] = *r.seed;
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_laurent(const LaurentPolynomial& l) {
  if (l.is_zero()) return "0";
  const Rational& p = l.center();
  const std::string base = sgn(p) < 0 ? "(x+" + to_string(Rational(-p)) + ")" : "(x-" + to_string(p) + ")";
  std::string out;
  for (const auto& [e, c] : l.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")*" + base + "^" + std::to_string(e);
  }
  return out;
}

inline double relative_gap(double got, double want) {
  return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

// ---------------------------------------------------------------------------
// Reductions.

inline VerificationReport verify_reduction_exact(const RationalPolynomial& q, const Rational& p, long n,
                                                 const ReductionResult& result, std::string case_id = "reduction") {
  const LaurentPolynomial res = reduction_residual(q, n, result);
  VerificationReport out;
  out.case_id = std::move(case_id);
  out.mode = "exact";
  out.pass = res.is_zero();
  out.residual = format_laurent(res);
  out.detail = "M=" + std::to_string(q.degree()) + " n=" + std::to_string(n) + " p=" + to_string(p);
  return out;
}

/// \int_lo^hi (x-p)^n dx / sqrt|Q| against sum_l c_l \int (basis)/sqrt|Q| plus
/// the boundary values of the elementary part. Where Q < 0 the elementary
/// part enters with the opposite sign (d(E sqrt|Q|) = -(E'Q + EQ'/2)/sqrt|Q|).
inline VerificationReport verify_reduction_numeric(const RationalPolynomial& q, const Rational& p, long n,
                                                   const ReductionResult& result, double lo, double hi,
                                                   double tol = 1e-9, std::string case_id = "reduction-numeric") {
  if (!(lo < hi)) throw std::invalid_argument("verify_reduction_numeric: need lo < hi");
  std::vector<double> c;
  for (const Rational& v : q.coeffs()) c.push_back(to_double(v));
  const Polynomial<double> qd(c);
  const double pd = to_double(p);
  const bool uses_pole = n < 0 || !is_zero(result.coeff(-1));
  if (uses_pole && pd >= lo && pd <= hi)
    throw std::domain_error("verify_reduction_numeric: pole inside the interval");
  if (qd(lo) == 0.0 || qd(hi) == 0.0) throw std::domain_error("verify_reduction_numeric: interval touches a root");

  auto integral = [&](std::function<double(double)> f) {
    QuadratureSpec spec;
    spec.radicand = qd;
    spec.factor = std::move(f);
    spec.lower = lo;
    spec.upper = hi;
    return quad_sqrt(spec);  // throws domain_error if Q changes sign inside
  };
  const double lhs = integral([&](double x) { return std::pow(x - pd, static_cast<double>(n)); });
  double rhs = 0.0;
  for (const auto& [l, coeff] : result.basic) {
    const double cd = to_double(coeff);
    if (l == -1)
      rhs += cd * integral([&](double x) { return 1.0 / (x - pd); });
    else
      rhs += cd * integral([l = l](double x) { return std::pow(x, static_cast<double>(l)); });
  }
  const double sign = qd(0.5 * (lo + hi)) > 0 ? 1.0 : -1.0;
  auto boundary = [&](double x) { return result.elementary.evaluate(x) * std::sqrt(std::fabs(qd(x))); };
  rhs += sign * (boundary(hi) - boundary(lo));

  VerificationReport out;
  out.case_id = std::move(case_id);
  out.mode = "numeric";
  out.tolerance = tol;
  const double gap = relative_gap(rhs, lhs);
  out.pass = gap <= tol;
  out.residual = format_double(gap);
  out.detail = "interval=[" + format_double(lo) + "," + format_double(hi) + "] lhs=" + format_double(lhs);
  return out;
}

/// Random reductions (M in 3..8, n in -6..15, Q(p) != 0): exact residual zero
/// and agreement with the recurrence oracle.
inline std::vector<VerificationReport> verify_reduction_suite(std::uint64_t seed, int count = 200) {
  CaseGenerator gen(seed);
  std::vector<VerificationReport> out;
  for (int i = 0; i < count; ++i) {
    const long m = gen.integer(3, 8);
    const RationalPolynomial q = gen.polynomial(m);
    Rational p = gen.rational();
    while (is_zero(q(p))) p = gen.rational();
    const long n = gen.integer(-6, 15);
    const ReductionResult r = reduce(q, p, n);
    VerificationReport rep = verify_reduction_exact(q, p, n, r, "reduction/" + std::to_string(i));
    const bool oracle = r == recurrence_oracle(q, p, n);
    rep.pass = rep.pass && oracle;
    if (!oracle) rep.detail += " oracle=mismatch";
    rep.seed = seed;
    out.push_back(std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical forms.

inline VerificationReport verify_canonical(const Rational& leading, const std::vector<Rational>& roots,
                                           std::string case_id = "canonical") {
  VerificationReport out;
  out.case_id = std::move(case_id);
  out.mode = "exact";
  CanonicalForm<Rational> f;
  try {
    f = canonical_form(leading, roots);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::domain_error*>(&e)) throw;
    out.residual = "n/a";
    out.detail = e.what();
    return out;
  }
  const RationalPolynomial res = canonical_identity_residual(f);
  bool ordered = !f.k.empty() && f.k.front() < Rational(1) && Rational(0) < f.k.back();
  for (std::size_t j = 1; j < f.k.size(); ++j) ordered = ordered && f.k[j] < f.k[j - 1];
  const Orientation o = classify_cycle(roots);
  const int expected_eps = o == Orientation::increasing ? 1 : -1;
  out.pass = res.is_zero() && ordered && f.epsilon == expected_eps;
  out.residual = res.is_zero() ? "0" : "nonzero polynomial of degree " + std::to_string(res.degree());
  out.detail = "N=" + std::to_string(roots.size()) + " orientation=" + to_string(o) +
               " epsilon=" + std::to_string(f.epsilon) + (ordered ? "" : " moduli-out-of-order");
  return out;
}

/// Random cyclically monotonous rational root sets with N in {4, 6, 8}.
inline std::vector<VerificationReport> verify_canonical_suite(std::uint64_t seed, int count = 50) {
  CaseGenerator gen(seed);
  std::vector<VerificationReport> out;
  for (int i = 0; i < count; ++i) {
    const long n = 4 + 2 * gen.integer(0, 2);
    std::vector<Rational> roots = gen.distinct_sorted(static_cast<std::size_t>(n));
    std::rotate(roots.begin(), roots.begin() + gen.integer(0, n - 1), roots.end());
    if (gen.integer(0, 1) == 1) std::reverse(roots.begin(), roots.end());
    VerificationReport rep = verify_canonical(gen.nonzero_rational(), roots, "canonical/" + std::to_string(i));
    rep.seed = seed;
    out.push_back(std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elliptic orbit.

/// Quadrature of R(x) dx / sqrt|Q| over the increasing arc from `start` to u
/// (split at [inf] when u < start); a pole on the arc is taken as a
/// principal value.
inline double arc_quadrature(IntegrandKind kind, double leading, const std::vector<double>& roots, double start,
                             double u, std::optional<double> p = std::nullopt, double rel_tol = 1e-12) {
  const Polynomial<double> radicand = poly_from_roots(leading, std::span<const double>(roots));
  const double inf = std::numeric_limits<double>::infinity();
  auto piece = [&](double lo, double hi) {
    QuadratureSpec spec;
    spec.radicand = radicand;
    spec.lower = lo;
    spec.upper = hi;
    spec.rel_tol = rel_tol;
    switch (kind) {
      case IntegrandKind::constant: break;
      case IntegrandKind::x: spec.factor = [](double x) { return x; }; break;
      case IntegrandKind::pole: {
        const double x0 = p.value();
        if (x0 > lo && x0 < hi)
          spec.pv_pole = x0;
        else
          spec.factor = [x0](double x) { return 1.0 / (x - x0); };
        break;
      }
    }
    return quad_sqrt(spec);
  };
  if (u > start) return piece(start, u);
  return piece(start, inf) + piece(-inf, u);
}

/// The defining integral over L(x4, u) after x-canonical relabeling.
inline double definite_quadrature(IntegrandKind kind, const Rational& leading, const std::vector<Rational>& roots,
                                  const Rational& u, const std::optional<Rational>& p = std::nullopt) {
  const CanonicalOrder<Rational> order = x_canonical(roots, u);
  std::vector<double> rd;
  for (const Rational& r : roots) rd.push_back(to_double(r));
  std::optional<double> pd;
  if (p) pd = to_double(*p);
  return arc_quadrature(kind, to_double(leading), rd, to_double(order.cycle.roots[3]), to_double(u), pd);
}

/// All eight D4 variants agree with each other and with quadrature, and the
/// exact prefactor |a4 (x3-x1)(x4-x2)| is the same for each.
inline VerificationReport verify_orbit(IntegrandKind kind, const Rational& leading, const std::vector<Rational>& roots,
                                       const Rational& u, const std::optional<Rational>& p = std::nullopt,
                                       double tol = 1e-9, std::string case_id = "") {
  VerificationReport out;
  out.case_id = case_id.empty() ? "orbit/" + to_string(kind) : std::move(case_id);
  out.mode = "numeric";
  out.tolerance = tol;
  const auto orbit = d4_orbit(kind, leading, roots, u, p);
  const double want = definite_quadrature(kind, leading, roots, u, p);
  double worst = 0.0;
  bool same_prefactor = true;
  for (const auto& v : orbit) {
    worst = std::max(worst, relative_gap(v.formula.value(), want));
    for (const auto& w : orbit) worst = std::max(worst, relative_gap(v.formula.value(), w.formula.value()));
    same_prefactor = same_prefactor && v.prefactor_sq == orbit.front().prefactor_sq;
  }
  out.pass = worst <= tol && same_prefactor;
  out.residual = format_double(worst);
  out.detail = "variants=" + std::to_string(orbit.size()) + " quadrature=" + format_double(want) +
               " prefactor_sq=" + to_string(orbit.front().prefactor_sq) + (same_prefactor ? "" : " prefactor-mismatch");
  return out;
}

/// Definite formula (identity element) against quadrature.
inline VerificationReport verify_definite(IntegrandKind kind, const Rational& leading, const std::vector<Rational>& roots,
                                          const Rational& u, const std::optional<Rational>& p = std::nullopt,
                                          double tol = 1e-9) {
  VerificationReport out;
  out.case_id = "definite/" + to_string(kind);
  out.mode = "numeric";
  out.tolerance = tol;
  const double got = elliptic_definite(kind, leading, roots, u, p).value();
  const double want = definite_quadrature(kind, leading, roots, u, p);
  const double gap = relative_gap(got, want);
  out.pass = gap <= tol;
  out.residual = format_double(gap);
  out.detail = "formula=" + format_double(got) + " quadrature=" + format_double(want);
  return out;
}

// ---------------------------------------------------------------------------
// Lauricella identity for the quintic t(1-t)(1-t/4)(1-t/3)(1-t/2), p = 3/2, n = -3.

inline RationalPolynomial lauricella_quintic() {
  return RationalPolynomial(
      {Rational(0), Rational(1), Rational(-25, 12), Rational(35, 24), Rational(-5, 12), Rational(1, 24)});
}

/// F_D(1/2; 3, 1/2, 1/2, 1/2; 1; 2/3, 1/4, 1/3, 1/2)
///   = sum_{l=-1}^{3} (-3/2)^(l+3) U_{l,-3} F_D(1/2; -l, 1/2, 1/2, 1/2; 1; ...).
/// `column` overrides U (negative controls); by default it is recomputed.
inline VerificationReport verify_lauricella(std::optional<std::map<long, Rational>> column = std::nullopt,
                                            double tol = 1e-6) {
  if (!column) column = solve_u_column(lauricella_quintic(), Rational(3, 2), -3).entries;
  const std::vector<double> x{2.0 / 3.0, 0.25, 1.0 / 3.0, 0.5};
  auto fd = [&](double b1) { return lauricella_fd(0.5, {b1, 0.5, 0.5, 0.5}, 1.0, x); };
  const double lhs = fd(3.0);
  double rhs = 0.0;
  for (long l = -1; l <= 3; ++l) {
    auto it = column->find(l);
    const double u = it == column->end() ? 0.0 : to_double(it->second);
    rhs += std::pow(-1.5, static_cast<double>(l + 3)) * u * fd(static_cast<double>(-l));
  }
  VerificationReport out;
  out.case_id = "lauricella/identity";
  out.mode = "numeric";
  out.tolerance = tol;
  const double gap = std::fabs(lhs - rhs) / std::fabs(lhs);
  out.pass = gap <= tol;
  out.residual = format_double(gap);
  out.detail = "lhs=" + format_double(lhs) + " rhs=" + format_double(rhs);
  return out;
}

/// The reduction of \int_0^1 (t-3/2)^-3 dt / sqrt(Q) on the quintic: the
/// elementary part vanishes at both ends.
inline VerificationReport verify_lauricella_definite(double tol = 1e-6) {
  const RationalPolynomial q = lauricella_quintic();
  const ReductionResult r = reduce(q, Rational(3, 2), -3);
  std::vector<double> c;
  for (const Rational& v : q.coeffs()) c.push_back(to_double(v));
  auto integral = [&](std::function<double(double)> f) {
    QuadratureSpec spec;
    spec.radicand = Polynomial<double>(c);
    spec.factor = std::move(f);
    spec.lower = 0.0;
    spec.upper = 1.0;
    return quad_sqrt(spec);
  };
  const double lhs = integral([](double t) { return std::pow(t - 1.5, -3.0); });
  double rhs = 0.0;
  for (const auto& [l, coeff] : r.basic) {
    const double cd = to_double(coeff);
    if (l == -1)
      rhs += cd * integral([](double t) { return 1.0 / (t - 1.5); });
    else
      rhs += cd * integral([l = l](double t) { return std::pow(t, static_cast<double>(l)); });
  }
  VerificationReport out;
  out.case_id = "lauricella/definite-quintic";
  out.mode = "numeric";
  out.tolerance = tol;
  const double gap = relative_gap(rhs, lhs);
  out.pass = gap <= tol;
  out.residual = format_double(gap);
  out.detail = "lhs=" + format_double(lhs) + " rhs=" + format_double(rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Seeded properties, one report per family.

namespace detail {

struct PropertyTally {
  explicit PropertyTally(std::string family) : name(std::move(family)) {}

  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void check(bool ok, int i) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = "instance " + std::to_string(i);
  }

  VerificationReport report(std::uint64_t seed) const {
    VerificationReport r;
    r.case_id = "property/" + name;
    r.mode = "exact";
    r.pass = failures == 0;
    r.residual = std::to_string(failures);
    r.seed = seed;
    r.detail = std::to_string(cases) + " instances" + (failures ? ", first failure at " + first_failure : "");
    return r;
  }
};

inline Homography<Rational> random_homography(CaseGenerator& gen) {
  for (;;) {
    Rational a = gen.rational(), b = gen.rational(), c = gen.rational(), d = gen.rational();
    if (!is_zero(Rational(a * d - b * c))) return Homography<Rational>(a, b, c, d);
  }
}

inline ProjPoint<Rational> random_point(CaseGenerator& gen) {
  if (gen.integer(0, 9) == 0) return ProjPoint<Rational>::infinity();
  return ProjPoint<Rational>(gen.rational(30, 7));
}

inline std::vector<Rational> random_cycle(CaseGenerator& gen, long n) {
  std::vector<Rational> roots = gen.distinct_sorted(static_cast<std::size_t>(n));
  std::rotate(roots.begin(), roots.begin() + gen.integer(0, n - 1), roots.end());
  if (gen.integer(0, 1) == 1) std::reverse(roots.begin(), roots.end());
  return roots;
}

inline RationalPolynomial random_poly_upto(CaseGenerator& gen, long degree) {
  std::vector<Rational> c;
  for (long j = 0; j <= degree; ++j) c.push_back(gen.rational());
  return RationalPolynomial(std::move(c));
}

}  // namespace detail

/// Cross-ratio invariance under homographies, monotone t_k for cyclically
/// monotonous roots, orientation of x -> (b,c;a,x), the r_k(A) operator
/// laws, the dihedral group law, the sigma-coefficient identity and the
/// split/reciprocal forms of a homography.
inline std::vector<VerificationReport> verify_property_suite(std::uint64_t seed, int count = 1000) {
  using detail::PropertyTally;
  CaseGenerator gen(seed);
  PropertyTally cross{"cross-ratio-invariance"}, tk{"monotone-t_k"}, orient{"orientation"}, rop{"r_k-operator"},
      group{"dihedral-group-law"}, sigma{"sigma-coefficients"}, split{"homography-split"};

  for (int i = 0; i < count; ++i) {
    // Cross-ratio invariance.
    {
      const Homography<Rational> g = detail::random_homography(gen);
      std::vector<ProjPoint<Rational>> d;
      while (d.size() < 4) {
        ProjPoint<Rational> x = detail::random_point(gen);
        if (std::find(d.begin(), d.end(), x) == d.end()) d.push_back(x);
      }
      cross.check(cross_ratio(g(d[0]), g(d[1]), g(d[2]), g(d[3])) == cross_ratio(d[0], d[1], d[2], d[3]), i);
    }
    // t_k = (x_{N-1}, x_N; x_1, x_k) strictly increasing and > 1.
    {
      const long n = gen.integer(4, 8);
      const std::vector<Rational> x = detail::random_cycle(gen, n);
      bool ok = true;
      Rational prev(1);
      for (long j = 1; j + 2 < n; ++j) {
        const Rational t = cross_ratio_value(x[n - 2], x[n - 1], x[0], x[j]);
        ok = ok && prev < t;
        prev = t;
      }
      tk.check(ok, i);
    }
    // x -> (b,c;a,x) preserves orientation for (a,b,c) cyclically
    // increasing and reverses it for decreasing; either way the image of a
    // cyclically monotonous (a,b,c,...) is cyclically increasing, as
    // (1, [inf], 0) is. Dropping [inf] keeps the cyclic order.
    {
      const std::vector<Rational> x = detail::random_cycle(gen, gen.integer(4, 7));
      std::vector<Rational> images{Rational(1), Rational(0)};
      for (std::size_t j = 3; j < x.size(); ++j) images.push_back(cross_ratio_value(x[1], x[2], x[0], x[j]));
      orient.check(classify_cycle(images) == Orientation::increasing, i);
    }
    // r_k(A) laws.
    {
      const Homography<Rational> a = detail::random_homography(gen);
      const long k = gen.integer(0, 4), l = gen.integer(0, 4);
      const RationalPolynomial f = detail::random_poly_upto(gen, k), g = detail::random_poly_upto(gen, l);
      bool ok = r_operator(a, k, f) * r_operator(a, l, g) == r_operator(a, k + l, f * g);
      RationalPolynomial dk = RationalPolynomial::constant(Rational(1), "t");
      for (long j = 0; j < k; ++j) dk *= a.denominator();
      ok = ok && r_operator(a, k + l, g) == dk * r_operator(a, l, g);
      const Rational x0 = gen.rational();
      const RationalPolynomial lin(std::vector<Rational>{Rational(-x0), Rational(1)});
      ok = ok && r_operator(a, 1, lin) == a.numerator() - a.denominator() * x0;
      RationalPolynomial prod = RationalPolynomial::constant(Rational(1)), images = RationalPolynomial::constant(Rational(1), "t");
      for (long j = 0; j < l + 1; ++j) {
        const Rational r = gen.rational();
        prod *= RationalPolynomial(std::vector<Rational>{Rational(-r), Rational(1)});
        images *= a.numerator() - a.denominator() * r;
      }
      ok = ok && r_operator(a, l + 1, prod) == images;
      const Rational t = gen.rational();
      const Rational dt = a.denominator()(t);
      if (!is_zero(dt)) {
        const Rational psi = a(ProjPoint<Rational>(t)).value();
        ok = ok && r_operator(a, k, f)(t) == ipow(dt, static_cast<unsigned>(k)) * f(psi);
      }
      rop.check(ok, i);
    }
    // Dihedral group law.
    {
      const long n = gen.integer(3, 8);
      const auto elems = dihedral_group(n);
      auto pick = [&]() { return elems[static_cast<std::size_t>(gen.integer(0, 2 * n - 1))]; };
      const DihedralElement g = pick(), h = pick(), e = pick();
      std::vector<long> labels(static_cast<std::size_t>(n));
      for (long j = 0; j < n; ++j) labels[static_cast<std::size_t>(j)] = j;
      bool ok = g.compose(h).compose(e) == g.compose(h.compose(e));
      ok = ok && g.compose(h).apply(labels) == g.apply(h.apply(labels));
      ok = ok && g.compose(DihedralElement::identity(n)) == g && DihedralElement::identity(n).compose(g) == g;
      bool has_inverse = false;
      for (const auto& c : elems) has_inverse = has_inverse || c.compose(g).is_identity();
      group.check(ok && has_inverse, i);
    }
    // t(1-t) prod(1 - k_j t) = sum a_i t^i, a_i = (-1)^(i-1) sigma_{i-1}(1, k_2, ...).
    {
      const long n = gen.integer(3, 8);
      std::vector<Rational> ks{Rational(1)};
      RationalPolynomial w(std::vector<Rational>{Rational(0), Rational(1), Rational(-1)}, "t");
      for (long j = 2; j <= n - 2; ++j) {
        Rational kj = gen.rational();
        while (is_zero(kj)) kj = gen.rational();
        ks.push_back(kj);
        w *= RationalPolynomial(std::vector<Rational>{Rational(1), Rational(-kj)}, "t");
      }
      bool ok = w[0] == Rational(0) && w.degree() == n - 1;
      for (long idx = 1; idx <= n - 1; ++idx) {
        const Rational s = elementary_symmetric(std::span<const Rational>(ks), idx - 1);
        ok = ok && w[idx] == (idx % 2 == 1 ? s : Rational(-s));
      }
      sigma.check(ok, i);
    }
    // phi(t) = phi(inf) + (phi(0) - phi(inf)) / (1 - t / phi^-1(inf)),
    // phi^-1(x) = (phi(inf), phi(0); phi(1), x), and the 1/(phi - p) forms.
    {
      const Homography<Rational> a = detail::random_homography(gen);
      if (is_zero(a.c()) || is_zero(a.d())) {
        split.check(true, i);
      } else {
        const SplitForm<Rational> s = homography_canonical_split(a);
        const Rational t = gen.rational();
        bool ok = true;
        const ProjPoint<Rational> image = a(ProjPoint<Rational>(t));
        if (image.is_finite() && t != s.pole) ok = ok && s(t) == image.value();
        const ProjPoint<Rational> one = a(ProjPoint<Rational>(Rational(1)));
        const Rational x = gen.rational(30, 7);
        if (one.is_finite() && one.value() != s.phi_0 && one.value() != s.phi_inf)
          ok = ok && cross_ratio<Rational>(s.phi_inf, s.phi_0, one.value(), x) == a.inverse()(ProjPoint<Rational>(x));
        const Rational p = gen.rational();
        const ReciprocalForm<Rational> rf = reciprocal_decompose(a, p);
        if (image.is_finite() && image.value() != p && !is_zero(t) && t != rf.pole)
          ok = ok && rf(t) == Rational(1) / (image.value() - p);
        split.check(ok, i);
      }
    }
  }
  std::vector<VerificationReport> out;
  for (const PropertyTally* t : {&cross, &tk, &orient, &rop, &group, &sigma, &split}) out.push_back(t->report(seed));
  return out;
}

// ---------------------------------------------------------------------------
// Suites.

inline std::vector<VerificationReport> verify_orbit_suite(double tol = 1e-9) {
  const std::vector<Rational> roots{Rational(1), Rational(2), Rational(3), Rational(4)};
  const std::optional<Rational> p(Rational(5));
  return {verify_orbit(IntegrandKind::constant, Rational(1), roots, Rational(6), std::nullopt, tol),
          verify_orbit(IntegrandKind::x, Rational(1), roots, Rational(6), std::nullopt, tol),
          verify_orbit(IntegrandKind::pole, Rational(1), roots, Rational(6), p, tol)};
}

inline std::vector<VerificationReport> verify_lauricella_suite(double tol = 1e-6) {
  std::vector<VerificationReport> out{verify_lauricella(std::nullopt, tol), verify_lauricella_definite(tol)};
  // Negative control: a perturbed U coefficient must break the identity.
  auto column = solve_u_column(lauricella_quintic(), Rational(3, 2), -3).entries;
  column[0] += Rational(1, 100);
  VerificationReport control = verify_lauricella(column, tol);
  control.case_id = "lauricella/negative-control";
  control.pass = !control.pass;
  control.detail = "perturbed U_{0,-3}; " + control.detail;
  out.push_back(control);
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"reduction", "canonical", "orbit", "lauricella", "properties"};
  return names;
}

/// "all" runs every suite in the order of suite_names().
inline std::vector<VerificationReport> run_suite(const std::string& name, std::uint64_t seed,
                                                 std::optional<int> count = std::nullopt,
                                                 std::optional<double> tolerance = std::nullopt) {
  if (name == "all") {
    std::vector<VerificationReport> out;
    for (const std::string& s : suite_names()) {
      auto part = run_suite(s, seed, count, tolerance);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "reduction") return verify_reduction_suite(seed, count.value_or(200));
  if (name == "canonical") return verify_canonical_suite(seed, count.value_or(50));
  if (name == "orbit") return verify_orbit_suite(tolerance.value_or(1e-9));
  if (name == "lauricella") return verify_lauricella_suite(tolerance.value_or(1e-6));
  if (name == "properties") return verify_property_suite(seed, count.value_or(1000));
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace hyperint
