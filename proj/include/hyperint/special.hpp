#pragma once

// Double-precision numerics: Legendre F and Pi through Carlson's symmetric
// integrals, the canonical-weight integrals I0(t,k) and P(t,h,k), a
// quadrature oracle for \int R(x) dx / sqrt|P(x)|, and Lauricella F_D.

#include "hyperint/polynomial.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/ellint_rf.hpp>
#include <boost/math/special_functions/ellint_rj.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hyperint {

namespace detail {

inline constexpr double half_pi = std::numbers::pi / 2;

// phi = m*pi + r with r in [-pi/2, pi/2].
inline long reduce_angle(double phi, double& r) {
  const long m = std::lround(phi / std::numbers::pi);
  r = phi - static_cast<double>(m) * std::numbers::pi;
  return m;
}

// sin(phi) R_F(cos^2, 1 - l^2 sin^2, 1) for phi in [-pi/2, pi/2].
inline double carlson_f(double phi, double l) {
  const double s = std::sin(phi), c = std::cos(phi);
  const double delta2 = 1.0 - l * l * s * s;
  if (s == 0.0) return 0.0;
  return s * boost::math::ellint_rf(c * c, delta2, 1.0);
}

// Third kind on [-pi/2, pi/2]; a negative last argument of R_J yields the
// Cauchy principal value.
inline double carlson_pi(double phi, double h, double l) {
  const double s = std::sin(phi), c = std::cos(phi);
  if (s == 0.0) return 0.0;
  const double s2 = s * s;
  const double delta2 = 1.0 - l * l * s2;
  const double f = s * boost::math::ellint_rf(c * c, delta2, 1.0);
  if (h == 0.0) return f;
  return f + h / 3.0 * s2 * s * boost::math::ellint_rj(c * c, delta2, 1.0, 1.0 - h * s2);
}

}  // namespace detail

/// F(phi, l) = \int_0^phi da / sqrt(1 - l^2 sin^2 a).
inline double ellip_F(double phi, double l) {
  double r = 0.0;
  const long m = detail::reduce_angle(phi, r);
  const double s = std::sin(std::min(std::fabs(phi), detail::half_pi));
  if (l * l * s * s >= 1.0) throw std::domain_error("ellip_F: l^2 sin^2(phi) >= 1");
  const double part = detail::carlson_f(r, l);
  if (m == 0) return part;
  return 2.0 * static_cast<double>(m) * detail::carlson_f(detail::half_pi, l) + part;
}

/// Pi(phi, h, l) = \int_0^phi da / ((1 - h sin^2 a) sqrt(1 - l^2 sin^2 a)).
/// Rejects a characteristic singularity on the path.
inline double ellip_Pi(double phi, double h, double l) {
  const double s = std::sin(std::min(std::fabs(phi), detail::half_pi));
  if (l * l * s * s >= 1.0) throw std::domain_error("ellip_Pi: l^2 sin^2(phi) >= 1");
  if (1.0 - h * s * s < 1e-12) throw std::domain_error("ellip_Pi: 1 - h sin^2 vanishes on the path");
  double r = 0.0;
  const long m = detail::reduce_angle(phi, r);
  const double part = detail::carlson_pi(r, h, l);
  if (m == 0) return part;
  return 2.0 * static_cast<double>(m) * detail::carlson_pi(detail::half_pi, h, l) + part;
}

/// Pi(phi, h, l) as a Cauchy principal value when 1 - h sin^2 a changes sign
/// inside (0, phi). |phi| <= pi/2. A zero at the endpoint itself diverges.
inline double ellip_Pi_pv(double phi, double h, double l) {
  if (std::fabs(phi) > detail::half_pi + 1e-15) throw std::domain_error("ellip_Pi_pv: |phi| > pi/2");
  const double s = std::sin(phi);
  if (l * l * s * s >= 1.0) throw std::domain_error("ellip_Pi_pv: l^2 sin^2(phi) >= 1");
  if (std::fabs(1.0 - h * s * s) < 1e-12) throw std::domain_error("ellip_Pi_pv: singular endpoint");
  return detail::carlson_pi(phi, h, l);
}

/// I0(t, k) = \int_0^t ds / sqrt(s (1-s) (1-ks)) = 2 F(arcsin sqrt t, sqrt k).
inline double canonical_I0(double t, double k) {
  if (t < 0.0 || t > 1.0 || k < 0.0 || k >= 1.0) throw std::domain_error("canonical_I0: need 0 <= t <= 1, 0 <= k < 1");
  return 2.0 * ellip_F(std::asin(std::sqrt(t)), std::sqrt(k));
}

/// P(t, h, k) = \int_0^t ds / ((1-hs) sqrt(s (1-s) (1-ks))) = 2 Pi(arcsin sqrt t, h, sqrt k).
inline double canonical_P(double t, double h, double k) {
  if (t < 0.0 || t > 1.0 || k < 0.0 || k >= 1.0) throw std::domain_error("canonical_P: need 0 <= t <= 1, 0 <= k < 1");
  return 2.0 * ellip_Pi(std::asin(std::sqrt(t)), h, std::sqrt(k));
}

// ---------------------------------------------------------------------------
// Quadrature.

namespace detail {

/// Adaptive bisection over 20-point Gauss-Legendre panels; a panel is
/// accepted when it agrees with the sum of its halves. The absolute target
/// is rel_tol times a coarse estimate of \int |f|.
class AdaptiveGauss {
 public:
  AdaptiveGauss(std::function<double(double)> f, double rel_tol, int max_depth)
      : f_(std::move(f)), rel_tol_(rel_tol), max_depth_(max_depth) {}

  double integrate(double lo, double hi) {
    if (lo == hi) return 0.0;
    constexpr int panels = 8;
    std::vector<double> parts;
    double magnitude = 0.0;
    const double w = (hi - lo) / panels;
    for (int i = 0; i < panels; ++i) {
      const double a = lo + i * w, b = lo + (i + 1) * w;
      parts.push_back(panel(a, b));
      magnitude += std::fabs(
          boost::math::quadrature::gauss<double, 20>::integrate([this](double x) { return std::fabs(f_(x)); }, a, b));
    }
    abs_tol_ = std::max(rel_tol_ * magnitude, std::numeric_limits<double>::min());
    double total = 0.0;
    for (int i = 0; i < panels; ++i) total += refine(lo + i * w, lo + (i + 1) * w, parts[i], 0);
    return total;
  }

 private:
  double panel(double a, double b) const {
    return boost::math::quadrature::gauss<double, 20>::integrate(f_, a, b);
  }

  double refine(double a, double b, double whole, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = panel(a, mid), right = panel(mid, b);
    if (!std::isfinite(left + right)) throw std::runtime_error("quadrature: non-finite integrand");
    if (std::fabs(left + right - whole) <= abs_tol_) return left + right;
    if (depth >= max_depth_) throw std::runtime_error("quadrature: no convergence within depth budget");
    return refine(a, mid, left, depth + 1) + refine(mid, b, right, depth + 1);
  }

  std::function<double(double)> f_;
  double rel_tol_;
  int max_depth_;
  double abs_tol_ = 0.0;
};

}  // namespace detail

/// \int_lower^upper factor(x) dx / sqrt|radicand(x)|, or, with `pv_pole`
/// set to x0, the principal value of \int factor(x) dx / ((x - x0) sqrt|radicand(x)|).
/// Endpoints may be roots of the radicand or +-infinity; the radicand must
/// keep one sign inside the interval.
struct QuadratureSpec {
  std::function<double(double)> factor = [](double) { return 1.0; };
  Polynomial<double> radicand = Polynomial<double>::constant(1.0);
  double lower = 0.0;
  double upper = 1.0;
  std::optional<double> pv_pole;
  double rel_tol = 1e-13;
  int max_depth = 24;
};

namespace detail {

class SqrtQuadrature {
 public:
  explicit SqrtQuadrature(const QuadratureSpec& spec) : spec_(spec) {
    const auto& c = spec.radicand.coeffs();
    reversed_ = Polynomial<double>(std::vector<double>(c.rbegin(), c.rend()));
  }

  void check_sign(double lo, double hi) const {
    // Sample through an arctan map so infinite ends are covered too.
    const double alo = std::atan(lo), ahi = std::atan(hi);
    int sign = 0;
    constexpr int samples = 512;
    for (int i = 1; i < samples; ++i) {
      const double v = spec_.radicand(std::tan(alo + (ahi - alo) * i / samples));
      const int s = (v > 0) - (v < 0);
      if (s == 0) continue;
      if (sign == 0) sign = s;
      if (s != sign) throw std::domain_error("quad_sqrt: radicand changes sign inside the interval");
    }
    if (sign == 0) throw std::domain_error("quad_sqrt: radicand vanishes on the interval");
  }

  /// Oriented lo < hi, no pole inside.
  double plain(double lo, double hi) const {
    if (lo == hi) return 0.0;
    if (std::isinf(lo) && std::isinf(hi)) return plain(lo, 0.0) + plain(0.0, hi);
    if (std::isinf(hi)) {
      const double c = std::fabs(lo) + 1.0;
      return plain(lo, c) + tail(1.0 / c);
    }
    if (std::isinf(lo)) {
      const double c = -(std::fabs(hi) + 1.0);
      return -tail(1.0 / c) + plain(c, hi);
    }
    const double mid = 0.5 * (lo + hi);
    return anchored(lo, mid - lo) - anchored(hi, mid - hi);
  }

  /// Symmetric window around the pole x0: \int_0^delta [F(x0+y) + F(x0-y)] dy.
  double window(double x0, double delta) const {
    const Polynomial<double> q = poly_shift(spec_.radicand, x0);
    AdaptiveGauss g(
        [&](double y) {
          const double up = spec_.factor(x0 + y) / std::sqrt(std::fabs(q(y)));
          const double down = spec_.factor(x0 - y) / std::sqrt(std::fabs(q(-y)));
          return (up - down) / y;
        },
        spec_.rel_tol, spec_.max_depth);
    return g.integrate(0.0, delta);
  }

 private:
  double pole_term(double offset_from_pole) const {
    return spec_.pv_pole ? 1.0 / offset_from_pole : 1.0;
  }

  // An endpoint root leaves a rounding residue in the constant term, which
  // would put a spurious zero of the radicand just inside the interval.
  static Polynomial<double> snap_root(const Polynomial<double>& q) {
    std::vector<double> c = q.coeffs();
    double scale = 0.0;
    for (double v : c) scale += std::fabs(v);
    if (!c.empty() && std::fabs(c[0]) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) c[0] = 0.0;
    return Polynomial<double>(std::move(c));
  }

  // \int_anchor^{anchor+len} with y = len sin^2(theta); the radicand is
  // re-expanded about the anchor so a root there keeps full precision.
  double anchored(double anchor, double len) const {
    const Polynomial<double> q = snap_root(poly_shift(spec_.radicand, anchor));
    const double to_pole = spec_.pv_pole ? anchor - *spec_.pv_pole : 0.0;
    AdaptiveGauss g(
        [&](double th) {
          const double s = std::sin(th), c = std::cos(th);
          const double y = len * s * s;
          return spec_.factor(anchor + y) * pole_term(to_pole + y) / std::sqrt(std::fabs(q(y))) * len * 2.0 * s * c;
        },
        spec_.rel_tol, spec_.max_depth);
    return g.integrate(0.0, half_pi);
  }

  // \int over x = 1/s for s between 0 and s_end: F(1/s) / s^2 with
  // s^M Q(1/s) = reversed(s).
  double tail(double s_end) const {
    const double m = static_cast<double>(spec_.radicand.degree());
    const double x0 = spec_.pv_pole.value_or(0.0);
    AdaptiveGauss g(
        [&](double th) {
          const double sn = std::sin(th), cs = std::cos(th);
          const double s = s_end * sn * sn;
          const double pole = spec_.pv_pole ? s / (1.0 - x0 * s) : 1.0;
          const double v = spec_.factor(1.0 / s) * pole * std::pow(std::fabs(s), 0.5 * m) /
                           (s * s * std::sqrt(std::fabs(reversed_(s))));
          return v * s_end * 2.0 * sn * cs;
        },
        spec_.rel_tol, spec_.max_depth);
    return g.integrate(0.0, half_pi);
  }

  const QuadratureSpec& spec_;
  Polynomial<double> reversed_;
};

}  // namespace detail

inline double quad_sqrt(const QuadratureSpec& spec) {
  if (std::isnan(spec.lower) || std::isnan(spec.upper)) throw std::invalid_argument("quad_sqrt: NaN bound");
  if (spec.lower > spec.upper) {
    QuadratureSpec flipped = spec;
    std::swap(flipped.lower, flipped.upper);
    return -quad_sqrt(flipped);
  }
  const double lo = spec.lower, hi = spec.upper;
  if (lo == hi) return 0.0;
  detail::SqrtQuadrature q(spec);
  q.check_sign(lo, hi);
  if (!spec.pv_pole) return q.plain(lo, hi);

  const double x0 = *spec.pv_pole;
  if (!(x0 > lo && x0 < hi)) throw std::domain_error("quad_sqrt: principal-value pole outside the interval");
  double room = std::numeric_limits<double>::infinity();
  if (std::isfinite(lo)) room = std::min(room, x0 - lo);
  if (std::isfinite(hi)) room = std::min(room, hi - x0);
  const double delta = std::isfinite(room) ? 0.5 * room : 1.0;
  return q.plain(lo, x0 - delta) + q.window(x0, delta) + q.plain(x0 + delta, hi);
}

// ---------------------------------------------------------------------------
// Lauricella F_D.

/// F_D(a; b_1..b_n; c; x_1..x_n) by the Euler integral
///   K \int_0^1 t^{a-1} (1-t)^{c-a-1} prod (1 - x_i t)^{-b_i} dt,
/// K = Gamma(c) / (Gamma(a) Gamma(c-a)), for c > a > 0 and x_i < 1.
inline double lauricella_fd(double a, const std::vector<double>& b, double c, const std::vector<double>& x,
                            double rel_tol = 1e-13) {
  if (b.size() != x.size()) throw std::invalid_argument("lauricella_fd: b and x differ in length");
  if (!(c > a && a > 0.0)) throw std::domain_error("lauricella_fd: integral route needs c > a > 0");
  for (double xi : x)
    if (!(xi < 1.0)) throw std::domain_error("lauricella_fd: integral route needs x_i < 1");
  auto g = [&](double t) {
    double v = 1.0;
    for (std::size_t i = 0; i < b.size(); ++i) v *= std::pow(1.0 - x[i] * t, -b[i]);
    return v;
  };
  const double e = c - a;
  // t = s^(1/a) near 0 and 1 - t = s^(1/e) near 1 absorb the endpoint powers.
  detail::AdaptiveGauss left(
      [&](double s) {
        const double t = std::pow(s, 1.0 / a);
        return std::pow(1.0 - t, e - 1.0) * g(t) / a;
      },
      rel_tol, 24);
  detail::AdaptiveGauss right(
      [&](double s) {
        const double t = 1.0 - std::pow(s, 1.0 / e);
        return std::pow(t, a - 1.0) * g(t) / e;
      },
      rel_tol, 24);
  const double integral = left.integrate(0.0, std::pow(0.5, a)) + right.integrate(0.0, std::pow(0.5, e));
  const double k = std::exp(std::lgamma(c) - std::lgamma(a) - std::lgamma(e));
  return k * integral;
}

/// Multiple power series of F_D, summed by total degree d:
///   sum_d (a)_d / (c)_d * [z^d] prod_i (1 - x_i z)^{-b_i}.
/// Stops after 20 consecutive degrees below eps * |sum|.
inline double lauricella_fd_series(double a, const std::vector<double>& b, double c, const std::vector<double>& x,
                                   long max_degree = 20000) {
  if (b.size() != x.size()) throw std::invalid_argument("lauricella_fd_series: b and x differ in length");
  for (double xi : x)
    if (!(std::fabs(xi) < 1.0)) throw std::domain_error("lauricella_fd_series: needs |x_i| < 1");
  if (c <= 0.0 && std::floor(c) == c) throw std::domain_error("lauricella_fd_series: c is a non-positive integer");
  const std::size_t n = b.size();
  // series[i][j] = (b_i)_j x_i^j / j!; prod[i][d] = coefficient of z^d in the
  // product of the first i+1 series.
  std::vector<std::vector<double>> series(n), prod(n);
  double ratio = 1.0;  // (a)_d / (c)_d
  double sum = 0.0;
  int quiet = 0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (long d = 0; d <= max_degree; ++d) {
    const auto du = static_cast<std::size_t>(d);
    for (std::size_t i = 0; i < n; ++i) {
      series[i].push_back(d == 0 ? 1.0 : series[i][du - 1] * (b[i] + d - 1) * x[i] / static_cast<double>(d));
      double v = 0.0;
      if (i == 0) {
        v = series[0][du];
      } else {
        for (std::size_t j = 0; j <= du; ++j) v += prod[i - 1][du - j] * series[i][j];
      }
      prod[i].push_back(v);
    }
    if (d > 0) ratio *= (a + d - 1) / (c + d - 1);
    const double term = ratio * (n == 0 ? (d == 0 ? 1.0 : 0.0) : prod[n - 1][du]);
    sum += term;
    quiet = std::fabs(term) < eps * std::fabs(sum) ? quiet + 1 : 0;
    if (quiet >= 20) return sum;
  }
  throw std::runtime_error("lauricella_fd_series: no convergence");
}

}  // namespace hyperint
