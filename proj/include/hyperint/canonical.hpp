#pragma once

// Riemann canonical form of \int R(x) dx / sqrt|P(x)| for P with N = 2m
// real simple roots, and the elliptic (N = 4) reductions to I0 / P and to
// Legendre F / Pi, including the D4 orbit of relabeled formulas.

#include "hyperint/moebius.hpp"
#include "hyperint/polynomial.hpp"
#include "hyperint/rational.hpp"
#include "hyperint/special.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperint {

/// psi(inf) = x_prev, psi(0) = x_last, psi(1) = x_first.
template <class T>
Homography<T> canonical_matrix(const T& x_prev, const T& x_last, const T& x_first) {
  if (x_prev == x_last || x_prev == x_first || x_last == x_first)
    throw std::domain_error("canonical_matrix: coincident points");
  return Homography<T>(T((x_first - x_last) * x_prev), T(-(x_first - x_prev) * x_last), T(x_first - x_last),
                       T(-(x_first - x_prev)));
}

template <class T>
struct CanonicalForm {
  Homography<T> H = Homography<T>::identity();
  std::vector<T> k;  // k_2 > ... > k_{N-2}
  T C{};
  int epsilon = 1;
  T prefactor_sq{};  // |a_N (x_{N-1} - x_1)^{N-3} prod_{j=2}^{N-2} (x_N - x_j)|
  double prefactor = 0.0;
  long m = 0;
  T leading{};
  std::vector<T> roots;

  /// t (1 - t) prod (1 - k_j t)
  Polynomial<T> weight() const {
    Polynomial<T> w(std::vector<T>{T(0), T(1), T(-1)}, "t");
    for (const T& kj : k) w *= Polynomial<T>(std::vector<T>{T(1), T(-kj)}, "t");
    return w;
  }
};

template <class T>
CanonicalForm<T> canonical_form(const T& leading, const RootCycle<T>& cycle) {
  const std::vector<T>& x = cycle.roots;
  const std::size_t n = x.size();
  if (n < 4 || n % 2 != 0) throw std::domain_error("canonical_form: need an even number N >= 4 of roots");
  if (is_zero(leading)) throw std::domain_error("canonical_form: zero leading coefficient");
  if (classify_cycle(x) == Orientation::not_monotonous)
    throw std::domain_error("canonical_form: roots are not cyclically monotonous");

  const T& x1 = x[0];
  const T& xprev = x[n - 2];
  const T& xlast = x[n - 1];

  CanonicalForm<T> out;
  out.H = canonical_matrix(xprev, xlast, x1);
  out.m = static_cast<long>(n / 2);
  out.leading = leading;
  out.roots = x;
  for (std::size_t j = 1; j + 2 < n; ++j) out.k.push_back(T(T(1) / cross_ratio_value(xprev, xlast, x1, x[j])));
  for (std::size_t j = 0; j < out.k.size(); ++j) {
    const bool inside = T(0) < out.k[j] && out.k[j] < T(1);
    const bool ordered = j == 0 || out.k[j] < out.k[j - 1];
    if (!inside || !ordered) throw std::logic_error("canonical_form: moduli out of order");
  }

  const T det = out.H.det();
  out.epsilon = sign_of(det);
  T rest = ipow(T(xprev - x1), static_cast<unsigned>(n - 3));
  for (std::size_t j = 1; j + 2 < n; ++j) rest *= T(xlast - x[j]);
  out.prefactor_sq = abs_value(T(leading * rest));
  out.C = leading * det * det * rest;
  out.prefactor = 1.0 / std::sqrt(to_double(out.prefactor_sq));
  return out;
}

template <class T>
CanonicalForm<T> canonical_form(const T& leading, const std::vector<T>& roots) {
  return canonical_form(leading, make_root_cycle(roots));
}

/// r_N(A) P - C t (1-t) prod (1 - k_j t); the zero polynomial when the
/// canonical identity holds.
template <class T>
Polynomial<T> canonical_identity_residual(const CanonicalForm<T>& form) {
  const Polynomial<T> p = poly_from_roots(form.leading, std::span<const T>(form.roots));
  const long n = static_cast<long>(form.roots.size());
  Polynomial<T> lhs = r_operator(form.H, n, p);
  lhs -= form.weight() * form.C;
  return lhs;
}

// ---------------------------------------------------------------------------
// Pullback of R(x) dx / sqrt|P(x)| along psi_A.

/// det A * (psi^* R)(t) * |D(t)|^(m-2) dt / sqrt|(r_2m(A) P)(t)|, with
/// psi^* R kept as the polynomial pair r_dn(num) D^dd / (r_dd(den) D^dn).
template <class T>
struct PullbackForm {
  Homography<T> H = Homography<T>::identity();
  T det{};
  Polynomial<T> r_num;
  Polynomial<T> r_den;
  Polynomial<T> D;
  long m = 0;
  Polynomial<T> rP;

  double operator()(double t) const {
    const double d = D(t);
    return to_double(det) * r_num(t) / r_den(t) * std::pow(std::fabs(d), static_cast<double>(m - 2)) /
           std::sqrt(std::fabs(rP(t)));
  }
};

template <class T>
PullbackForm<T> pullback_form(const Homography<T>& h, const Polynomial<T>& num, const Polynomial<T>& den,
                              const Polynomial<T>& p, long m) {
  if (m < 1 || p.degree() != 2 * m) throw std::domain_error("pullback_form: deg P must equal 2m");
  if (den.is_zero()) throw std::domain_error("pullback_form: zero denominator");
  const long dn = std::max(0L, num.degree()), dd = den.degree();
  PullbackForm<T> out;
  out.H = h;
  out.det = h.det();
  out.m = m;
  out.D = h.denominator();
  auto dpow = [&](long e) {
    Polynomial<T> acc = Polynomial<T>::constant(T(1), "t");
    for (long i = 0; i < e; ++i) acc *= out.D;
    return acc;
  };
  out.r_num = r_operator(h, dn, num) * dpow(dd);
  out.r_den = r_operator(h, dd, den) * dpow(dn);
  out.rP = r_operator(h, 2 * m, p);
  return out;
}

// ---------------------------------------------------------------------------
// Elliptic case.

enum class IntegrandKind { constant, x, pole };

inline std::string to_string(IntegrandKind k) {
  switch (k) {
    case IntegrandKind::constant: return "const";
    case IntegrandKind::x: return "x";
    default: return "pole";
  }
}

inline IntegrandKind parse_integrand_kind(const std::string& s) {
  if (s == "const") return IntegrandKind::constant;
  if (s == "x") return IntegrandKind::x;
  if (s == "pole") return IntegrandKind::pole;
  throw std::invalid_argument("unknown integrand kind '" + s + "' (const, x, pole)");
}

/// coeff * fn(arg, ...). fn is one of
///   I0(t, k), P(t, h, k)         canonical-weight integrals
///   F(nu, q), Pi(nu, h, q)       Legendre forms
/// Third-kind terms are taken as principal values when 1 - h sin^2 changes sign.
struct EllipticTerm {
  std::string fn;
  double arg = 0.0;
  double modulus = 0.0;
  double characteristic = 0.0;
  double coeff = 0.0;

  double value() const {
    if (fn == "F") return ellip_F(arg, modulus);
    if (fn == "Pi") return ellip_Pi_pv(arg, characteristic, modulus);
    if (fn == "I0") return canonical_I0(arg, modulus);
    if (fn == "P") {
      if (arg < 0.0 || arg > 1.0) throw std::domain_error("P(t,h,k): need 0 <= t <= 1");
      return 2.0 * ellip_Pi_pv(std::asin(std::sqrt(arg)), characteristic, std::sqrt(modulus));
    }
    throw std::invalid_argument("EllipticTerm: unknown function " + fn);
  }
};

struct EllipticCombination {
  std::string label;
  double prefactor = 0.0;
  std::vector<EllipticTerm> terms;
  int radicand_sign = 1;  // sign of Q on the integration arc

  double value() const {
    double acc = 0.0;
    for (const EllipticTerm& term : terms) acc += term.coeff * term.value();
    return prefactor * acc;
  }
};

namespace detail {

/// Everything the N = 4 formulas need for one labeling (y1, y2, y3, y4).
template <class T>
struct QuarticLabeling {
  std::vector<T> y;
  int epsilon = 1;
  T prefactor_sq{};
  T k{};
  T h{};
  T c0{};
  T ch{};
  T characteristic{};  // h, or h_p for the pole kind

  double prefactor() const { return epsilon / std::sqrt(to_double(prefactor_sq)); }
};

template <class T>
QuarticLabeling<T> quartic_labeling(IntegrandKind kind, const T& leading, std::vector<T> y,
                                    const std::optional<T>& p) {
  if (y.size() != 4) throw std::domain_error("elliptic formulas need exactly four roots");
  if (is_zero(leading)) throw std::domain_error("zero leading coefficient");
  if (classify_cycle(y) == Orientation::not_monotonous)
    throw std::domain_error("roots are not distinct and cyclically monotonous");
  QuarticLabeling<T> out;
  const T &y1 = y[0], &y2 = y[1], &y3 = y[2], &y4 = y[3];
  out.epsilon = sign_of(T((y4 - y1) * (y4 - y3) * (y3 - y1)));
  out.prefactor_sq = abs_value(T(leading * (y3 - y1) * (y4 - y2)));
  out.k = T(T(1) / cross_ratio_value(y3, y4, y1, y2));
  out.h = T((y4 - y1) / (y3 - y1));
  switch (kind) {
    case IntegrandKind::constant:
      out.c0 = T(1);
      out.ch = T(0);
      out.characteristic = out.h;
      break;
    case IntegrandKind::x:
      out.c0 = y3;
      out.ch = T(y4 - y3);
      out.characteristic = out.h;
      break;
    case IntegrandKind::pole: {
      if (!p) throw std::invalid_argument("pole kind needs p");
      for (const T& r : y)
        if (r == *p) throw std::domain_error("pole p coincides with a root");
      const T scale = T(1) / T((y3 - *p) * (y4 - *p));
      out.c0 = T((y4 - *p) * scale);
      out.ch = T(-(y4 - y3) * scale);
      out.characteristic = T(T(1) / cross_ratio_value(y3, y4, y1, *p));
      break;
    }
  }
  out.y = std::move(y);
  return out;
}

template <class T>
int quartic_sign_at(const T& leading, const std::vector<T>& roots, const T& x) {
  T v = leading;
  for (const T& r : roots) v *= T(x - r);
  return sign_of(v);
}

}  // namespace detail

/// Indefinite N = 4 reduction for the given labeling:
///   eps / sqrt(prefactor_sq) * (c0 I0(t,k) + ch P(t, h, k)),  t = (x3, x4; x1, x).
/// evaluate(x) is the integral along the root-free arc from x4 to x, and is
/// available where 0 <= t(x) <= 1.
template <class T>
struct EllipticReduction {
  IntegrandKind kind = IntegrandKind::constant;
  detail::QuarticLabeling<T> labeling;
  T leading{};
  std::optional<T> p;

  T t_of(const T& x) const {
    const auto& y = labeling.y;
    return cross_ratio_value(y[2], y[3], y[0], x);
  }

  EllipticCombination at(const T& x) const {
    const T tx = t_of(x);
    if (tx < T(0) || T(1) < tx) throw std::domain_error("elliptic_reduce: x is not on the arc L(x4, x1)");
    // For R = x the image of [inf] is t = 1/h; crossing it diverges.
    if (kind == IntegrandKind::x && !(labeling.characteristic * tx < T(1)))
      throw std::domain_error("elliptic_reduce: \\int x dx / sqrt|Q| diverges through [inf]");
    const double t = to_double(tx);
    EllipticCombination out;
    out.label = "indefinite";
    out.prefactor = labeling.prefactor();
    out.radicand_sign = detail::quartic_sign_at(leading, labeling.y, arc_point());
    const double k = to_double(labeling.k);
    out.terms.push_back({"I0", t, k, 0.0, to_double(labeling.c0)});
    if (!is_zero(labeling.ch))
      out.terms.push_back({"P", t, k, to_double(labeling.characteristic), to_double(labeling.ch)});
    return out;
  }

  double evaluate(const T& x) const { return at(x).value(); }

 private:
  // A point of the arc L(x4, x1): psi(1/2).
  T arc_point() const {
    const auto& y = labeling.y;
    const Homography<T> h = canonical_matrix(y[2], y[3], y[0]);
    const ProjPoint<T> mid = h(ProjPoint<T>(T(1) / T(2)));
    if (mid.is_finite()) return mid.value();
    return h(ProjPoint<T>(T(1) / T(4))).value();
  }
};

template <class T>
EllipticReduction<T> elliptic_reduce(IntegrandKind kind, const T& leading, const std::vector<T>& roots,
                                     const std::optional<T>& p = std::nullopt) {
  EllipticReduction<T> out;
  out.kind = kind;
  out.labeling = detail::quartic_labeling(kind, leading, roots, p);
  out.leading = leading;
  out.p = p;
  return out;
}

namespace detail {

// Antiderivatives of dt/sqrt|w| and dt/((1 - h t) sqrt|w|), w = t(1-t)(1-kt),
// on each of the four arcs cut out by {0, 1, 1/k, inf}, normalized to vanish
// at the arc end where theta = 0:
//   A (0, 1):      sin^2 = t
//   B (1, 1/k):    sin^2 = (t - 1) / ((1 - k) t)
//   C (1/k, inf):  sin^2 = 1 / (k t)
//   D (-inf, 0):   sin^2 = -t / (1 - t)
enum class Arc { A, B, C, D };

template <class T>
Arc arc_of(const T& t, const T& k) {
  if (t < T(0)) return Arc::D;
  if (t < T(1)) return Arc::A;
  if (t * k < T(1)) return Arc::B;
  return Arc::C;
}

template <class T>
T arc_sin2(Arc arc, const T& t, const T& k) {
  switch (arc) {
    case Arc::A: return t;
    case Arc::B: return T((t - T(1)) / ((T(1) - k) * t));
    case Arc::C: return T(T(1) / (k * t));
    default: return T(-t / (T(1) - t));
  }
}

/// True when the arc end e in {0, 1, 1/k, inf} sits at theta = 0.
template <class T>
bool arc_origin(Arc arc, const ProjPoint<T>& e) {
  auto is = [&](const T& v) { return e.is_finite() && e.value() == v; };
  switch (arc) {
    case Arc::A: return is(T(0));
    case Arc::B: return is(T(1));
    case Arc::C: return e.is_infinite();
    default: return is(T(0));
  }
}

template <class T>
bool arc_far_end(Arc arc, const ProjPoint<T>& e, const T& k) {
  auto is = [&](const T& v) { return e.is_finite() && e.value() == v; };
  switch (arc) {
    case Arc::A: return is(T(1));
    case Arc::B: return is(T(T(1) / k));
    case Arc::C: return is(T(T(1) / k));
    default: return e.is_infinite();
  }
}

/// sign * (c0 Phi0(theta) + ch Phi_h(theta)) as Legendre terms.
inline void append_arc_terms(std::vector<EllipticTerm>& out, Arc arc, double theta, double k, double h,
                             double c0, double ch, double sign) {
  const double q = std::sqrt(k), qc = std::sqrt(1.0 - k);
  double l = q, f_coeff = 0.0, n = 0.0, pi_coeff = 0.0;
  switch (arc) {
    case Arc::A:
      f_coeff = 2.0 * c0;
      n = h;
      pi_coeff = 2.0 * ch;
      break;
    case Arc::B:
      // 1/(1 - h t) = 1 + (h/(1-h)) / (1 - n sin^2),  n = (1-k)/(1-h)
      if (ch != 0.0 && h == 1.0) throw std::logic_error("orbit: characteristic pole at t = 1");
      l = qc;
      f_coeff = 2.0 * (c0 + ch);
      if (ch != 0.0) {
        n = (1.0 - k) / (1.0 - h);
        pi_coeff = 2.0 * ch * h / (1.0 - h);
      }
      break;
    case Arc::C:
      // 1/(1 - h t) = 1 - 1 / (1 - (k/h) sin^2)
      f_coeff = -2.0 * (c0 + ch);
      if (ch != 0.0 && h != 0.0) {
        n = k / h;
        pi_coeff = 2.0 * ch;
      }
      break;
    case Arc::D:
      // 1/(1 - h t) = 1/n + (1 - 1/n) / (1 - n sin^2),  n = 1 - h
      l = qc;
      n = 1.0 - h;
      if (ch != 0.0 && n == 0.0) throw std::logic_error("orbit: characteristic pole at t = 1");
      f_coeff = -2.0 * c0;
      if (ch != 0.0) {
        f_coeff -= 2.0 * ch / n;
        pi_coeff = -2.0 * ch * (1.0 - 1.0 / n);
      }
      break;
  }
  if (f_coeff != 0.0) out.push_back({"F", theta, l, 0.0, sign * f_coeff});
  if (pi_coeff != 0.0) out.push_back({"Pi", theta, l, n, sign * pi_coeff});
}

}  // namespace detail

/// One D4 relabeling y = g(x_canonical) of the fixed integral over L(x4, u).
template <class T>
struct OrbitVariant {
  DihedralElement element;
  std::vector<T> labels;
  int epsilon = 1;
  T prefactor_sq{};
  EllipticCombination formula;
};

template <class T>
struct EllipticSetup {
  CanonicalOrder<T> order;
  T start;  // canonical x4
};

namespace detail {

template <class T>
EllipticSetup<T> definite_setup(IntegrandKind kind, const T& leading, const std::vector<T>& roots, const T& u,
                                const std::optional<T>& p) {
  if (roots.size() != 4) throw std::domain_error("elliptic formulas need exactly four roots");
  if (is_zero(leading)) throw std::domain_error("zero leading coefficient");
  for (const T& r : roots)
    if (r == u) throw std::domain_error("u coincides with a root");
  if (p && *p == u) throw std::domain_error("pole p coincides with the endpoint u");
  CanonicalOrder<T> order = x_canonical(roots, u);
  const T start = order.cycle.roots[3];
  if (kind == IntegrandKind::x && u < start)
    throw std::domain_error("\\int x dx / sqrt|Q| diverges on an arc through [inf]");
  return EllipticSetup<T>{std::move(order), start};
}

template <class T>
OrbitVariant<T> orbit_variant(IntegrandKind kind, const T& leading, const EllipticSetup<T>& setup,
                              const DihedralElement& g, const T& u, const std::optional<T>& p) {
  const QuarticLabeling<T> lab = quartic_labeling(kind, leading, g.apply(setup.order.cycle.roots), p);
  const auto& y = lab.y;
  const ProjPoint<T> t_start = cross_ratio<T>(y[2], y[3], y[0], setup.start);
  const T t_u = cross_ratio_value(y[2], y[3], y[0], u);
  const Arc arc = arc_of(t_u, lab.k);

  const double k = to_double(lab.k), h = to_double(lab.characteristic);
  const double c0 = to_double(lab.c0), ch = to_double(lab.ch);
  const double theta_u = std::asin(std::sqrt(to_double(arc_sin2(arc, t_u, lab.k))));

  OrbitVariant<T> out;
  out.element = g;
  out.labels = y;
  out.epsilon = lab.epsilon;
  out.prefactor_sq = lab.prefactor_sq;
  out.formula.label = g.name();
  out.formula.prefactor = lab.prefactor();
  out.formula.radicand_sign = quartic_sign_at(leading, y, u);
  append_arc_terms(out.formula.terms, arc, theta_u, k, h, c0, ch, 1.0);
  if (arc_far_end(arc, t_start, lab.k))
    append_arc_terms(out.formula.terms, arc, std::numbers::pi / 2, k, h, c0, ch, -1.0);
  else if (!arc_origin(arc, t_start))
    throw std::logic_error("orbit: start root is not an end of the arc");
  return out;
}

}  // namespace detail

/// The integral over the oriented arc L(x4, u) after x-canonical relabeling
/// (so the orientation is increasing and eps = +1):
///   2 eps / sqrt|a4 (x3-x1)(x4-x2)| * (c0 F(nu, q) + ch Pi(nu, h, q)).
/// Through [inf] this is \int_{x4}^{inf} + \int_{-inf}^{u}. A pole p on the
/// arc gives the principal value.
template <class T>
EllipticCombination elliptic_definite(IntegrandKind kind, const T& leading, const std::vector<T>& roots, const T& u,
                                      const std::optional<T>& p = std::nullopt) {
  const EllipticSetup<T> setup = detail::definite_setup(kind, leading, roots, u, p);
  const DihedralElement id = DihedralElement::identity(4);
  EllipticCombination out = detail::orbit_variant(kind, leading, setup, id, u, p).formula;
  out.label = "definite " + setup.order.element.name();
  return out;
}

/// All eight relabelings tau_1..tau_4, eta_1..eta_4 of the x-canonical roots,
/// each expressing the same integral over L(x4, u).
template <class T>
std::vector<OrbitVariant<T>> d4_orbit(IntegrandKind kind, const T& leading, const std::vector<T>& roots, const T& u,
                                      const std::optional<T>& p = std::nullopt) {
  const EllipticSetup<T> setup = detail::definite_setup(kind, leading, roots, u, p);
  std::vector<OrbitVariant<T>> out;
  for (const DihedralElement& g : dihedral_group(4)) out.push_back(detail::orbit_variant(kind, leading, setup, g, u, p));
  return out;
}

}  // namespace hyperint
