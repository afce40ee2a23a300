#pragma once

// Real projective line: points with a single [inf], homographies, the
// cross-ratio, cyclic monotonicity of root sequences, and the dihedral
// relabelings tau_k / eta_k acting on them.

#include "hyperint/polynomial.hpp"
#include "hyperint/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperint {

/// A point of RP^1: a finite value or [inf] (the glued +-infinity).
template <class T>
class ProjPoint {
 public:
  ProjPoint() = default;  // [inf]
  ProjPoint(T value) : value_(std::move(value)) {}  // NOLINT: implicit on purpose

  static ProjPoint infinity() { return ProjPoint(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const T& value() const {
    if (!value_) throw std::domain_error("ProjPoint: value of [inf]");
    return *value_;
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.value_ == b.value_; }

 private:
  std::optional<T> value_;
};

/// (d1,d2;d3,d4) = ((d3-d1)(d4-d2)) / ((d3-d2)(d4-d1)), extended to [inf]
/// by limits. Needs at least three distinct points.
template <class T>
ProjPoint<T> cross_ratio(const ProjPoint<T>& d1, const ProjPoint<T>& d2, const ProjPoint<T>& d3,
                         const ProjPoint<T>& d4) {
  const std::array<const ProjPoint<T>*, 4> pts{&d1, &d2, &d3, &d4};
  int equal_pairs = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) equal_pairs += (*pts[i] == *pts[j]);
  if (equal_pairs > 1) throw std::domain_error("cross_ratio: fewer than three distinct points");

  // At most one coincidence; each one forces the value.
  if (d3 == d1 || d4 == d2) return ProjPoint<T>(T(0));
  if (d3 == d2 || d4 == d1) return ProjPoint<T>::infinity();
  if (d1 == d2 || d3 == d4) return ProjPoint<T>(T(1));

  // Four distinct points, at most one of them [inf]: drop its two factors.
  T num(1), den(1);
  auto factor = [](const ProjPoint<T>& x, const ProjPoint<T>& y, T& into) {
    if (x.is_finite() && y.is_finite()) into *= x.value() - y.value();
  };
  factor(d3, d1, num);
  factor(d4, d2, num);
  factor(d3, d2, den);
  factor(d4, d1, den);
  return ProjPoint<T>(T(num / den));
}

template <class T>
T cross_ratio_value(const T& d1, const T& d2, const T& d3, const T& d4) {
  const ProjPoint<T> r = cross_ratio<T>(d1, d2, d3, d4);
  if (r.is_infinite()) throw std::domain_error("cross_ratio: value is [inf]");
  return r.value();
}

/// psi(t) = (a t + b) / (c t + d), ad - bc != 0.
template <class T>
class Homography {
 public:
  Homography(T a, T b, T c, T d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (is_zero(det())) throw std::domain_error("Homography: singular matrix");
  }
  static Homography identity() { return Homography(T(1), T(0), T(0), T(1)); }

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  const T& c() const { return c_; }
  const T& d() const { return d_; }
  T det() const { return a_ * d_ - b_ * c_; }

  /// N_A(t) = a t + b and D_A(t) = c t + d.
  Polynomial<T> numerator() const { return Polynomial<T>(std::vector<T>{b_, a_}, "t"); }
  Polynomial<T> denominator() const { return Polynomial<T>(std::vector<T>{d_, c_}, "t"); }

  ProjPoint<T> operator()(const ProjPoint<T>& t) const {
    if (t.is_infinite()) {
      if (is_zero(c_)) return ProjPoint<T>::infinity();
      return ProjPoint<T>(T(a_ / c_));
    }
    const T den = c_ * t.value() + d_;
    if (is_zero(den)) return ProjPoint<T>::infinity();
    return ProjPoint<T>(T((a_ * t.value() + b_) / den));
  }

  Homography inverse() const { return Homography(d_, T(-b_), T(-c_), a_); }

  /// (*this o g)(t) = (*this)(g(t)).
  Homography compose(const Homography& g) const {
    return Homography(a_ * g.a_ + b_ * g.c_, a_ * g.b_ + b_ * g.d_, c_ * g.a_ + d_ * g.c_,
                      c_ * g.b_ + d_ * g.d_);
  }

  template <class U>
  Homography<U> cast() const {
    return Homography<U>(scalar_cast<U>(a_), scalar_cast<U>(b_), scalar_cast<U>(c_), scalar_cast<U>(d_));
  }

 private:
  T a_, b_, c_, d_;
};

template <class T>
ProjPoint<T> homography_apply(const Homography<T>& h, const ProjPoint<T>& t) {
  return h(t);
}

template <class T>
ProjPoint<T> homography_inverse_point(const Homography<T>& h, const ProjPoint<T>& x) {
  return h.inverse()(x);
}

/// psi(t) = phi_inf + (phi_0 - phi_inf) / (1 - t / pole), pole = psi^{-1}(inf).
template <class T>
struct SplitForm {
  T phi_inf;
  T phi_0;
  T pole;

  T operator()(const T& t) const { return phi_inf + (phi_0 - phi_inf) / (T(1) - t / pole); }
};

template <class T>
SplitForm<T> homography_canonical_split(const Homography<T>& h) {
  if (is_zero(h.c()) || is_zero(h.d()))
    throw std::domain_error("canonical split needs c != 0 and d != 0");
  return SplitForm<T>{T(h.a() / h.c()), T(h.b() / h.d()), T(-h.d() / h.c())};
}

enum class ReciprocalBranch { generic, at_zero_image, at_infinity_image };

/// 1/(psi(t) - p) in one of three shapes:
///   generic:            scale * (constant + numerator / (1 - t/pole))
///   at_zero_image:      scale * (1 - pole/t)       (p = psi(0))
///   at_infinity_image:  scale * (t/pole - 1)       (p = psi(inf))
template <class T>
struct ReciprocalForm {
  ReciprocalBranch branch = ReciprocalBranch::generic;
  T scale;
  T constant;
  T numerator;
  T pole;

  T operator()(const T& t) const {
    switch (branch) {
      case ReciprocalBranch::at_zero_image:
        return scale * (T(1) - pole / t);
      case ReciprocalBranch::at_infinity_image:
        return scale * (t / pole - T(1));
      default:
        return scale * (constant + numerator / (T(1) - t / pole));
    }
  }
};

template <class T>
ReciprocalForm<T> reciprocal_decompose(const Homography<T>& h, const T& p) {
  const SplitForm<T> s = homography_canonical_split(h);
  ReciprocalForm<T> out;
  if (p == s.phi_0) {
    out.branch = ReciprocalBranch::at_zero_image;
    out.scale = T(1) / (s.phi_inf - s.phi_0);
    out.pole = s.pole;
    return out;
  }
  if (p == s.phi_inf) {
    out.branch = ReciprocalBranch::at_infinity_image;
    out.scale = T(1) / (s.phi_inf - s.phi_0);
    out.pole = s.pole;
    return out;
  }
  out.scale = T(1) / ((s.phi_0 - p) * (s.phi_inf - p));
  out.constant = s.phi_0 - p;
  out.numerator = s.phi_inf - s.phi_0;
  out.pole = homography_inverse_point(h, ProjPoint<T>(p)).value();
  return out;
}

// ---------------------------------------------------------------------------
// Cyclic monotonicity and the dihedral action.

enum class Orientation { increasing, decreasing, not_monotonous };

inline std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::increasing: return "increasing";
    case Orientation::decreasing: return "decreasing";
    default: return "not-monotonous";
  }
}

/// A sequence is cyclically increasing iff exactly one cyclic step descends.
template <class T>
Orientation classify_cycle(std::span<const T> seq) {
  const std::size_t n = seq.size();
  if (n < 3) throw std::invalid_argument("classify_cycle: need at least three values");
  std::size_t ascents = 0, descents = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const T& x = seq[i];
    const T& y = seq[(i + 1) % n];
    if (x < y)
      ++ascents;
    else if (y < x)
      ++descents;
    else
      return Orientation::not_monotonous;
  }
  if (descents == 1) return Orientation::increasing;
  if (ascents == 1) return Orientation::decreasing;
  return Orientation::not_monotonous;
}

template <class T>
Orientation classify_cycle(const std::vector<T>& seq) {
  return classify_cycle(std::span<const T>(seq));
}

template <class T>
struct RootCycle {
  std::vector<T> roots;
  Orientation orientation = Orientation::increasing;
};

template <class T>
RootCycle<T> make_root_cycle(std::vector<T> roots) {
  const Orientation o = classify_cycle(roots);
  if (o == Orientation::not_monotonous)
    throw std::domain_error("roots are not distinct and cyclically monotonous");
  return RootCycle<T>{std::move(roots), o};
}

/// tau_k (rotation) or eta_k (reflection) on N labels, 1 <= k <= N.
struct DihedralElement {
  enum class Kind { tau, eta };
  Kind kind = Kind::tau;
  long k = 0;
  long n = 0;

  static DihedralElement tau(long k, long n) { return make(Kind::tau, k, n); }
  static DihedralElement eta(long k, long n) { return make(Kind::eta, k, n); }
  static DihedralElement identity(long n) { return tau(n, n); }

  bool is_identity() const { return kind == Kind::tau && k == n; }
  std::string name() const { return (kind == Kind::tau ? "tau_" : "eta_") + std::to_string(k); }

  /// Position i of the image takes entry source(i) of the input (0-based).
  std::size_t source(std::size_t i) const {
    const long ii = static_cast<long>(i);
    const long s = kind == Kind::tau ? (ii + k) % n : ((k - 1 - ii) % n + n) % n;
    return static_cast<std::size_t>(s);
  }

  template <class T>
  std::vector<T> apply(std::span<const T> seq) const {
    if (static_cast<long>(seq.size()) != n) throw std::invalid_argument("dihedral element: length mismatch");
    std::vector<T> out;
    out.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) out.push_back(seq[source(i)]);
    return out;
  }
  template <class T>
  std::vector<T> apply(const std::vector<T>& seq) const {
    return apply(std::span<const T>(seq));
  }

  /// (*this o g)(y) = (*this)(g(y)).
  DihedralElement compose(const DihedralElement& g) const;

  friend bool operator==(const DihedralElement& a, const DihedralElement& b) {
    return a.kind == b.kind && a.k == b.k && a.n == b.n;
  }

 private:
  static DihedralElement make(Kind kind, long k, long n) {
    if (n < 1 || k < 1 || k > n) throw std::out_of_range("dihedral element: need 1 <= k <= N");
    return DihedralElement{kind, k, n};
  }
};

/// tau_1..tau_N followed by eta_1..eta_N.
inline std::vector<DihedralElement> dihedral_group(long n) {
  std::vector<DihedralElement> out;
  for (long k = 1; k <= n; ++k) out.push_back(DihedralElement::tau(k, n));
  for (long k = 1; k <= n; ++k) out.push_back(DihedralElement::eta(k, n));
  return out;
}

inline DihedralElement DihedralElement::compose(const DihedralElement& g) const {
  if (g.n != n) throw std::invalid_argument("dihedral compose: different N");
  std::vector<long> labels(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
  const std::vector<long> target = apply(g.apply(labels));
  for (const DihedralElement& e : dihedral_group(n))
    if (e.apply(labels) == target) return e;
  throw std::logic_error("dihedral compose: product left the group");
}

template <class T>
std::vector<T> tau(long k, const std::vector<T>& seq) {
  return DihedralElement::tau(k, static_cast<long>(seq.size())).apply(seq);
}

template <class T>
std::vector<T> eta(long k, const std::vector<T>& seq) {
  return DihedralElement::eta(k, static_cast<long>(seq.size())).apply(seq);
}

/// Open arc L(from, to) of RP^1, traversed in the given direction.
/// Hitting an endpoint is an error.
template <class T>
bool arc_contains(const T& from, const T& to, const ProjPoint<T>& x, Orientation direction) {
  if (direction == Orientation::not_monotonous) throw std::invalid_argument("arc_contains: no direction");
  if (direction == Orientation::decreasing) return arc_contains(to, from, x, Orientation::increasing);
  if (x.is_infinite()) return to < from;
  const T& v = x.value();
  if (v == from || v == to) throw std::domain_error("arc_contains: point is an arc endpoint");
  if (from < to) return from < v && v < to;
  return v > from || v < to;
}

template <class T>
struct CanonicalOrder {
  RootCycle<T> cycle;
  DihedralElement element;  // cycle.roots == element.apply(input)
};

/// The cyclically increasing relabeling with x on L(x_N, x_1).
template <class T>
CanonicalOrder<T> x_canonical(const std::vector<T>& roots, const ProjPoint<T>& x) {
  if (classify_cycle(roots) == Orientation::not_monotonous)
    throw std::domain_error("x_canonical: roots are not cyclically monotonous");
  if (x.is_finite())
    for (const T& r : roots)
      if (r == x.value()) throw std::domain_error("x_canonical: x coincides with a root");
  for (const DihedralElement& g : dihedral_group(static_cast<long>(roots.size()))) {
    std::vector<T> y = g.apply(roots);
    if (classify_cycle(y) != Orientation::increasing) continue;
    if (arc_contains(y.back(), y.front(), x, Orientation::increasing))
      return CanonicalOrder<T>{RootCycle<T>{std::move(y), Orientation::increasing}, g};
  }
  throw std::logic_error("x_canonical: no canonical relabeling found");
}

template <class T>
CanonicalOrder<T> x_canonical(const std::vector<T>& roots, const T& x) {
  return x_canonical(roots, ProjPoint<T>(x));
}

/// (r_k(A) f)(t) = D_A(t)^k f(psi_A(t)) = sum_j c_j N_A(t)^j D_A(t)^(k-j).
template <class T>
Polynomial<T> r_operator(const Homography<T>& h, long k, const Polynomial<T>& f) {
  if (f.degree() > k) throw std::domain_error("r_operator: deg f exceeds k");
  if (k < 0) throw std::domain_error("r_operator: negative k");
  const Polynomial<T> num = h.numerator(), den = h.denominator();
  std::vector<Polynomial<T>> npow{Polynomial<T>::constant(T(1), "t")};
  std::vector<Polynomial<T>> dpow{Polynomial<T>::constant(T(1), "t")};
  for (long j = 1; j <= k; ++j) {
    npow.push_back(npow.back() * num);
    dpow.push_back(dpow.back() * den);
  }
  Polynomial<T> out(std::vector<T>{}, "t");
  for (long j = 0; j <= f.degree(); ++j)
    if (!is_zero(f[j]))
      out += npow[static_cast<std::size_t>(j)] * dpow[static_cast<std::size_t>(k - j)] * f[j];
  return out;
}

}  // namespace hyperint
