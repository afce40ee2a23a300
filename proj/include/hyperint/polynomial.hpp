#pragma once

// Dense univariate polynomials over an exact or floating scalar, and sparse
// Laurent polynomials in a shifted variable u = x - p.

#include "hyperint/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperint {

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs, std::string var = "x")
      : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }

  static Polynomial constant(const T& c, std::string var = "x") {
    return Polynomial(std::vector<T>{c}, std::move(var));
  }
  static Polynomial monomial(std::size_t degree, const T& c = T(1),
                             std::string var = "x") {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = c;
    return Polynomial(std::move(v), std::move(var));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const std::string& var() const { return var_; }
  void set_var(std::string v) { var_ = std::move(v); }

  /// Coefficient of x^i, zero past the degree.
  T operator[](long i) const {
    if (i < 0 || i > degree()) return T(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

  template <class X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + scalar_cast<X>(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= T(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial({}, a.var_);
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out), a.var_);
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && hyperint::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
  std::string var_ = "x";
};

using RationalPolynomial = Polynomial<Rational>;

template <class T>
T poly_eval(const Polynomial<T>& q, const T& x) {
  return q(x);
}

template <class T>
Polynomial<T> poly_derivative(const Polynomial<T>& q) {
  if (q.degree() < 1) return Polynomial<T>({}, q.var());
  std::vector<T> out(static_cast<std::size_t>(q.degree()));
  for (long j = 1; j <= q.degree(); ++j) out[static_cast<std::size_t>(j - 1)] = T(j) * q[j];
  return Polynomial<T>(std::move(out), q.var());
}

/// Taylor shift: returns b with sum_j b_j (x - p)^j == q(x).
/// Repeated synthetic division by (x - p); b_j is the j-th remainder.
template <class T>
Polynomial<T> poly_shift(const Polynomial<T>& q, const T& p) {
  std::vector<T> work = q.coeffs();
  const std::size_t n = work.size();
  for (std::size_t j = 0; j + 1 < n; ++j)
    for (std::size_t i = n - 1; i > j; --i) work[i - 1] += p * work[i];
  return Polynomial<T>(std::move(work), "u");
}

/// leading * prod (x - r_i)
template <class T>
Polynomial<T> poly_from_roots(const T& leading, std::span<const T> roots) {
  Polynomial<T> out = Polynomial<T>::constant(leading);
  for (const T& r : roots) out *= Polynomial<T>(std::vector<T>{-r, T(1)});
  return out;
}

/// sigma_i(values), with sigma_0 = 1.
template <class T>
T elementary_symmetric(std::span<const T> values, long i) {
  if (i < 0 || i > static_cast<long>(values.size()))
    throw std::out_of_range("elementary_symmetric: degree out of range");
  // e[j] holds sigma_j of the prefix processed so far.
  std::vector<T> e(static_cast<std::size_t>(i) + 1, T(0));
  e[0] = T(1);
  for (const T& v : values)
    for (long j = i; j >= 1; --j) e[static_cast<std::size_t>(j)] += v * e[static_cast<std::size_t>(j - 1)];
  return e[static_cast<std::size_t>(i)];
}

/// Sparse Laurent polynomial sum_e c_e (x - center)^e over the rationals.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Rational center) : center_(std::move(center)) {}

  const Rational& center() const { return center_; }
  const std::map<long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(long exponent, const Rational& c) {
    if (hyperint::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (hyperint::is_zero(it->second)) terms_.erase(it);
    }
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  LaurentPolynomial& operator*=(const Rational& s) {
    if (hyperint::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }

  /// Product with an ordinary polynomial written in u = x - center.
  LaurentPolynomial times(const RationalPolynomial& in_u) const {
    LaurentPolynomial out(center_);
    for (const auto& [e, c] : terms_)
      for (long j = 0; j <= in_u.degree(); ++j) out.add(e + j, c * in_u[j]);
    return out;
  }

  LaurentPolynomial derivative() const {
    LaurentPolynomial out(center_);
    for (const auto& [e, c] : terms_)
      if (e != 0) out.add(e - 1, Rational(e) * c);
    return out;
  }

  /// Value at x (x != center when negative exponents are present).
  double evaluate(double x) const {
    const double u = x - to_double(center_);
    double acc = 0.0;
    for (const auto& [e, c] : terms_) acc += to_double(c) * std::pow(u, static_cast<double>(e));
    return acc;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.center_ == b.center_ && a.terms_ == b.terms_;
  }

 private:
  Rational center_{0};
  std::map<long, Rational> terms_;
};

/// Re-expresses x^l (l >= 0) in powers of u = x - p, as a Laurent polynomial.
inline LaurentPolynomial monomial_about(long l, const Rational& p) {
  LaurentPolynomial out(p);
  for (long k = 0; k <= l; ++k) out.add(k, binomial(l, k) * ipow(p, static_cast<unsigned>(l - k)));
  return out;
}

}  // namespace hyperint
