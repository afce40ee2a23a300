#pragma once

// Reduction of I_{n,p} = \int (x-p)^n dx / sqrt(Q(x)) to the fundamental
// integrals {I_{-1,p}, I_0, ..., I_{M-2}} plus an elementary part S(x) sqrt(Q).
//
// For n >= 0 the monomial (x-p)^n is rewritten in the basis phi_l whose
// integrals are either fundamental or elementary; for n < -1 the same is done
// with the shifted Laurent basis psi_l. Both transition matrices are infinite
// and upper triangular with a band of width M+1, so only the one column of
// their inverse that the exponent needs is ever computed.

#include "hyperint/polynomial.hpp"
#include "hyperint/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperint {

/// {I_{-1,p} (when a pole is present), I_0, ..., I_{M-2}}
struct FundamentalBasis {
  long degree = 0;
  std::optional<Rational> pole;

  std::size_t size() const {
    return static_cast<std::size_t>(degree - 1) + (pole ? 1u : 0u);
  }
  /// Basis indices in ascending order; -1 stands for I_{-1,p}.
  std::vector<long> indices() const {
    std::vector<long> out;
    if (pole) out.push_back(-1);
    for (long l = 0; l <= degree - 2; ++l) out.push_back(l);
    return out;
  }
};

/// One column of B = A^{-1} or U = T^{-1}.
struct BandColumn {
  long index = 0;
  std::map<long, Rational> entries;

  Rational at(long row) const {
    auto it = entries.find(row);
    return it == entries.end() ? Rational(0) : it->second;
  }
};

/// Result of reducing one integral.
///
/// `basic[-1]` multiplies I_{-1,p}; `basic[l]` for l >= 0 multiplies
/// I_l = \int x^l dx / sqrt(Q) (unshifted). The elementary part is
/// `elementary(x) * sqrt(Q(x))` with `elementary` a Laurent polynomial in
/// (x - p); its coefficients already contain the factor 2.
struct ReductionResult {
  long degree = 0;
  Rational pole{0};
  std::map<long, Rational> basic;
  LaurentPolynomial elementary;

  Rational coeff(long index) const {
    auto it = basic.find(index);
    return it == basic.end() ? Rational(0) : it->second;
  }
  friend bool operator==(const ReductionResult& a, const ReductionResult& b) {
    return a.degree == b.degree && a.pole == b.pole && a.basic == b.basic &&
           a.elementary == b.elementary;
  }
};

namespace detail {

inline long checked_degree(const RationalPolynomial& q) {
  if (q.degree() < 3)
    throw std::domain_error("degenerate Q: degree must be at least 3, got " +
                            std::to_string(q.degree()));
  return q.degree();
}

// Entry of A for a polynomial with coefficients `a` (any variable name).
inline Rational a_entry(const RationalPolynomial& a, long m, long l, long n) {
  if (n <= m - 2) return Rational(l == n ? 1 : 0);
  if (l < 0 || l > n || l < n - m) return Rational(0);
  return Rational(l + n - m + 2) * a[l + m - n];
}

// Entry of T given the shifted coefficients b_j = b_j(p).
inline Rational t_entry(const RationalPolynomial& b, long m, long l, long n) {
  if (n >= -1) return Rational(l == n ? 1 : 0);
  if (l < n || l > n + m) return Rational(0);
  return Rational(l + n + 2) * b[l - n];
}

inline void add_scaled(std::map<long, Rational>& into, long key, const Rational& c) {
  if (is_zero(c)) return;
  Rational& slot = into[key];
  slot += c;
  if (is_zero(slot)) into.erase(key);
}

}  // namespace detail

/// Entry A_{l,n} of the transition matrix from x^n to phi_n.
inline Rational matrix_a_entry(const RationalPolynomial& q, long l, long n) {
  const long m = detail::checked_degree(q);
  if (l < 0 || n < 0) throw std::out_of_range("matrix_a_entry: indices must be non-negative");
  return detail::a_entry(q, m, l, n);
}

/// Entry T_{l,n} of the transition matrix from (x-p)^n to psi_n.
inline Rational matrix_t_entry(const RationalPolynomial& q, const Rational& p, long l, long n) {
  const long m = detail::checked_degree(q);
  if (l > m - 2 || n > m - 2) throw std::out_of_range("matrix_t_entry: indices must be <= M-2");
  const RationalPolynomial b = poly_shift(q, p);
  if (is_zero(b[0])) throw std::domain_error("pole on a root: Q(p) = 0");
  return detail::t_entry(b, m, l, n);
}

/// Column n of B = A^{-1}, obtained by back-substitution on the D block
/// (rows n down to M-1) followed by the top rows 0..M-2 as -C times it.
inline BandColumn solve_b_column(const RationalPolynomial& q, long n) {
  const long m = detail::checked_degree(q);
  if (n < 0) throw std::out_of_range("solve_b_column: n must be non-negative");
  BandColumn col{n, {}};
  if (n <= m - 2) {
    col.entries.emplace(n, Rational(1));
    return col;
  }
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1, Rational(0));
  for (long l = n; l >= m - 1; --l) {
    Rational s(l == n ? 1 : 0);
    for (long j = l + 1; j <= std::min(n, l + m); ++j)
      s -= detail::a_entry(q, m, l, j) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(l)] = s / detail::a_entry(q, m, l, l);
  }
  for (long l = m - 2; l >= 0; --l) {
    Rational s(0);
    for (long j = m - 1; j <= std::min(n, l + m); ++j)
      s -= detail::a_entry(q, m, l, j) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(l)] = s;
  }
  for (long l = 0; l <= n; ++l)
    if (!is_zero(b[static_cast<std::size_t>(l)])) col.entries.emplace(l, b[static_cast<std::size_t>(l)]);
  return col;
}

namespace detail {

inline BandColumn u_column_shifted(const RationalPolynomial& b, long m, long n) {
  BandColumn col{n, {}};
  if (n >= -1) {
    col.entries.emplace(n, Rational(1));
    return col;
  }
  // Index k lives at slot k - n.
  std::vector<Rational> u(static_cast<std::size_t>(m - 1 - n), Rational(0));
  auto slot = [n](long k) { return static_cast<std::size_t>(k - n); };
  for (long k = n; k <= -2; ++k) {
    Rational s(k == n ? 1 : 0);
    for (long l = std::max(n, k - m); l < k; ++l) s -= t_entry(b, m, k, l) * u[slot(l)];
    u[slot(k)] = s / t_entry(b, m, k, k);
  }
  for (long k = -1; k <= m - 2; ++k) {
    Rational s(0);
    for (long l = std::max(n, k - m); l <= -2; ++l) s -= t_entry(b, m, k, l) * u[slot(l)];
    u[slot(k)] = s;
  }
  for (long k = n; k <= m - 2; ++k)
    if (!is_zero(u[slot(k)])) col.entries.emplace(k, u[slot(k)]);
  return col;
}

}  // namespace detail

/// Column n (n <= M-2) of U = T^{-1}: back-substitution on W from row n up
/// to row -2, then rows -1..M-2 as -Y times that part.
inline BandColumn solve_u_column(const RationalPolynomial& q, const Rational& p, long n) {
  const long m = detail::checked_degree(q);
  if (n > m - 2) throw std::out_of_range("solve_u_column: n must be <= M-2");
  const RationalPolynomial b = poly_shift(q, p);
  if (is_zero(b[0])) throw std::domain_error("pole on a root: Q(p) = 0");
  return detail::u_column_shifted(b, m, n);
}

/// Coefficients of I_{n,p} = sum_k (-1)^k C(n,k) p^k I_{n-k}, keyed by k.
inline std::map<long, Rational> binomial_rebase(long n, const Rational& p) {
  if (n < 0) throw std::out_of_range("binomial_rebase: n must be non-negative");
  std::map<long, Rational> out;
  for (long k = 0; k <= n; ++k) {
    Rational c = binomial(n, k) * ipow(Rational(-p), static_cast<unsigned>(k));
    if (k == 0 || !is_zero(c)) out.emplace(k, std::move(c));
  }
  return out;
}

namespace detail {

// Adds c * I_{l,p} to a result expressed on the unshifted basis.
inline void add_shifted_integral(std::map<long, Rational>& basic, long l, const Rational& p,
                                 const Rational& c) {
  if (l <= 0) {
    add_scaled(basic, l, c);
    return;
  }
  for (const auto& [k, w] : binomial_rebase(l, p)) add_scaled(basic, l - k, c * w);
}

}  // namespace detail

/// Reduces I_{n,p}. For n >= 0 the pole only shifts the monomial.
inline ReductionResult reduce(const RationalPolynomial& q, const Rational& p, long n) {
  const long m = detail::checked_degree(q);
  const RationalPolynomial b = poly_shift(q, p);
  ReductionResult out{m, p, {}, LaurentPolynomial(p)};
  if (n < 0 && is_zero(b[0])) throw std::domain_error("pole on a root: Q(p) = 0");

  if (n == -1) {
    out.basic.emplace(-1, Rational(1));
    return out;
  }
  if (n >= 0) {
    const BandColumn col = solve_b_column(b, n);
    for (const auto& [l, c] : col.entries) {
      if (l <= m - 2)
        detail::add_shifted_integral(out.basic, l, p, c);
      else
        out.elementary.add(l + 1 - m, Rational(2) * c);
    }
    return out;
  }
  const BandColumn col = detail::u_column_shifted(b, m, n);
  for (const auto& [l, c] : col.entries) {
    if (l <= -2)
      out.elementary.add(l + 1, Rational(2) * c);
    else
      detail::add_shifted_integral(out.basic, l, p, c);
  }
  return out;
}

/// Independent route: iterate the (M+1)-term recurrence
///   sum_j [2(k+1)+j] b_j I_{k+j,p} = 2 (x-p)^{k+1} sqrt(Q)
/// one exponent at a time, upwards from I_{M-1,p} or downwards from I_{-2,p}.
inline ReductionResult recurrence_oracle(const RationalPolynomial& q, const Rational& p, long n) {
  const long m = detail::checked_degree(q);
  const RationalPolynomial b = poly_shift(q, p);
  if (n < 0 && is_zero(b[0])) throw std::domain_error("pole on a root: Q(p) = 0");

  struct Combination {
    std::map<long, Rational> shifted;  // coefficients of I_{l,p}, -1 <= l <= M-2
    LaurentPolynomial elementary;
  };
  std::map<long, Combination> known;
  for (long l = -1; l <= m - 2; ++l) {
    Combination unit{{}, LaurentPolynomial(p)};
    unit.shifted.emplace(l, Rational(1));
    known.emplace(l, std::move(unit));
  }
  // Solves the recurrence anchored at k for the unknown I_{target,p}.
  auto solve = [&](long k, long target) {
    Combination c{{}, LaurentPolynomial(p)};
    c.elementary.add(k + 1, Rational(2));
    Rational pivot(0);
    for (long j = 0; j <= m; ++j) {
      const Rational w = Rational(2 * (k + 1) + j) * b[j];
      if (k + j == target) {
        pivot = w;
        continue;
      }
      if (is_zero(w)) continue;
      const Combination& other = known.at(k + j);
      for (const auto& [l, v] : other.shifted) detail::add_scaled(c.shifted, l, -w * v);
      c.elementary -= other.elementary * w;
    }
    const Rational inv = Rational(1) / pivot;
    for (auto& [l, v] : c.shifted) v *= inv;
    c.elementary *= inv;
    known.emplace(target, std::move(c));
  };
  for (long target = m - 1; target <= n; ++target) solve(target - m, target);
  for (long target = -2; target >= n; --target) solve(target, target);

  ReductionResult out{m, p, {}, known.at(n).elementary};
  for (const auto& [l, v] : known.at(n).shifted) detail::add_shifted_integral(out.basic, l, p, v);
  return out;
}

/// Root case Q(p) = 0 (simple root): the relation with b_0 = 0,
///   sum_{j>=1} (j-2) b_j I_{j-2,p} = 2 (x-p)^{-1} sqrt(Q),
/// expresses I_{-1,p} through I_{1,p}..I_{M-2,p} and an elementary term.
inline ReductionResult reduce_root_pole(const RationalPolynomial& q, const Rational& p) {
  const long m = detail::checked_degree(q);
  const RationalPolynomial b = poly_shift(q, p);
  if (!is_zero(b[0])) throw std::domain_error("reduce_root_pole: p is not a root of Q");
  if (is_zero(b[1])) throw std::domain_error("reduce_root_pole: p is a multiple root of Q");
  ReductionResult out{m, p, {}, LaurentPolynomial(p)};
  const Rational inv = Rational(1) / b[1];
  for (long j = 3; j <= m; ++j)
    detail::add_shifted_integral(out.basic, j - 2, p, Rational(j - 2) * b[j] * inv);
  out.elementary.add(-1, Rational(-2) * inv);
  return out;
}

/// (x-p)^n minus the derivative-level image of `r`, as a Laurent polynomial
/// in (x-p): zero exactly when the reduction is correct. The elementary part
/// E sqrt(Q) differentiates to (E' Q + E Q'/2) / sqrt(Q).
inline LaurentPolynomial reduction_residual(const RationalPolynomial& q, long n,
                                            const ReductionResult& r) {
  const Rational& p = r.pole;
  const RationalPolynomial b = poly_shift(q, p);
  LaurentPolynomial res(p);
  res.add(n, Rational(1));
  for (const auto& [l, c] : r.basic) {
    if (l == -1)
      res.add(-1, -c);
    else
      res -= monomial_about(l, p) * c;
  }
  res -= r.elementary.derivative().times(b);
  res -= r.elementary.times(poly_derivative(b)) * Rational(1, 2);
  return res;
}

}  // namespace hyperint
