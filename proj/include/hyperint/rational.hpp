#pragma once

// Exact rational scalar used by every symbolic computation, plus the few
// scalar helpers that let the same templates run over Rational and double.

#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace hyperint {

/// Arbitrary-precision signed rational. GMP keeps every value canonical
/// (lowest terms, positive denominator) after each arithmetic operation.
using Rational = mpq_class;

/// Parses the text form "p/q", "p", with an optional leading sign on p.
/// Throws std::invalid_argument for anything else, including q == 0.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  if (text.front() == '-') n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Canonical text form: "-15/256", integers without "/1".
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Round-to-nearest conversion (mpq_get_d truncates, so go through MPFR).
inline double to_double(const Rational& r) {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, r.get_mpq_t(), MPFR_RNDN);
  const double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}
inline double to_double(double x) { return x; }

/// Value conversion between the exact and floating scalars.
template <class To, class From>
To scalar_cast(const From& v) {
  if constexpr (std::is_same_v<To, double> && std::is_same_v<From, Rational>)
    return to_double(v);
  else
    return To(v);
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline int sign_of(const Rational& r) { return sgn(r); }
inline int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

inline Rational abs_value(const Rational& r) { return abs(r); }
inline double abs_value(double x) { return std::fabs(x); }

/// Integer power with non-negative exponent.
template <class T>
T ipow(const T& base, unsigned exponent) {
  T result(1);
  T b(base);
  while (exponent) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1u;
  }
  return result;
}

/// Integer power allowing negative exponents (base must be nonzero then).
template <class T>
T ipow_signed(const T& base, long exponent) {
  if (exponent >= 0) return ipow(base, static_cast<unsigned>(exponent));
  if (is_zero(base)) throw std::domain_error("negative power of zero");
  return T(1) / ipow(base, static_cast<unsigned>(-exponent));
}

inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

}  // namespace hyperint
