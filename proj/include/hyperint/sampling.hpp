#pragma once

// Seeded random inputs for the verification suites and the tests.

#include "hyperint/polynomial.hpp"
#include "hyperint/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace hyperint {

class CaseGenerator {
 public:
  explicit CaseGenerator(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Small-height rational num/den with |num| <= max_num, 1 <= den <= max_den.
  Rational rational(long max_num = 9, long max_den = 7) {
    Rational r(integer(-max_num, max_num), integer(1, max_den));
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational(long max_num = 9, long max_den = 7) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!is_zero(r)) return r;
    }
  }

  RationalPolynomial polynomial(long degree) {
    std::vector<Rational> c;
    for (long j = 0; j < degree; ++j) c.push_back(rational());
    c.push_back(nonzero_rational());
    return RationalPolynomial(std::move(c));
  }

  /// Distinct sorted rationals.
  std::vector<Rational> distinct_sorted(std::size_t count, long max_num = 40, long max_den = 6) {
    std::vector<Rational> out;
    while (out.size() < count) {
      Rational r = rational(max_num, max_den);
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hyperint
