#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "bernpos/errors.hpp"

namespace bernpos {

/// Exact rational scalar. GMP keeps every result of arithmetic in lowest
/// terms with a positive denominator; values built from raw parts go
/// through make_rational / parse_rational so that invariant always holds.
using Rational = mpq_class;
using Integer = mpz_class;

/// Polynomial degrees and Bernstein indices.
using Degree = std::size_t;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// Parses "n" or "n/d" where n is an optionally negative decimal integer and
/// d a positive decimal integer. Anything else is rejected.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  std::string_view mag = !num.empty() && num.front() == '-' ? num.substr(1) : num;
  if (!digits(mag) || !digits(den))
    throw parse_error("malformed rational '" + std::string(text) + "'");
  Integer d(std::string(den), 10);
  if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  return make_rational(Integer(std::string(num), 10), d);
}

/// "n" for integers, "n/d" otherwise; always lowest terms.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Smallest integer >= r.
inline Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Rational pow(const Rational& base, Degree e) {
  Rational result(1);
  Rational b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

inline Degree to_degree(const Integer& v) {
  if (v < 0 || !v.fits_ulong_p() || v.get_ui() > std::numeric_limits<Degree>::max() / 4)
    throw domain_error("degree " + v.get_str() + " is out of the representable range");
  return static_cast<Degree>(v.get_ui());
}

/// C(m, v) as an integer; zero outside 0 <= v <= m.
inline Integer binomial(Degree m, std::int64_t v) {
  Integer r;
  if (v < 0 || static_cast<Degree>(v) > m) return r;
  mpz_bin_uiui(r.get_mpz_t(), m, static_cast<unsigned long>(v));
  return r;
}

/// C(m, 0), ..., C(m, m) by the multiplicative recurrence.
inline std::vector<Integer> binomial_row(Degree m) {
  std::vector<Integer> row(m + 1);
  row[0] = 1;
  for (Degree k = 0; k < m; ++k) {
    mpz_mul_ui(row[k + 1].get_mpz_t(), row[k].get_mpz_t(), m - k);
    mpz_divexact_ui(row[k + 1].get_mpz_t(), row[k + 1].get_mpz_t(), k + 1);
  }
  return row;
}

/// C(m, v) with the convention C(m, v) = 0 for v < 0 or v > m.
inline Rational binom(std::int64_t m, std::int64_t v) {
  if (m < 0) throw domain_error("binom: m must be non-negative, got " + std::to_string(m));
  return Rational(binomial(static_cast<Degree>(m), v));
}

}  // namespace bernpos
