#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bernpos/certificate.hpp"

namespace bernpos {

namespace detail {

/// w[k][i] = C(k,i) / C(q,i) for k in 0..q, i in 0..n (zero when k < i).
inline Matrix<Rational> binomial_ratio_table(Degree q, Degree n) {
  Matrix<Rational> w(q + 1, n + 1);
  for (Degree i = 0; i <= n; ++i) {
    const Integer denom = binomial(q, static_cast<std::int64_t>(i));
    for (Degree k = i; k <= q; ++k) w(k, i) = make_rational(binomial(k, static_cast<std::int64_t>(i)), denom);
  }
  return w;
}

inline void check_degrees(const char* who, const BPoly& p, Degree q1, Degree q2) {
  if (q1 < p.degree1() || q2 < p.degree2())
    throw degree_error(std::string(who) + ": degrees (" + std::to_string(q1) + "," + std::to_string(q2) +
                       ") below polynomial degrees (" + std::to_string(p.degree1()) + "," +
                       std::to_string(p.degree2()) + ")");
}

/// m(k, l) = sum_{i,j} a_{i,j} w1(k, i) w2(l, j), contracted one axis at a time.
inline Matrix<Rational> contract(const BPoly& p, const Matrix<Rational>& w1, const Matrix<Rational>& w2) {
  const Degree n1 = p.degree1();
  const Degree n2 = p.degree2();
  Matrix<Rational> t(n1 + 1, w2.rows());
  for (Degree i = 0; i <= n1; ++i)
    for (Degree l = 0; l < w2.rows(); ++l) {
      Rational acc = 0;
      for (Degree j = 0; j <= n2; ++j)
        if (p.coeffs()(i, j) != 0 && w2(l, j) != 0) acc += p.coeffs()(i, j) * w2(l, j);
      t(i, l) = std::move(acc);
    }
  Matrix<Rational> out(w1.rows(), w2.rows());
  for (Degree k = 0; k < w1.rows(); ++k)
    for (Degree i = 0; i <= n1; ++i) {
      if (w1(k, i) == 0) continue;
      for (Degree l = 0; l < w2.rows(); ++l)
        if (t(i, l) != 0) out(k, l) += w1(k, i) * t(i, l);
    }
  return out;
}

/// w[k][i] = (k/q)^i.
inline Matrix<Rational> grid_power_table(Degree q, Degree n) {
  Matrix<Rational> w(q + 1, n + 1);
  for (Degree k = 0; k <= q; ++k) {
    const Rational x = make_rational(static_cast<long>(k), static_cast<long>(q));
    Rational v = 1;
    for (Degree i = 0; i <= n; ++i) {
      w(k, i) = v;
      v *= x;
    }
  }
  return w;
}

}  // namespace detail

/// Normalized Bernstein coefficients at (q1, q2):
///   c_{k,l} = sum_{i,j} a_{i,j} C(k,i) C(l,j) / (C(q1,i) C(q2,j)).
inline BernsteinForm2D bern_coeffs(const BPoly& p, Degree q1, Degree q2) {
  detail::check_degrees("bern_coeffs", p, q1, q2);
  const auto w1 = detail::binomial_ratio_table(q1, p.degree1());
  const auto w2 = detail::binomial_ratio_table(q2, p.degree2());
  return {q1, q2, detail::contract(p, w1, w2), Convention::Normalized};
}

struct MinCoeff {
  Rational value;
  Degree k = 0;  ///< first (row-major) index attaining the minimum
  Degree l = 0;
};

inline MinCoeff min_coeff_at(const BernsteinForm2D& b) {
  MinCoeff m{b.coeffs(0, 0), 0, 0};
  for (Degree k = 0; k <= b.q1; ++k)
    for (Degree l = 0; l <= b.q2; ++l)
      if (b.coeffs(k, l) < m.value) m = {b.coeffs(k, l), k, l};
  return m;
}

inline Rational min_coeff(const BernsteinForm2D& b) { return min_coeff_at(b).value; }

struct GammaBounds {
  Rational gamma1;
  Rational gamma2;
};

/// gamma1 = 1/2 sum |a_{i,j}| i(i-1), gamma2 = 1/2 sum |a_{i,j}| j(j-1).
inline GammaBounds gamma_bounds(const BPoly& p) {
  GammaBounds g{0, 0};
  for (Degree i = 0; i <= p.degree1(); ++i)
    for (Degree j = 0; j <= p.degree2(); ++j) {
      const Rational a = abs(p.coeffs()(i, j));
      if (i >= 2) g.gamma1 += a * static_cast<unsigned long>(i * (i - 1));
      if (j >= 2) g.gamma2 += a * static_cast<unsigned long>(j * (j - 1));
    }
  g.gamma1 /= 2;
  g.gamma2 /= 2;
  return g;
}

/// gamma1 (q1-1)/q1^2 + gamma2 (q2-1)/q2^2.
inline Rational enclosure_bound(const GammaBounds& g, Degree q1, Degree q2) {
  auto term = [](Degree q) {
    return make_rational(Integer(static_cast<unsigned long>(q - 1)),
                         Integer(static_cast<unsigned long>(q)) * static_cast<unsigned long>(q));
  };
  return g.gamma1 * term(q1) + g.gamma2 * term(q2);
}

/// [c_min, c_min + bound] contains the minimum of p over the unit box.
struct MinEnclosure {
  Degree q1 = 0;
  Degree q2 = 0;
  Rational c_min;
  Rational bound;

  Rational lo() const { return c_min; }
  Rational hi() const { return c_min + bound; }
};

inline MinEnclosure min_enclosure(const BPoly& p, Degree q1, Degree q2) {
  if (q1 < std::max<Degree>(p.degree1(), 2) || q2 < std::max<Degree>(p.degree2(), 2))
    throw degree_error("min_enclosure: degrees must be at least max(n, 2) in each variable");
  return {q1, q2, min_coeff(bern_coeffs(p, q1, q2)), enclosure_bound(gamma_bounds(p), q1, q2)};
}

/// (k/q1)^i (l/q2)^j - C(k,i) C(l,j) / (C(q1,i) C(q2,j)): the normalized
/// Bernstein coefficients of B_{q1,q2}(x1^i x2^j) - x1^i x2^j.
inline Rational delta(Degree i, Degree j, Degree k, Degree l, Degree q1, Degree q2) {
  if (q1 == 0 || q2 == 0 || i > q1 || j > q2 || k > q1 || l > q2)
    throw degree_error("delta: requires 0 <= i,k <= q1 and 0 <= j,l <= q2 with q1, q2 >= 1");
  const Rational grid = pow(make_rational(static_cast<long>(k), static_cast<long>(q1)), i) *
                        pow(make_rational(static_cast<long>(l), static_cast<long>(q2)), j);
  const Rational ratio = make_rational(binomial(k, static_cast<std::int64_t>(i)) * binomial(l, static_cast<std::int64_t>(j)),
                                       binomial(q1, static_cast<std::int64_t>(i)) * binomial(q2, static_cast<std::int64_t>(j)));
  return grid - ratio;
}

/// Exact values p(k/q1, l/q2) on the Bernstein grid.
inline Matrix<Rational> grid_values(const BPoly& p, Degree q1, Degree q2) {
  return detail::contract(p, detail::grid_power_table(q1, p.degree1()), detail::grid_power_table(q2, p.degree2()));
}

/// The Bernstein operator B_{q1,q2}(p) in monomial form.
inline BPoly bernstein_approximation(const BPoly& p, Degree q1, Degree q2) {
  if (q1 == 0 || q2 == 0) throw degree_error("bernstein_approximation: degrees must be positive");
  return expand({q1, q2, grid_values(p, q1, q2), Convention::Normalized});
}

struct GridMin {
  Rational value;
  Rational x1;
  Rational x2;
};

inline GridMin grid_min(const BPoly& p, Degree q1, Degree q2) {
  const auto g = grid_values(p, q1, q2);
  Degree bk = 0, bl = 0;
  for (Degree k = 0; k <= q1; ++k)
    for (Degree l = 0; l <= q2; ++l)
      if (g(k, l) < g(bk, bl)) bk = k, bl = l;
  return {g(bk, bl), make_rational(static_cast<long>(bk), static_cast<long>(q1)),
          make_rational(static_cast<long>(bl), static_cast<long>(q2))};
}

namespace detail {

[[noreturn]] inline void throw_witness(const std::string& who, const Rational& x1, const Rational& x2,
                                       const Rational& v) {
  throw not_positive_error(who + ": p(" + to_string(x1) + "," + to_string(x2) + ") = " + to_string(v) + " <= 0",
                           {x1, x2}, v);
}

/// Refutes positivity early when a corner of the box is <= 0.
inline void check_corners(const std::string& who, const BPoly& p) {
  for (const long a : {0L, 1L})
    for (const long b : {0L, 1L}) {
      const Rational v = p(a, b);
      if (v <= 0) throw_witness(who, a, b, v);
    }
}

inline std::pair<Degree, Degree> start_degrees(const BPoly& p) {
  return {std::max<Degree>(p.degree1(), 2), std::max<Degree>(p.degree2(), 2)};
}

}  // namespace detail

struct RaiseOptions {
  std::optional<std::pair<Degree, Degree>> q_start;
  std::size_t max_doublings = 20;
};

/// Certified positive lower bound on min p over the box from the minimum
/// Bernstein coefficient. Degrees double from max(n, 2) until c_min > 0 and
/// c_min is at least half the smallest grid value seen.
struct LambdaBound {
  Rational lambda_lower;
  MinEnclosure enclosure;
  Rational grid_min;
};

inline LambdaBound lambda_lower_bound(const BPoly& p, std::size_t max_doublings = 20) {
  detail::check_corners("lambda_lower_bound", p);
  auto [q1, q2] = detail::start_degrees(p);
  const GammaBounds g = gamma_bounds(p);
  for (std::size_t step = 0;; ++step) {
    const Rational c = min_coeff(bern_coeffs(p, q1, q2));
    const GridMin gm = grid_min(p, q1, q2);
    if (gm.value <= 0) detail::throw_witness("lambda_lower_bound", gm.x1, gm.x2, gm.value);
    const MinEnclosure enc{q1, q2, c, enclosure_bound(g, q1, q2)};
    if (c > 0 && 2 * c >= gm.value) return {c, enc, gm.value};
    if (step == max_doublings)
      throw inconclusive_error("lambda_lower_bound: no positive lower bound after " + std::to_string(max_doublings) +
                                   " doublings",
                               enc.lo(), enc.hi());
    q1 *= 2;
    q2 *= 2;
  }
}

/// Raises (q1, q2) by doubling until every normalized Bernstein coefficient
/// is positive, then returns the plain-convention certificate.
inline PositivityCertificate certify_raise(const BPoly& p, const RaiseOptions& opts = {}) {
  detail::check_corners("certify_raise", p);
  auto [q1, q2] = opts.q_start.value_or(detail::start_degrees(p));
  detail::check_degrees("certify_raise", p, q1, q2);
  if (q1 == 0 || q2 == 0) throw degree_error("certify_raise: starting degrees must be positive");
  const GammaBounds g = gamma_bounds(p);
  RaiseReport report;
  report.start_q1 = q1;
  report.start_q2 = q2;
  for (std::size_t step = 0;; ++step) {
    BernsteinForm2D form = bern_coeffs(p, q1, q2);
    const Rational c = min_coeff(form);
    if (c > 0) {
      report.doublings = step;
      report.c_min = c;
      report.bound = enclosure_bound(g, q1, q2);
      PositivityCertificate cert;
      cert.q1 = q1;
      cert.q2 = q2;
      cert.C = form.to(Convention::Plain).coeffs;
      cert.method = Method::DegreeRaise;
      report.normalized = std::move(form.coeffs);
      cert.report = std::move(report);
      return cert;
    }
    const GridMin gm = grid_min(p, q1, q2);
    if (gm.value <= 0) detail::throw_witness("certify_raise", gm.x1, gm.x2, gm.value);
    if (step == opts.max_doublings) {
      const Rational b = enclosure_bound(g, q1, q2);
      throw inconclusive_error("certify_raise: minimum coefficient still " + to_string(c) + " at degrees (" +
                                   std::to_string(q1) + "," + std::to_string(q2) + ") after " +
                                   std::to_string(opts.max_doublings) + " doublings",
                               c, c + b);
    }
    q1 *= 2;
    q2 *= 2;
  }
}

}  // namespace bernpos
