#pragma once

#include <string>
#include <vector>

#include "bernpos/bivariate_raise.hpp"

namespace bernpos {

/// A_{i,q1}(a(x2)) for i = 0..q1: the plain Bernstein coefficients in x1 of
/// p, each a polynomial in x2 with coefficients
///   b_{k,i,q1} = sum_{j=0}^{min(n1,i)} C(q1-j, q1-i) a_{j,k}.
inline std::vector<UPoly> coefficient_bernstein_polys(const BPoly& p, Degree q1) {
  const Degree n1 = p.degree1();
  if (q1 < n1)
    throw degree_error("coefficient_bernstein_polys: q1 = " + std::to_string(q1) + " is below n1 = " +
                       std::to_string(n1));
  const auto rows = p.coefficient_rows();
  std::vector<UPoly> out;
  out.reserve(q1 + 1);
  std::vector<std::vector<Integer>> binoms;
  for (Degree j = 0; j <= n1; ++j) binoms.push_back(binomial_row(q1 - j));  // C(q1-j, q1-i) = C(q1-j, i-j)
  for (Degree i = 0; i <= q1; ++i) {
    UPoly acc;
    for (Degree j = 0; j <= std::min(n1, i); ++j) acc = acc + Rational(binoms[j][i - j]) * rows[j];
    out.push_back(std::move(acc));
  }
  return out;
}

/// B_k(a(x2)) for k = 0..n1: the Goursat coefficients of p(., x2), each a
/// polynomial in x2 (linear in the rows a_i(x2)).
inline std::vector<UPoly> goursat_coefficient_polys(const BPoly& p) {
  const Degree n = p.degree1();
  const auto rows = p.coefficient_rows();
  std::vector<UPoly> out(n + 1);
  const Rational two_n(Integer(1) << static_cast<mp_bitcnt_t>(n));
  for (Degree i = 0; i <= n; ++i)
    for (Degree j = 0; j <= i; ++j) {
      const Rational f = two_n * binomial(i, static_cast<std::int64_t>(j)) * (j % 2 == 0 ? 1 : -1);
      out[n - i + j] = out[n - i + j] + f * rows[i];
    }
  return out;
}

struct NestedOptions {
  RefineLimits refine;
  std::size_t max_doublings = 20;
};

/// First-pass degree q1 = 2 (3 n1 + ceil(2 n1^2 L / lambda) + 1) with lambda a
/// certified lower bound on min p and L a certified upper bound on
/// sup_{x2} max_i |B_i(a(x2))|. Fills the q1-related fields of the report.
inline NestedDegreeReport nested_q1(const BPoly& p, const NestedOptions& opts = {}) {
  detail::check_corners("nested_q1", p);
  NestedDegreeReport r;
  const LambdaBound lb = lambda_lower_bound(p, opts.max_doublings);
  r.lambda_lower = lb.lambda_lower;
  r.lambda_q1 = lb.enclosure.q1;
  r.lambda_q2 = lb.enclosure.q2;

  r.L_upper = 0;
  for (const UPoly& b : goursat_coefficient_polys(p)) {
    RangeEnclosure1D e;
    try {
      e = range_enclosure_1d(b, r.lambda_lower, opts.refine);
    } catch (const inconclusive_error& err) {
      throw inconclusive_error(std::string("nested_q1: bounding a Goursat coefficient: ") + err.what(), err.lo(),
                               err.hi());
    }
    r.L_upper = std::max({r.L_upper, abs(e.lo), abs(e.hi)});
  }
  r.q1 = 2 * powers_reznick_degree(p.degree1(), r.L_upper, r.lambda_lower);
  return r;
}

/// Second-pass degree q2 = 2 (3 n2 + max_i ceil(2 n2^2 maxB_i / inf_i) + 1)
/// over the coefficient polynomials A_{i,q1}(a(x2)). Fills report.q2 and the
/// per-row quantities.
inline Degree nested_q2(const BPoly& p, Degree q1, NestedDegreeReport& report, const NestedOptions& opts = {}) {
  const Degree n2 = p.degree2();
  const auto rows = coefficient_bernstein_polys(p, q1);
  report.per_i_inf_lower.assign(rows.size(), Rational(0));
  report.per_i_maxB_upper.assign(rows.size(), Rational(0));
  Integer worst = 0;
  for (Degree i = 0; i < rows.size(); ++i) {
    RangeEnclosure1D e;
    try {
      e = positive_lower_bound_1d(rows[i], opts.refine);
    } catch (const inconclusive_error& err) {
      throw inconclusive_error("nested_q2: row " + std::to_string(i) + ": " + err.what(), err.lo(), err.hi());
    }
    if (e.min_value <= 0)
      throw inconclusive_error("nested_q2: row " + std::to_string(i) + " takes the value " + to_string(e.min_value) +
                                   " at x2 = " + to_string(e.min_at) + "; q1 = " + std::to_string(q1) +
                                   " does not give a positive first pass",
                               e.lo, e.hi);
    report.per_i_inf_lower[i] = e.lo;
    report.per_i_maxB_upper[i] = max_abs(goursat_coefficients(rows[i], n2));
    const Rational ratio = Rational(2 * Integer(n2) * Integer(n2)) * report.per_i_maxB_upper[i] / e.lo;
    worst = std::max(worst, ceil(ratio));
  }
  report.q1 = q1;
  report.q2 = 2 * to_degree(Integer(3 * Integer(n2)) + worst + 1);
  return report.q2;
}

/// Positivity certificate built by applying the univariate construction in
/// x1 and then in x2 to each coefficient polynomial.
inline PositivityCertificate certify_nested(const BPoly& p, const NestedOptions& opts = {}) {
  detail::check_corners("certify_nested", p);
  NestedDegreeReport report = nested_q1(p, opts);
  const Degree q2 = nested_q2(p, report.q1, report, opts);
  const auto rows = coefficient_bernstein_polys(p, report.q1);

  PositivityCertificate cert;
  cert.q1 = report.q1;
  cert.q2 = q2;
  cert.C = Matrix<Rational>(report.q1 + 1, q2 + 1);
  cert.method = Method::Nested;
  for (Degree i = 0; i <= report.q1; ++i) {
    const auto form = to_bernstein_plain(rows[i], q2);
    for (Degree j = 0; j <= q2; ++j) {
      if (form.coeffs[j] <= 0)
        throw inconclusive_error("certify_nested: C[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                                 to_string(form.coeffs[j]) + " is not positive at q2 = " + std::to_string(q2));
      cert.C(i, j) = form.coeffs[j];
    }
  }
  cert.report = std::move(report);
  return cert;
}

}  // namespace bernpos
