#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bernpos/univariate.hpp"

namespace bernpos {

/// Tensor-product Bernstein form at degrees (q1, q2).
///   Plain:      sum C_{k,l} x1^k (1-x1)^(q1-k) x2^l (1-x2)^(q2-l)
///   Normalized: sum c_{k,l} C(q1,k) C(q2,l) x1^k (1-x1)^(q1-k) x2^l (1-x2)^(q2-l)
struct BernsteinForm2D {
  Degree q1 = 0;
  Degree q2 = 0;
  Matrix<Rational> coeffs;
  Convention convention = Convention::Normalized;

  BernsteinForm2D to(Convention target) const {
    if (target == convention) return *this;
    BernsteinForm2D out{q1, q2, coeffs, target};
    const auto b1 = binomial_row(q1);
    const auto b2 = binomial_row(q2);
    for (Degree k = 0; k <= q1; ++k)
      for (Degree l = 0; l <= q2; ++l) {
        const Rational f(b1[k] * b2[l]);
        if (target == Convention::Plain)
          out.coeffs(k, l) *= f;
        else
          out.coeffs(k, l) /= f;
      }
    return out;
  }

  friend bool operator==(const BernsteinForm2D&, const BernsteinForm2D&) = default;
};

/// Plain Bernstein coefficients of p at (q1, q2), the one-variable
/// conversion applied along each axis:
///   C_{i,j} = sum_{a<=min(n1,i)} sum_{b<=min(n2,j)} C(q1-a, q1-i) C(q2-b, q2-j) a_{a,b}.
inline BernsteinForm2D to_bernstein_plain(const BPoly& p, Degree q1, Degree q2) {
  const Degree n1 = p.degree1();
  const Degree n2 = p.degree2();
  if (q1 < n1 || q2 < n2)
    throw degree_error("to_bernstein_plain: degrees (" + std::to_string(q1) + "," + std::to_string(q2) +
                       ") below polynomial degrees (" + std::to_string(n1) + "," + std::to_string(n2) + ")");
  Matrix<Rational> rows(n1 + 1, q2 + 1);
  for (Degree a = 0; a <= n1; ++a) {
    auto r = p.coeffs().row(a);
    const auto form = to_bernstein_plain(UPoly(std::vector<Rational>(r.begin(), r.end())), q2);
    for (Degree j = 0; j <= q2; ++j) rows(a, j) = form.coeffs[j];
  }
  BernsteinForm2D out{q1, q2, Matrix<Rational>(q1 + 1, q2 + 1), Convention::Plain};
  for (Degree a = 0; a <= n1; ++a) {
    const auto binoms = binomial_row(q1 - a);  // C(q1-a, q1-i) = C(q1-a, i-a)
    for (Degree i = a; i <= q1; ++i) {
      const Rational f(binoms[i - a]);
      for (Degree j = 0; j <= q2; ++j)
        if (rows(a, j) != 0) out.coeffs(i, j) += f * rows(a, j);
    }
  }
  return out;
}

/// Monomial form of a bivariate Bernstein expansion, multiplying out the
/// basis one axis at a time. Cost grows like q1*q2*(q1+q2).
inline BPoly expand(const BernsteinForm2D& form) {
  const BernsteinForm2D plain = form.to(Convention::Plain);
  const Degree q1 = plain.q1;
  const Degree q2 = plain.q2;
  Matrix<Rational> half(q1 + 1, q2 + 1);
  for (Degree i = 0; i <= q1; ++i) {
    auto r = plain.coeffs.row(i);
    const UPoly row = from_bernstein({q2, std::vector<Rational>(r.begin(), r.end()), Convention::Plain});
    for (Degree j = 0; j <= row.degree(); ++j) half(i, j) = row.coeff(j);
  }
  Matrix<Rational> out(q1 + 1, q2 + 1);
  for (Degree j = 0; j <= q2; ++j) {
    std::vector<Rational> col(q1 + 1);
    for (Degree i = 0; i <= q1; ++i) col[i] = half(i, j);
    const UPoly c = from_bernstein({q1, std::move(col), Convention::Plain});
    for (Degree i = 0; i <= c.degree(); ++i) out(i, j) = c.coeff(i);
  }
  return BPoly(std::move(out));
}

enum class Method { Nested, DegreeRaise };

inline std::string to_string(Method m) { return m == Method::Nested ? "nested" : "raise"; }

/// Quantities behind the degrees chosen by the nested construction.
struct NestedDegreeReport {
  Degree q1 = 0;
  Degree q2 = 0;
  Rational lambda_lower;
  Rational L_upper;
  std::vector<Rational> per_i_inf_lower;
  std::vector<Rational> per_i_maxB_upper;
  /// Degrees of the minimum enclosure that produced lambda_lower.
  Degree lambda_q1 = 0;
  Degree lambda_q2 = 0;

  friend bool operator==(const NestedDegreeReport&, const NestedDegreeReport&) = default;
};

/// Trace of the degree-raising construction.
struct RaiseReport {
  Degree start_q1 = 0;
  Degree start_q2 = 0;
  std::size_t doublings = 0;
  Rational c_min;
  Rational bound;  ///< gamma1 (q1-1)/q1^2 + gamma2 (q2-1)/q2^2 at the final degrees
  /// Normalized coefficients at the final degrees; kept in memory only.
  std::optional<Matrix<Rational>> normalized;

  friend bool operator==(const RaiseReport& a, const RaiseReport& b) {
    return a.start_q1 == b.start_q1 && a.start_q2 == b.start_q2 && a.doublings == b.doublings &&
           a.c_min == b.c_min && a.bound == b.bound;
  }
};

/// Degrees (q1, q2) and a strictly positive plain coefficient matrix whose
/// expansion reproduces the polynomial.
struct PositivityCertificate {
  Degree q1 = 0;
  Degree q2 = 0;
  Matrix<Rational> C;
  Convention convention = Convention::Plain;
  Method method = Method::DegreeRaise;
  std::variant<std::monostate, NestedDegreeReport, RaiseReport> report;

  BernsteinForm2D form() const { return {q1, q2, C, convention}; }
};

struct VerifyResult {
  struct Entry {
    Degree i = 0;
    Degree j = 0;
    Rational value;
  };
  struct MonomialMismatch {
    Degree i = 0;  ///< power of x1
    Degree j = 0;  ///< power of x2
    Rational expected;
    Rational actual;
  };

  bool valid = false;
  std::optional<std::string> malformed;
  std::optional<Entry> nonpositive;
  std::optional<MonomialMismatch> mismatch;

  explicit operator bool() const noexcept { return valid; }

  /// One-line summary of every failure found; empty when valid.
  std::string reason() const {
    std::string out;
    auto add = [&](const std::string& s) { out += (out.empty() ? "" : "; ") + s; };
    if (malformed) add("malformed: " + *malformed);
    if (mismatch)
      add("expansion mismatch at x1^" + std::to_string(mismatch->i) + " x2^" + std::to_string(mismatch->j) +
          ": expected " + to_string(mismatch->expected) + ", got " + to_string(mismatch->actual));
    if (nonpositive)
      add("nonpositive entry C[" + std::to_string(nonpositive->i) + "][" + std::to_string(nonpositive->j) +
          "] = " + to_string(nonpositive->value));
    return out;
  }
};

/// Checks a certificate against p using only the two inputs: every C_{i,j}
/// must be > 0 and the plain expansion must equal p.
///
/// Equality is decided in the Bernstein basis at (q1, q2): the difference
/// D = C - (plain coefficients of p) vanishes iff the expansions agree. When
/// it does not, the lexicographically first monomial whose coefficient
/// differs is x1^i0 x2^j0 with i0 the first nonzero row of D and j0 the first
/// nonzero entry in that row; its coefficient in the expansion of C is
/// a_{i0,j0} + D_{i0,j0}.
inline VerifyResult verify(const BPoly& p, const PositivityCertificate& cert) {
  VerifyResult res;
  if (cert.C.rows() != cert.q1 + 1 || cert.C.cols() != cert.q2 + 1) {
    res.malformed = "matrix is " + std::to_string(cert.C.rows()) + "x" + std::to_string(cert.C.cols()) +
                    ", degrees require " + std::to_string(cert.q1 + 1) + "x" + std::to_string(cert.q2 + 1);
    return res;
  }
  const BernsteinForm2D plain = cert.form().to(Convention::Plain);
  for (Degree i = 0; i <= cert.q1 && !res.nonpositive; ++i)
    for (Degree j = 0; j <= cert.q2; ++j)
      if (plain.coeffs(i, j) <= 0) {
        res.nonpositive = VerifyResult::Entry{i, j, plain.coeffs(i, j)};
        break;
      }

  if (cert.q1 < p.degree1() || cert.q2 < p.degree2()) {
    // The expansion has no monomials past (q1, q2) but p does.
    for (Degree i = 0; i <= p.degree1() && !res.mismatch; ++i)
      for (Degree j = 0; j <= p.degree2(); ++j)
        if ((i > cert.q1 || j > cert.q2) && p.coeff(i, j) != 0) {
          res.mismatch = VerifyResult::MonomialMismatch{i, j, p.coeff(i, j), 0};
          break;
        }
    return res;
  }

  const BernsteinForm2D expected = to_bernstein_plain(p, cert.q1, cert.q2);
  for (Degree i = 0; i <= cert.q1 && !res.mismatch; ++i)
    for (Degree j = 0; j <= cert.q2; ++j) {
      const Rational d = plain.coeffs(i, j) - expected.coeffs(i, j);
      if (d != 0) {
        res.mismatch = VerifyResult::MonomialMismatch{i, j, p.coeff(i, j), p.coeff(i, j) + d};
        break;
      }
    }
  res.valid = !res.nonpositive && !res.mismatch;
  return res;
}

}  // namespace bernpos
