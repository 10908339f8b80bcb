#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bernpos/polynomial.hpp"

namespace bernpos {

/// Which Bernstein basis a coefficient vector refers to.
///   Plain:      x^i (1-x)^(m-i)
///   Normalized: C(m,i) x^i (1-x)^(m-i)
enum class Convention { Plain, Normalized };

struct BernsteinForm1D {
  Degree degree = 0;
  std::vector<Rational> coeffs;
  Convention convention = Convention::Plain;

  BernsteinForm1D to(Convention target) const {
    if (target == convention) return *this;
    BernsteinForm1D out{degree, coeffs, target};
    const auto row = binomial_row(degree);
    for (Degree i = 0; i <= degree; ++i) {
      const Rational c(row[i]);
      if (target == Convention::Plain)
        out.coeffs[i] *= c;
      else
        out.coeffs[i] /= c;
    }
    return out;
  }

  friend bool operator==(const BernsteinForm1D&, const BernsteinForm1D&) = default;
};

/// Plain Bernstein coefficients of p at degree m:
///   A_i = sum_{j=0}^{min(n,i)} C(m-j, m-i) a_j,  0 <= i <= m.
inline BernsteinForm1D to_bernstein_plain(const UPoly& p, Degree m) {
  const Degree n = p.degree();
  if (m < n)
    throw degree_error("to_bernstein_plain: degree " + std::to_string(m) + " is below the polynomial degree " +
                       std::to_string(n));
  BernsteinForm1D out{m, std::vector<Rational>(m + 1), Convention::Plain};
  // C(m-j, m-i) = C(m-j, i-j): row m-j of Pascal's triangle, shifted by j.
  for (Degree j = 0; j <= n; ++j) {
    const Rational& a = p.coeffs()[j];
    if (a == 0) continue;
    const auto row = binomial_row(m - j);
    for (Degree i = j; i <= m; ++i) out.coeffs[i] += a * row[i - j];
  }
  return out;
}

inline BernsteinForm1D to_bernstein_normalized(const UPoly& p, Degree m) {
  return to_bernstein_plain(p, m).to(Convention::Normalized);
}

/// Monomial form of a Bernstein expansion, by multiplying out
/// x^i (1-x)^(m-i) = sum_t (-1)^t C(m-i, t) x^(i+t).
inline UPoly from_bernstein(const BernsteinForm1D& b) {
  const BernsteinForm1D plain = b.to(Convention::Plain);
  const Degree m = plain.degree;
  std::vector<Rational> out(m + 1);
  for (Degree i = 0; i <= m; ++i) {
    const Rational& a = plain.coeffs[i];
    if (a == 0) continue;
    const auto row = binomial_row(m - i);
    for (Degree t = 0; t + i <= m; ++t) {
      if (t % 2 == 0)
        out[i + t] += a * row[t];
      else
        out[i + t] -= a * row[t];
    }
  }
  return UPoly(std::move(out));
}

/// Monomial coefficients e_0..e_n of the Goursat transform
/// (2x)^n p((1-x)/x), treating p as an element of P_n. `formal_degree`
/// defaults to the stored degree and may exceed it.
inline std::vector<Rational> goursat_coefficients(const UPoly& p, std::optional<Degree> formal_degree = {}) {
  const Degree n = formal_degree.value_or(p.degree());
  if (n < p.degree()) throw degree_error("goursat: formal degree below polynomial degree");
  std::vector<Rational> e(n + 1);
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  // (2x)^n a_i ((1-x)/x)^i = 2^n a_i (1-x)^i x^(n-i): term (i, j) lands on k = n - i + j.
  for (Degree i = 0; i <= p.degree(); ++i) {
    const Rational& a = p.coeffs()[i];
    if (a == 0) continue;
    for (Degree j = 0; j <= i; ++j) {
      Rational term = a * two_n * binomial(i, static_cast<std::int64_t>(j));
      if (j % 2 == 0)
        e[n - i + j] += term;
      else
        e[n - i + j] -= term;
    }
  }
  return e;
}

inline UPoly goursat(const UPoly& p) { return UPoly(goursat_coefficients(p)); }

inline Rational max_abs(const std::vector<Rational>& v) {
  Rational m = 0;
  for (const auto& x : v) m = std::max(m, abs(x));
  return m;
}

/// q = 3n + ceil(2 n^2 max|e_j| / lambda) + 1, the degree at which a
/// polynomial bounded below by lambda > 0 on [0,1] has non-negative plain
/// Bernstein coefficients.
inline Degree powers_reznick_degree(Degree n, const Rational& max_abs_e, const Rational& lambda_lower) {
  if (lambda_lower <= 0)
    throw not_positive_error("powers_reznick_degree: lower bound " + to_string(lambda_lower) + " is not positive",
                             {}, lambda_lower);
  if (max_abs_e < 0) throw domain_error("powers_reznick_degree: max |e_j| must be non-negative");
  const Rational ratio = Rational(2 * Integer(n) * Integer(n)) * max_abs_e / lambda_lower;
  return to_degree(Integer(3 * Integer(n)) + ceil(ratio) + 1);
}

/// Re-expresses a plain form at degree q_star >= q:
///   A*_k = sum_{l=max(0,k+q-q*)}^{min(q,k)} C(q*-q, k-l) A_l.
inline BernsteinForm1D elevate(const BernsteinForm1D& b, Degree q_star) {
  if (b.convention != Convention::Plain) return elevate(b.to(Convention::Plain), q_star);
  const Degree q = b.degree;
  if (q_star < q)
    throw degree_error("elevate: target degree " + std::to_string(q_star) + " is below " + std::to_string(q));
  const Degree d = q_star - q;
  BernsteinForm1D out{q_star, std::vector<Rational>(q_star + 1), Convention::Plain};
  const auto row = binomial_row(d);
  for (Degree k = 0; k <= q_star; ++k) {
    Rational acc = 0;
    for (Degree l = k + q > q_star ? k + q - q_star : 0; l <= std::min(q, k); ++l) acc += row[k - l] * b.coeffs[l];
    out.coeffs[k] = std::move(acc);
  }
  return out;
}

/// Splits normalized Bernstein coefficients on [a, b] at the midpoint.
inline std::pair<std::vector<Rational>, std::vector<Rational>> de_casteljau_split(std::vector<Rational> coeffs) {
  const std::size_t n = coeffs.size();
  std::vector<Rational> left(n), right(n);
  for (std::size_t r = 0; r < n; ++r) {
    left[r] = coeffs.front();
    right[n - 1 - r] = coeffs[n - 1 - r];
    for (std::size_t i = 0; i + 1 < n - r; ++i) {
      coeffs[i] += coeffs[i + 1];
      coeffs[i] /= 2;
    }
  }
  return {std::move(left), std::move(right)};
}

struct RefineLimits {
  /// Bisection depth of any one subinterval.
  Degree max_depth = 64;
  /// Total number of bisections across the whole search.
  std::size_t max_subdivisions = 100000;
};

/// Certified range of a polynomial over [0, 1]: lo <= p(x) <= hi for all x.
/// min_value / max_value are values actually attained (at min_at / max_at),
/// so the true minimum lies in [lo, min_value] and the maximum in
/// [max_value, hi].
struct RangeEnclosure1D {
  Rational lo;
  Rational hi;
  std::size_t subdivisions = 0;
  Rational min_value;
  Rational min_at;
  Rational max_value;
  Rational max_at;

  Rational lower_gap() const { return min_value - lo; }
  Rational upper_gap() const { return hi - max_value; }
};

enum class RefineEnd { Both, Lower, Upper };

using EnclosurePredicate = std::function<bool(const RangeEnclosure1D&)>;

namespace detail {

struct EnclosureLeaf {
  Rational a;
  Rational b;
  Degree depth = 0;
  std::vector<Rational> coeffs;
  Rational min_coeff;
  Rational max_coeff;

  void update_bounds() {
    const auto [mn, mx] = std::minmax_element(coeffs.begin(), coeffs.end());
    min_coeff = *mn;
    max_coeff = *mx;
  }
};

}  // namespace detail

/// Bernstein range enclosure with adaptive exact bisection. Leaves whose
/// coefficient hull sets the current lower (or upper) bound are split by
/// de Casteljau at their midpoint until `stop` accepts the enclosure.
/// Throws inconclusive_error with the best (lo, hi) when the leaf that
/// would have to be split is already at the depth limit or the total
/// subdivision budget is spent.
inline RangeEnclosure1D range_enclosure_1d(const UPoly& p, const EnclosurePredicate& stop,
                                           RefineEnd focus = RefineEnd::Both, RefineLimits limits = {}) {
  std::vector<detail::EnclosureLeaf> leaves(1);
  leaves[0].a = 0;
  leaves[0].b = 1;
  leaves[0].coeffs = to_bernstein_normalized(p, p.degree()).coeffs;
  leaves[0].update_bounds();

  RangeEnclosure1D e;
  e.min_value = p.coeff(0);
  e.min_at = 0;
  e.max_value = e.min_value;
  e.max_at = 0;
  auto see = [&](const Rational& x, const Rational& v) {
    if (v < e.min_value) {
      e.min_value = v;
      e.min_at = x;
    }
    if (v > e.max_value) {
      e.max_value = v;
      e.max_at = x;
    }
  };
  see(Rational(1), leaves[0].coeffs.back());

  auto refresh = [&] {
    e.lo = leaves[0].min_coeff;
    e.hi = leaves[0].max_coeff;
    for (const auto& l : leaves) {
      e.lo = std::min(e.lo, l.min_coeff);
      e.hi = std::max(e.hi, l.max_coeff);
    }
  };
  refresh();

  while (!stop(e)) {
    bool lower;
    switch (focus) {
      case RefineEnd::Lower: lower = true; break;
      case RefineEnd::Upper: lower = false; break;
      default: lower = e.lower_gap() >= e.upper_gap(); break;
    }
    if ((lower ? e.lower_gap() : e.upper_gap()) == 0)
      throw inconclusive_error("range enclosure: bounds are exact but the stopping rule still rejects them", e.lo,
                               e.hi);
    if (e.subdivisions >= limits.max_subdivisions)
      throw inconclusive_error("range enclosure: subdivision budget exhausted", e.lo, e.hi);

    auto it = std::find_if(leaves.begin(), leaves.end(), [&](const detail::EnclosureLeaf& l) {
      return lower ? l.min_coeff == e.lo : l.max_coeff == e.hi;
    });
    if (it->depth >= limits.max_depth)
      throw inconclusive_error("range enclosure: depth limit " + std::to_string(limits.max_depth) + " reached", e.lo,
                               e.hi);

    detail::EnclosureLeaf parent = std::move(*it);
    leaves.erase(it);
    const Rational mid = (parent.a + parent.b) / 2;
    auto [lc, rc] = de_casteljau_split(std::move(parent.coeffs));
    see(mid, rc.front());
    detail::EnclosureLeaf left{parent.a, mid, parent.depth + 1, std::move(lc), {}, {}};
    detail::EnclosureLeaf right{mid, parent.b, parent.depth + 1, std::move(rc), {}, {}};
    left.update_bounds();
    right.update_bounds();
    leaves.push_back(std::move(left));
    leaves.push_back(std::move(right));
    ++e.subdivisions;
    refresh();
  }
  return e;
}

/// Refines until both ends of the enclosure are within `max_width` of the
/// true extremes, i.e. lower_gap() <= max_width and upper_gap() <= max_width.
inline RangeEnclosure1D range_enclosure_1d(const UPoly& p, const Rational& max_width, RefineLimits limits = {}) {
  if (max_width <= 0) throw domain_error("range_enclosure_1d: max_width must be positive");
  return range_enclosure_1d(
      p, [&](const RangeEnclosure1D& e) { return e.lower_gap() <= max_width && e.upper_gap() <= max_width; },
      RefineEnd::Both, limits);
}

/// Lower bound on min p over [0,1], refined until it is positive and at
/// least half the smallest value seen, or until a point with p <= 0 shows up.
/// Returns the enclosure; callers inspect min_value to detect refutation.
inline RangeEnclosure1D positive_lower_bound_1d(const UPoly& p, RefineLimits limits = {}) {
  return range_enclosure_1d(
      p,
      [](const RangeEnclosure1D& e) { return e.min_value <= 0 || (e.lo > 0 && 2 * e.lo >= e.min_value); },
      RefineEnd::Lower, limits);
}

struct UnivariateCertificate {
  Degree q = 0;       ///< degree from the Powers-Reznick bound
  Degree q_star = 0;  ///< 2q, the degree of the returned form
  Rational lambda_lower;
  Rational max_abs_e;
  BernsteinForm1D form;  ///< plain, every coefficient > 0
};

/// Strictly positive plain Bernstein representation of p on [0,1] at degree
/// 2q, q = powers_reznick_degree(deg p, max|e_j|, certified lower bound).
inline UnivariateCertificate certify_positive_1d(const UPoly& p, RefineLimits limits = {}) {
  for (const Rational x : {Rational(0), Rational(1)}) {
    const Rational v = p(x);
    if (v <= 0) throw not_positive_error("p(" + to_string(x) + ") = " + to_string(v) + " <= 0", {x}, v);
  }
  RangeEnclosure1D enc;
  try {
    enc = positive_lower_bound_1d(p, limits);
  } catch (const inconclusive_error& err) {
    throw inconclusive_error(std::string("certify_positive_1d: ") + err.what(), err.lo(), err.hi());
  }
  if (enc.min_value <= 0)
    throw not_positive_error("p(" + to_string(enc.min_at) + ") = " + to_string(enc.min_value) + " <= 0",
                             {enc.min_at}, enc.min_value);

  UnivariateCertificate cert;
  cert.lambda_lower = enc.lo;
  cert.max_abs_e = max_abs(goursat_coefficients(p));
  cert.q = powers_reznick_degree(p.degree(), cert.max_abs_e, cert.lambda_lower);
  cert.q_star = 2 * cert.q;
  cert.form = to_bernstein_plain(p, cert.q_star);
  for (Degree i = 0; i <= cert.q_star; ++i)
    if (cert.form.coeffs[i] <= 0)
      throw inconclusive_error("certify_positive_1d: coefficient " + std::to_string(i) + " at degree " +
                               std::to_string(cert.q_star) + " is not positive");
  return cert;
}

}  // namespace bernpos
