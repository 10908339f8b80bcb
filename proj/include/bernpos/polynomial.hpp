#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "bernpos/matrix.hpp"
#include "bernpos/rational.hpp"

namespace bernpos {

/// Dense univariate polynomial, coeffs[i] multiplies x^i. Trailing zeros are
/// trimmed; the zero polynomial is stored as [0] with degree 0.
class UPoly {
 public:
  UPoly() : coeffs_{Rational(0)} {}
  UPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UPoly monomial(Degree k, const Rational& c = 1) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UPoly(std::move(v));
  }

  Degree degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^i; zero past the degree.
  Rational coeff(Degree i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational operator()(const Rational& x) const {
    Rational acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (Degree i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(out));
  }
  friend UPoly operator-(const UPoly& a) { return Rational(-1) * a; }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const Rational& s, const UPoly& a) {
    std::vector<Rational> out(a.coeffs_);
    for (auto& c : out) c *= s;
    return UPoly(std::move(out));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (Degree i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (Degree j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(out));
  }

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim() {
    if (coeffs_.empty()) coeffs_.emplace_back(0);
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Rational ueval(const UPoly& p, const Rational& x) { return p(x); }

/// Dense bivariate polynomial, entry (i, j) multiplies x1^i x2^j. Trailing
/// all-zero rows and columns are trimmed, so degree1()/degree2() are the
/// true partial degrees; the zero polynomial is the 1x1 matrix [0].
class BPoly {
 public:
  BPoly() : coeffs_(1, 1) {}
  explicit BPoly(Matrix<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  BPoly(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::size_t cols = 0;
    for (const auto& r : rows) cols = std::max(cols, r.size());
    coeffs_ = Matrix<Rational>(rows.size(), cols);
    std::size_t i = 0;
    for (const auto& r : rows) {
      std::size_t j = 0;
      for (const auto& v : r) coeffs_(i, j++) = v;
      ++i;
    }
    trim();
  }

  static BPoly constant(const Rational& c) { return BPoly({{c}}); }
  static BPoly monomial(Degree i, Degree j, const Rational& c = 1) {
    Matrix<Rational> m(i + 1, j + 1);
    m(i, j) = c;
    return BPoly(std::move(m));
  }
  /// p(x1) viewed as a bivariate polynomial constant in x2.
  static BPoly from_x1(const UPoly& p) {
    Matrix<Rational> m(p.degree() + 1, 1);
    for (Degree i = 0; i <= p.degree(); ++i) m(i, 0) = p.coeff(i);
    return BPoly(std::move(m));
  }

  Degree degree1() const noexcept { return coeffs_.rows() - 1; }
  Degree degree2() const noexcept { return coeffs_.cols() - 1; }
  const Matrix<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_constant() const noexcept { return coeffs_.rows() == 1 && coeffs_.cols() == 1; }

  Rational coeff(Degree i, Degree j) const {
    return i < coeffs_.rows() && j < coeffs_.cols() ? coeffs_(i, j) : Rational(0);
  }

  Rational operator()(const Rational& x1, const Rational& x2) const {
    Rational acc = 0;
    for (Degree i = coeffs_.rows(); i-- > 0;) {
      Rational row = 0;
      for (Degree j = coeffs_.cols(); j-- > 0;) row = row * x2 + coeffs_(i, j);
      acc = acc * x1 + row;
    }
    return acc;
  }

  /// a_i(x2) = sum_j a_{i,j} x2^j for i = 0..degree1().
  std::vector<UPoly> coefficient_rows() const {
    std::vector<UPoly> out;
    out.reserve(coeffs_.rows());
    for (Degree i = 0; i < coeffs_.rows(); ++i) {
      auto r = coeffs_.row(i);
      out.emplace_back(std::vector<Rational>(r.begin(), r.end()));
    }
    return out;
  }

  /// Columns as polynomials in x1: sum_i a_{i,j} x1^i for j = 0..degree2().
  std::vector<UPoly> coefficient_cols() const {
    std::vector<UPoly> out;
    out.reserve(coeffs_.cols());
    for (Degree j = 0; j < coeffs_.cols(); ++j) {
      std::vector<Rational> c(coeffs_.rows());
      for (Degree i = 0; i < coeffs_.rows(); ++i) c[i] = coeffs_(i, j);
      out.emplace_back(std::move(c));
    }
    return out;
  }

  friend BPoly operator+(const BPoly& a, const BPoly& b) {
    Matrix<Rational> m(std::max(a.coeffs_.rows(), b.coeffs_.rows()),
                       std::max(a.coeffs_.cols(), b.coeffs_.cols()));
    for (Degree i = 0; i < m.rows(); ++i)
      for (Degree j = 0; j < m.cols(); ++j) m(i, j) = a.coeff(i, j) + b.coeff(i, j);
    return BPoly(std::move(m));
  }
  friend BPoly operator*(const Rational& s, const BPoly& a) {
    Matrix<Rational> m = a.coeffs_;
    for (auto& v : m.values()) v *= s;
    return BPoly(std::move(m));
  }
  friend BPoly operator-(const BPoly& a) { return Rational(-1) * a; }
  friend BPoly operator-(const BPoly& a, const BPoly& b) { return a + (-b); }
  friend BPoly operator*(const BPoly& a, const BPoly& b) {
    Matrix<Rational> m(a.coeffs_.rows() + b.coeffs_.rows() - 1, a.coeffs_.cols() + b.coeffs_.cols() - 1);
    for (Degree i = 0; i < a.coeffs_.rows(); ++i)
      for (Degree j = 0; j < a.coeffs_.cols(); ++j) {
        const Rational& x = a.coeffs_(i, j);
        if (x == 0) continue;
        for (Degree k = 0; k < b.coeffs_.rows(); ++k)
          for (Degree l = 0; l < b.coeffs_.cols(); ++l) m(i + k, j + l) += x * b.coeffs_(k, l);
      }
    return BPoly(std::move(m));
  }

  friend bool operator==(const BPoly&, const BPoly&) = default;

 private:
  void trim() {
    std::size_t rows = coeffs_.rows();
    std::size_t cols = coeffs_.cols();
    if (rows == 0 || cols == 0) {
      coeffs_ = Matrix<Rational>(1, 1);
      return;
    }
    auto row_zero = [&](std::size_t i) {
      for (std::size_t j = 0; j < cols; ++j)
        if (coeffs_(i, j) != 0) return false;
      return true;
    };
    auto col_zero = [&](std::size_t j) {
      for (std::size_t i = 0; i < rows; ++i)
        if (coeffs_(i, j) != 0) return false;
      return true;
    };
    while (rows > 1 && row_zero(rows - 1)) --rows;
    while (cols > 1 && col_zero(cols - 1)) --cols;
    if (rows == coeffs_.rows() && cols == coeffs_.cols()) return;
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = coeffs_(i, j);
    coeffs_ = std::move(m);
  }

  Matrix<Rational> coeffs_;
};

inline Rational beval(const BPoly& p, const Rational& x1, const Rational& x2) { return p(x1, x2); }

inline std::vector<UPoly> fix_coefficient_rows(const BPoly& p) { return p.coefficient_rows(); }
inline std::vector<UPoly> fix_coefficient_cols(const BPoly& p) { return p.coefficient_cols(); }

}  // namespace bernpos
