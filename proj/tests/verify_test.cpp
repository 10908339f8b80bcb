#include <gtest/gtest.h>

#include "test_support.hpp"

namespace bernpos {
namespace {

using testing::bpoly;
using testing::R;

PositivityCertificate outer_product_of_one() {
  PositivityCertificate c;
  c.q1 = c.q2 = 2;
  c.C = Matrix<Rational>(3, 3);
  const long w[3] = {1, 2, 1};
  for (Degree i = 0; i < 3; ++i)
    for (Degree j = 0; j < 3; ++j) c.C(i, j) = w[i] * w[j];
  return c;
}

TEST(Verify, AcceptsTheOuterProductForOne) {
  const auto r = verify(BPoly::constant(1), outer_product_of_one());
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.reason(), "");
}

TEST(Verify, TamperedCornerReportsBothFailures) {
  auto c = outer_product_of_one();
  c.C(0, 0) = 0;
  const auto r = verify(BPoly::constant(1), c);
  EXPECT_FALSE(r.valid);
  ASSERT_TRUE(r.nonpositive);
  EXPECT_EQ(r.nonpositive->i, 0u);
  EXPECT_EQ(r.nonpositive->j, 0u);
  EXPECT_EQ(r.nonpositive->value, 0);
  ASSERT_TRUE(r.mismatch);
  // Zeroing C_00 removes (1-x1)^2 (1-x2)^2, whose constant term is 1.
  EXPECT_EQ(r.mismatch->i, 0u);
  EXPECT_EQ(r.mismatch->j, 0u);
  EXPECT_EQ(r.mismatch->expected, 1);
  EXPECT_EQ(r.mismatch->actual, 0);
  EXPECT_NE(r.reason().find("expansion mismatch"), std::string::npos);
  EXPECT_NE(r.reason().find("nonpositive entry C[0][0]"), std::string::npos);
}

TEST(Verify, MismatchNamesTheFirstDifferingMonomial) {
  // Adding t to C_{k,l} adds t x1^k (1-x1)^(q1-k) x2^l (1-x2)^(q2-l); its lowest
  // monomial is x1^k x2^l with coefficient t.
  const BPoly p = bpoly("1 1;1 0");
  const auto cert = certify_raise(p);
  for (Degree k : {0u, 1u, 2u})
    for (Degree l : {0u, 2u}) {
      auto c = cert;
      c.C(k, l) += R("1/3");
      const auto r = verify(p, c);
      ASSERT_FALSE(r.valid);
      EXPECT_FALSE(r.nonpositive);
      ASSERT_TRUE(r.mismatch);
      EXPECT_EQ(r.mismatch->i, k);
      EXPECT_EQ(r.mismatch->j, l);
      EXPECT_EQ(r.mismatch->actual - r.mismatch->expected, R("1/3"));
      EXPECT_EQ(r.mismatch->expected, p.coeff(k, l));
      EXPECT_EQ(r.mismatch->actual, expand(c.form()).coeff(k, l));
    }
}

TEST(Verify, MatchesFullExpansionOnRandomSmallCertificates) {
  testing::Gen gen(53);
  for (int t = 0; t < 60; ++t) {
    PositivityCertificate c;
    c.q1 = gen.degree(0, 4);
    c.q2 = gen.degree(0, 4);
    c.C = Matrix<Rational>(c.q1 + 1, c.q2 + 1);
    for (auto& v : c.C.values()) v = gen.rational(3, 4);
    const BPoly expanded = expand(c.form());
    const BPoly p = t % 3 == 0 ? expanded : expanded + BPoly::monomial(gen.degree(0, 4), gen.degree(0, 4), 1);
    const auto r = verify(p, c);
    bool all_positive = true;
    for (const auto& v : c.C.values()) all_positive = all_positive && v > 0;
    EXPECT_EQ(r.valid, all_positive && expanded == p);
    EXPECT_EQ(r.nonpositive.has_value(), !all_positive);
    EXPECT_EQ(r.mismatch.has_value(), expanded != p);
    if (r.mismatch) {
      EXPECT_EQ(r.mismatch->expected, p.coeff(r.mismatch->i, r.mismatch->j));
      EXPECT_EQ(r.mismatch->actual, expanded.coeff(r.mismatch->i, r.mismatch->j));
      // Every monomial before the reported one in (i, j) order agrees.
      for (Degree i = 0; i <= r.mismatch->i; ++i)
        for (Degree j = 0; j <= std::max(expanded.degree2(), p.degree2()); ++j) {
          if (i == r.mismatch->i && j >= r.mismatch->j) break;
          EXPECT_EQ(expanded.coeff(i, j), p.coeff(i, j));
        }
    }
  }
}

TEST(Verify, DegreeBelowPolynomialIsAMismatch) {
  auto c = outer_product_of_one();
  const auto r = verify(BPoly::monomial(3, 0, 1), c);
  EXPECT_FALSE(r.valid);
  ASSERT_TRUE(r.mismatch);
}

TEST(Verify, MalformedShape) {
  auto c = outer_product_of_one();
  c.q2 = 3;
  const auto r = verify(BPoly::constant(1), c);
  EXPECT_FALSE(r.valid);
  EXPECT_TRUE(r.malformed);
}

TEST(Verify, CrossMethodOnCorpus) {
  for (const auto& s : testing::bivariate_corpus()) {
    const BPoly p = bpoly(s);
    const auto nested = certify_nested(p);
    const auto raised = certify_raise(p);
    EXPECT_TRUE(verify(p, nested).valid) << s;
    EXPECT_TRUE(verify(p, raised).valid) << s;
    EXPECT_EQ(expand(raised.form()), p) << s;
  }
}

TEST(Expand, NormalizedAndPlainAgree) {
  testing::Gen gen(59);
  for (int t = 0; t < 20; ++t) {
    BernsteinForm2D b{gen.degree(0, 5), gen.degree(0, 5), {}, Convention::Normalized};
    b.coeffs = Matrix<Rational>(b.q1 + 1, b.q2 + 1);
    for (auto& v : b.coeffs.values()) v = gen.rational();
    const BPoly direct = expand(b);
    EXPECT_EQ(expand(b.to(Convention::Plain)), direct);
    // Against the term-by-term product of basis polynomials.
    BPoly sum;
    for (Degree k = 0; k <= b.q1; ++k)
      for (Degree l = 0; l <= b.q2; ++l)
        sum = sum + b.coeffs(k, l) * Rational(binomial(b.q1, long(k)) * binomial(b.q2, long(l))) *
                        testing::plain_basis(b.q1, k, b.q2, l);
    EXPECT_EQ(sum, direct);
  }
}

}  // namespace
}  // namespace bernpos
