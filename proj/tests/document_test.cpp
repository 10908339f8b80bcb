#include <gtest/gtest.h>

#include "test_support.hpp"

namespace bernpos {
namespace {

using testing::bpoly;
using testing::R;

TEST(PolynomialDocument, ParsesBivariate) {
  const auto d = parse_polynomial(
      "# (x1 - x2)^2 + 1/8\n"
      "variables: 2\n"
      "coeffs:\n"
      "  1/8  0 1\n"
      "  0   -2 0\n"
      "  1    0 0\n");
  EXPECT_EQ(d.variables, 2);
  EXPECT_EQ(d.poly.coeff(0, 0), R("1/8"));
  EXPECT_EQ(d.poly.coeff(1, 1), -2);
  EXPECT_EQ(d.poly(1, 0), R("9/8"));
}

TEST(PolynomialDocument, ParsesUnivariateAsX1) {
  const auto d = parse_polynomial("variables: 1\ncoeffs:\n1 -3 3\n");
  EXPECT_EQ(d.variables, 1);
  EXPECT_EQ(d.poly.degree1(), 2u);
  EXPECT_EQ(d.poly.degree2(), 0u);
  EXPECT_EQ(d.univariate(), UPoly({1, -3, 3}));
}

TEST(PolynomialDocument, RoundTripIsIdentity) {
  testing::Gen gen(61);
  for (int t = 0; t < 30; ++t) {
    PolynomialDocument d{2, gen.bpoly(4, 4)};
    const std::string text = to_text(d);
    const auto back = parse_polynomial(text);
    EXPECT_EQ(back.poly, d.poly);
    EXPECT_EQ(to_text(back), text);

    PolynomialDocument u{1, BPoly::from_x1(gen.upoly(6))};
    const auto uback = parse_polynomial(to_text(u));
    EXPECT_EQ(uback.variables, 1);
    EXPECT_EQ(uback.poly, u.poly);
  }
}

TEST(PolynomialDocument, RejectsMalformedInput) {
  for (const char* text : {
           "variables: 2\ncoeffs:\n1 2/0\n",       // zero denominator
           "variables: 2\ncoeffs:\n1 2.5\n",       // non-integer part
           "variables: 2\ncoeffs:\n1 2\n3\n",      // ragged
           "variables: 3\ncoeffs:\n1\n",           // bad arity
           "variables: 2\n",                       // no coefficients
           "coeffs:\n1\n",                         // no arity
           "variables: 1\ncoeffs:\n1 2\n3 4\n",    // univariate with two rows
           "variables: 2\ncoeffs:\n1\nvariables: 2\n",  // duplicate key
           "variables: 2\ncolour: red\ncoeffs:\n1\n",   // unknown key
           "1 2 3\n",                              // matrix row outside a section
           "variables: 2\ncoeffs:\n1 x\n",
       })
    EXPECT_THROW(parse_polynomial(std::string(text)), parse_error) << text;
}

TEST(CertificateDocument, RoundTripsBothMethods) {
  const BPoly p = bpoly("5 -1;1 0");
  for (const auto& cert : {certify_raise(p), certify_nested(p)}) {
    const CertificateDocument d{cert, version};
    const std::string text = to_text(d);
    const auto back = parse_certificate(text);
    EXPECT_EQ(back.tool_version, version);
    EXPECT_EQ(back.cert.q1, cert.q1);
    EXPECT_EQ(back.cert.q2, cert.q2);
    EXPECT_EQ(back.cert.C, cert.C);
    EXPECT_EQ(back.cert.method, cert.method);
    EXPECT_EQ(back.cert.report, cert.report);
    EXPECT_EQ(to_text(back), text);
    EXPECT_TRUE(verify(p, back.cert).valid);
  }
}

TEST(CertificateDocument, RejectsMalformedInput) {
  const std::string good = to_text(CertificateDocument{certify_raise(BPoly::constant(1)), version});
  EXPECT_NO_THROW(parse_certificate(good));
  auto replace = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  EXPECT_THROW(parse_certificate(replace("format: bernpos-certificate", "format: other")), parse_error);
  EXPECT_THROW(parse_certificate(replace("method: raise", "method: guess")), parse_error);
  EXPECT_THROW(parse_certificate(replace("convention: plain", "convention: normalized")), parse_error);
  EXPECT_THROW(parse_certificate(replace("q1: 2", "q1: 3")), parse_error);
  EXPECT_THROW(parse_certificate(replace("q2: 2", "q2: -2")), parse_error);
  EXPECT_THROW(parse_certificate(replace("report.c_min: 1", "report.c_min: 1/0")), parse_error);
  EXPECT_THROW(parse_certificate(replace("report.bound: 0", "report.lambda_lower: 0")), parse_error);
}

}  // namespace
}  // namespace bernpos
