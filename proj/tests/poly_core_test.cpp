#include <gtest/gtest.h>

#include "test_support.hpp"

namespace bernpos {
namespace {

using testing::bpoly;
using testing::R;
using testing::upoly;

TEST(Binom, ValuesAndConventions) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(3, 5), 0);
  EXPECT_EQ(binom(4, 0), 1);
  EXPECT_EQ(binom(4, -1), 0);
  EXPECT_THROW(binom(-1, 0), domain_error);
}

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(R("2/4")), "1/2");
  EXPECT_EQ(R("2/4"), R("1/2"));
  EXPECT_EQ(R("-6/3").get_den(), 1);
  EXPECT_EQ(to_string(R("-6/3")), "-2");
  EXPECT_EQ(ceil(R("7/2")), 4);
  EXPECT_EQ(ceil(R("-7/2")), -3);
  EXPECT_EQ(ceil(R("4")), 4);
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "1.5", "a", "1/2/3", "1/-2", "--1", "+1", "1 /2", "/2", "2/"})
    EXPECT_THROW(parse_rational(bad), parse_error) << bad;
}

TEST(UPoly, Evaluation) {
  EXPECT_EQ(ueval(upoly("1 2"), R("1/2")), 2);
  EXPECT_EQ(ueval(upoly("0 0 1"), R("3/4")), R("9/16"));
  EXPECT_EQ(ueval(UPoly{}, 7), 0);
}

TEST(UPoly, ZeroAndTrim) {
  const UPoly z{Rational(0), Rational(0)};
  EXPECT_EQ(z.degree(), 0U);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z, UPoly{});
  EXPECT_EQ(upoly("1 2 0 0").degree(), 1U);
}

TEST(UPoly, Arithmetic) {
  EXPECT_EQ(upoly("1 1") * upoly("1 -1"), upoly("1 0 -1"));
  EXPECT_EQ(upoly("1 1") + upoly("0 -1"), upoly("1"));
  EXPECT_EQ(R("1/2") * upoly("2 4"), upoly("1 2"));
}

TEST(BPoly, Evaluation) {
  EXPECT_EQ(beval(bpoly("0 0;0 1"), R("1/2"), R("1/2")), R("1/4"));
  EXPECT_EQ(beval(bpoly("1 0 1;0 0 0;1 0 0"), 0, 0), 1);
  // (x1 - x2)^2 + 1/8
  EXPECT_EQ(beval(bpoly("1/8 0 1;0 -2 0;1 0 0"), 1, 0), R("9/8"));
}

TEST(BPoly, TrimsTrailingZeroRowsAndColumns) {
  const BPoly p = bpoly("1 0 0;2 0 0;0 0 0");
  EXPECT_EQ(p.degree1(), 1U);
  EXPECT_EQ(p.degree2(), 0U);
  EXPECT_TRUE(bpoly("0 0;0 0").is_constant());
}

TEST(BPoly, CoefficientRows) {
  const auto rows = fix_coefficient_rows(bpoly("1 0 1;0 0 0;1 0 0"));
  ASSERT_EQ(rows.size(), 3U);
  EXPECT_EQ(rows[0], upoly("1 0 1"));
  EXPECT_TRUE(rows[1].is_zero());
  EXPECT_EQ(rows[2], upoly("1"));

  const auto one = fix_coefficient_rows(BPoly::constant(1));
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0], upoly("1"));

  const auto cols = fix_coefficient_cols(bpoly("1 2;3 4"));
  EXPECT_EQ(cols[1], upoly("2 4"));
}

TEST(BPoly, ProductMatchesSquare) {
  const BPoly d = BPoly::monomial(1, 0) - BPoly::monomial(0, 1);
  EXPECT_EQ(d * d + BPoly::constant(R("1/8")), bpoly("1/8 0 1;0 -2 0;1 0 0"));
}

TEST(Properties, EvaluationIsARingHomomorphism) {
  testing::Gen gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const UPoly p = gen.upoly(6), q = gen.upoly(6);
    const Rational x = gen.rational(9, 7);
    EXPECT_EQ((p + q)(x), p(x) + q(x));
    EXPECT_EQ((p * q)(x), p(x) * q(x));
  }
}

TEST(Properties, RowExtractionCommutesWithEvaluation) {
  testing::Gen gen(8);
  for (int trial = 0; trial < 100; ++trial) {
    const BPoly p = gen.bpoly(4, 4);
    const Rational x1 = gen.rational(), x2 = gen.rational();
    Rational sum = 0;
    const auto rows = p.coefficient_rows();
    for (Degree i = 0; i < rows.size(); ++i) sum += rows[i](x2) * pow(x1, i);
    EXPECT_EQ(sum, beval(p, x1, x2));
  }
}

}  // namespace
}  // namespace bernpos
