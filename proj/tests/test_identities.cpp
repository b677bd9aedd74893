#include <gtest/gtest.h>

#include "spinnet/identities.hpp"

using namespace spinnet;

namespace {

Spin S(int twice) { return Spin::from_twice(twice); }

}  // namespace

TEST(Orthogonality, AllZero) {
  const auto r = orthogonality_check(S(0), S(0), S(0), S(0), S(0), S(0));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lhs, SqrtRational(Rational(1)));
  EXPECT_EQ(r.rhs, SqrtRational(Rational(1)));
  EXPECT_EQ(r.form, "orthogonality");
}

TEST(Orthogonality, Diagonal) {
  const auto r = orthogonality_check(S(2), S(2), S(2), S(2), S(2), S(2));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.rhs, SqrtRational(Rational(1, 3)));
  EXPECT_EQ(r.terms, 3u);
}

TEST(Orthogonality, OffDiagonal) {
  const auto r = orthogonality_check(S(2), S(2), S(2), S(2), S(0), S(2));
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.lhs.is_zero());
  EXPECT_TRUE(r.rhs.is_zero());
}

TEST(BE, AllZero) {
  const auto r = be_check(BEInstance::uniform(S(0)));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lhs, SqrtRational(Rational(1)));
  EXPECT_EQ(r.form, "be-weighted");
}

TEST(BE, AllOnesWeighted) {
  const auto r = be_check(BEInstance::uniform(S(2)));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.rhs, SqrtRational(Rational(1, 36)));
}

TEST(BE, AllOnesLiteralFormDiffers) {
  const auto r = be_check(BEInstance::uniform(S(2)), BEForm::Unweighted);
  EXPECT_FALSE(r.equal);
  EXPECT_EQ(r.lhs, SqrtRational(Rational(1, 27)));
  EXPECT_EQ(r.rhs, SqrtRational(Rational(1, 36)));
  EXPECT_EQ(r.form, "be-literal");
  ASSERT_TRUE(r.diff.difference.has_value());
  EXPECT_EQ(*r.diff.difference, SqrtRational(Rational(1, 108)));
}

TEST(BE, MixedInstance) {
  const auto inst = BEInstance::from_twice({1, 2, 1, 2, 1, 2, 1, 1, 2});
  ASSERT_TRUE(inst.valid());
  EXPECT_TRUE(be_check(inst).equal);
}

TEST(BE, InvalidInstanceThrows) {
  auto inst = BEInstance::uniform(S(2));
  inst.p = S(6);  // (b c p) = (1 1 3)
  EXPECT_FALSE(inst.valid());
  EXPECT_THROW(be_check(inst), InvalidInstance);
  EXPECT_THROW(pachner_23_check(inst), InvalidInstance);
}

TEST(BE, SummationRange) {
  const auto xs = BEInstance::uniform(S(2)).summation_range();
  ASSERT_EQ(xs.size(), 3u);
  EXPECT_EQ(xs.front(), S(0));
  EXPECT_EQ(xs.back(), S(4));
}

TEST(Pachner23, Examples) {
  EXPECT_TRUE(pachner_23_check(BEInstance::uniform(S(0))).equal);
  const auto r = pachner_23_check(BEInstance::uniform(S(2)));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.form, "pachner-2-3");
}

TEST(Pachner14, Examples) {
  EXPECT_TRUE(pachner_14_check(BEInstance::uniform(S(0)), S(0)).equal);
  const auto diag = pachner_14_check(BEInstance::uniform(S(2)), S(2));
  EXPECT_TRUE(diag.equal);
  EXPECT_FALSE(diag.rhs.is_zero());
  const auto off = pachner_14_check(BEInstance::uniform(S(2)), S(0));
  EXPECT_TRUE(off.equal);
  EXPECT_TRUE(off.lhs.is_zero());
  EXPECT_TRUE(off.rhs.is_zero());
}

TEST(CheckResult, DiffDescription) {
  const auto r = make_check_result(SqrtRational(Rational(1), Rational(2)),
                                   SqrtRational(Rational(1), Rational(3)), "test", 1);
  EXPECT_FALSE(r.equal);
  EXPECT_FALSE(r.diff.difference.has_value());
  EXPECT_FALSE(r.diff.description.empty());
}
