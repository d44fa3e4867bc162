#include "polylog/catalog.hpp"
#include "polylog/formal_sum.hpp"

#include <gtest/gtest.h>

using namespace polylog;

namespace {

RatFunc V(const char* n) { return RatFunc::variable(n); }

}  // namespace

TEST(FormalSum, AddCancelsAndScales) {
  RatFunc x = V("x"), y = V("y");
  FormalSum s;
  s.add(1, x);
  s.add(-1, x);
  EXPECT_TRUE(s.empty());

  FormalSum t = FormalSum::single(x) + FormalSum::single(y);
  FormalSum u = t.scale(2);
  EXPECT_EQ(u.size(), 2u);
  EXPECT_EQ(u.coefficient_of(x), 2);
  EXPECT_EQ(u.coefficient_of(y), 2);
  EXPECT_TRUE((u - t - t).empty());
}

TEST(FormalSum, EquivalentArgumentsMerge) {
  RatFunc x = V("x");
  FormalSum s;
  s.add(1, (x * x - 1) / (x + 1));
  s.add(2, x - 1);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.coefficient_of(x - 1), 3);
}

TEST(FormalSum, MergeInversions) {
  RatFunc x = V("x");
  FormalSum s = FormalSum::single(x) + FormalSum::single(x.inv());
  EXPECT_EQ(count_distinct_up_to_inversion(s), 1u);
  // m = 3: [1/x] ~ +[x]; m = 2: [1/x] ~ -[x]
  EXPECT_EQ(merge_inversions(s, 3).coefficient_of(x), 2);
  EXPECT_TRUE(merge_inversions(s, 2).empty());
}

TEST(FormalSum, MapArguments) {
  VarId t1 = var("t1"), t2 = var("t2"), t3 = var("t3");
  Automorphism cyc({t1, t2, t3}, {V("t2"), V("t3"), V("t1")});
  FormalSum m = map_arguments(FormalSum::single(V("t1")), cyc);
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(m.coefficient_of(V("t2")), 1);
}

TEST(Group, Closure) {
  VarId x = var("x");
  Automorphism inv({x}, {V("x").inv()}), oneminus({x}, {1 - V("x")});
  EXPECT_EQ(group_closure({Automorphism::identity({x})}).size(), 1u);
  // anharmonic group
  auto g = group_closure({inv, oneminus});
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(orbit(V("x"), g, false).size(), 6u);
  EXPECT_EQ(orbit(V("x"), g, true).size(), 3u);
  EXPECT_EQ(orbit(RatFunc(1), g, false).size(), 1u);
  EXPECT_THROW(group_closure({inv, oneminus}, 4), ClosureTooLarge);
}

TEST(Group, ComposeOrder) {
  VarId x = var("x");
  Automorphism s({x}, {V("x") + 1}), t({x}, {V("x") * 2});
  // (s o t)(x) = s(t(x)) = s(2x) = 2(x+1)
  Automorphism st = compose(s, t);
  EXPECT_TRUE(equivalent(st.apply(V("x")), 2 * V("x") + 2));
}

TEST(Group, OrdersFromCatalog) {
  EXPECT_EQ(group_G().size(), 192u);
  EXPECT_EQ(group_Gprime().size(), 96u);
}

TEST(Specialize, FiveTermAtRationalPoint) {
  FormalSum s = five_term_sum(V("x"), V("y"));
  auto sp = specialize(s, {{var("x"), Rational(1, 2)}, {var("y"), Rational(1, 3)}});
  EXPECT_FALSE(sp.degenerate);
  EXPECT_EQ(sp.sum.size(), 5u);
  // xy = 1/6, x = 1/2, y = 1/3, (x - xy)/(x - 1) = -2/3, (y - xy)/(y - 1) = -1/4
  for (Rational q : {Rational(1, 6), Rational(1, 2), Rational(1, 3), Rational(-2, 3), Rational(-1, 4)})
    EXPECT_NE(sp.sum.coefficient_of(q), 0) << q;
}

TEST(Specialize, Degenerate) {
  RatFunc x = V("x");
  auto sp = specialize(FormalSum::single(1 / (1 - x)), {{var("x"), 1}}, true);
  EXPECT_FALSE(sp.degenerate);
  ASSERT_EQ(sp.dropped.size(), 1u);
  EXPECT_EQ(sp.dropped[0].reason, "pole");
  EXPECT_TRUE(sp.sum.empty());
  EXPECT_TRUE(specialize(FormalSum::single(1 / (1 - x)), {{var("x"), 1}}, false).degenerate);
  EXPECT_EQ(specialize(FormalSum::single(x), {{var("x"), 0}}, true).dropped.at(0).reason, "zero");
}

TEST(Specialize, F17AtTZero) {
  FormalSum s = f17_sum(V("a"), V("b"), V("c"), V("t"));
  EXPECT_EQ(s.size(), 17u);
  auto sp = specialize(s, {{var("a"), 2}, {var("b"), 3}, {var("c"), 5}, {var("t"), 0}}, true);
  EXPECT_FALSE(sp.degenerate);
  EXPECT_FALSE(sp.dropped.empty());
  std::size_t kept = 0;
  for (auto& t : sp.sum.terms()) kept += t.arg.is_constant() ? 1 : 0;
  EXPECT_LT(sp.dropped.size(), 17u);
  EXPECT_EQ(kept, sp.sum.size());
}

TEST(FormalSum, CountsOnCatalog) {
  EXPECT_EQ(count_nonconstant(five_term().sum), 5u);
  EXPECT_EQ(count_distinct_up_to_inversion(goncharov22().sum), 22u);
  EXPECT_EQ(count_nonconstant(f17().sum), 17u);
  EXPECT_EQ(count_nonconstant(relation34().sum), 34u);
  EXPECT_EQ(count_distinct_up_to_inversion(FormalSum::single(V("x")) + FormalSum::single(V("x").inv())), 1u);
}

TEST(FormalSum, JsonRoundTrip) {
  FormalSum s = goncharov22().sum;
  FormalSum back = formal_sum_from_json(to_json(s));
  EXPECT_TRUE((s - back).empty());
  EXPECT_EQ(to_json(s), to_json(back));
}
