#include "polylog/exact.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace polylog;

namespace {

// naive trial division, independent of factor_integer
std::map<Integer, long> trial_factor(Integer n) {
  std::map<Integer, long> f;
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

}  // namespace

TEST(Rational, MakeRationalCanonicalizes) {
  Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-10/4"), Rational(-5, 2));
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Factor, Examples) {
  auto a = factor_rational(Rational(-8, 9));
  EXPECT_EQ(a.sign, -1);
  EXPECT_EQ(a.factors, (std::map<Integer, long>{{2, 3}, {3, -2}}));

  auto b = factor_rational(1);
  EXPECT_EQ(b.sign, 1);
  EXPECT_TRUE(b.factors.empty());

  auto c = factor_rational(Rational(84, 5));
  EXPECT_EQ(c.sign, 1);
  EXPECT_EQ(c.factors, (std::map<Integer, long>{{2, 2}, {3, 1}, {5, -1}, {7, 1}}));

  EXPECT_THROW(factor_rational(0), DomainError);
}

TEST(Factor, AgreesWithTrialDivision) {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    Integer n = static_cast<long>(rng.range(2, 2000000));
    EXPECT_EQ(factor_integer(n), trial_factor(n)) << n;
  }
}

TEST(Factor, ReconstructRoundTrip) {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    Rational q = make_rational(rng.range(-100000, 100000) | 1, rng.range(1, 100000));
    EXPECT_EQ(factor_rational(q).reconstruct(), q);
  }
}

TEST(Factor, LargeSemiprime) {
  Integer p("1000000007"), q("998244353");
  auto f = factor_integer(p * q);
  EXPECT_EQ(f, (std::map<Integer, long>{{q, 1}, {p, 1}}));
}

TEST(Rng, Deterministic) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c(42);
  EXPECT_NE(c.split(0).next(), c.split(1).next());
  EXPECT_EQ(Rng(5).split(3).next(), Rng(5).split(3).next());
}

TEST(Rng, BelowAndRange) {
  Rng r(9);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(r.below(7), 7u);
    auto v = r.range(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
  }
  EXPECT_THROW(r.below(0), std::invalid_argument);
}

TEST(Sampler, HeightContract) {
  RationalSampler s(10, 1);
  for (int i = 0; i < 200; ++i) {
    Rational q = s.next();
    EXPECT_LE(abs(q.get_num()), 10);
    EXPECT_LE(q.get_den(), 10);
    EXPECT_NE(q, 0);
    EXPECT_NE(q, 1);
  }
}

TEST(Sampler, RepeatableSequence) {
  RationalSampler a(25, 77), b(25, 77);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(a.next(), b.next());
  EXPECT_EQ(random_rational(25, 77, {}, 3), random_rational(25, 77, {}, 3));
}

TEST(Sampler, RespectsExclusionsAndExhausts) {
  std::set<Rational> all;
  for (long d = 1; d <= 2; ++d)
    for (long n = -2; n <= 2; ++n)
      if (n != 0) all.insert(make_rational(n, d));
  std::set<Rational> most = all;
  most.erase(Rational(-1, 2));
  RationalSampler s(2, 5, most);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(s.next(), Rational(-1, 2));
  for (std::uint64_t k = 0; k < 4; ++k) EXPECT_THROW(random_rational(2, k, all), DomainError);
}

TEST(LogEncoder, FaithfulOnBatch) {
  // exponent vectors over the coprime base reproduce each value up to sign
  std::vector<Rational> qs = {Rational(12), Rational(-3, 2), Rational(49, 10), make_rational(Integer("1000000007") * 6, 35)};
  LogEncoder enc(100);
  for (auto& q : qs) enc.add(q);
  enc.finalize();
  for (auto& q : qs) {
    Rational back = 1;
    for (auto [i, e] : enc.encode(q)) {
      Rational b = Rational(enc.base()[i]);
      for (long k = 0; k < std::abs(e); ++k) back = e > 0 ? Rational(back * b) : Rational(back / b);
    }
    EXPECT_EQ(back, abs(q));
  }
  for (std::size_t i = 0; i < enc.base().size(); ++i)
    for (std::size_t j = i + 1; j < enc.base().size(); ++j) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), enc.base()[i].get_mpz_t(), enc.base()[j].get_mpz_t());
      EXPECT_EQ(g, 1);
    }
  EXPECT_THROW(enc.encode(0), DomainError);
}

TEST(LogEncoder, CoprimeRefinementOfComposites) {
  // with a trial bound below 101 and 103, cofactors 101*103 and 101 split into {101, 103}
  LogEncoder enc(50);
  enc.add(Rational(101 * 103));
  enc.add(Rational(101));
  enc.finalize();
  std::set<Integer> base(enc.base().begin(), enc.base().end());
  EXPECT_TRUE(base.count(101));
  EXPECT_TRUE(base.count(103));
  EXPECT_EQ(enc.encode(Rational(101 * 103)).size(), 2u);
}

TEST(Primes, Small) {
  EXPECT_EQ(small_primes(20), (std::vector<unsigned long>{2, 3, 5, 7, 11, 13, 17, 19}));
}
