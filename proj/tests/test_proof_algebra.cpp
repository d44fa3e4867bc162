#include "polylog/numeric.hpp"
#include "polylog/proof_algebra.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>

using namespace polylog;

namespace {

using cd = std::complex<double>;

// rank over Q by plain elimination
int rank_of(std::vector<std::vector<Rational>> m) {
  int r = 0, cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int p = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i)
      if (m[i][c] != 0) p = i;
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    for (int i = 0; i < static_cast<int>(m.size()); ++i)
      if (i != r && m[i][c] != 0) {
        Rational f = m[i][c] / m[r][c];
        for (int k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
      }
    ++r;
  }
  return r;
}

// roots of x^(n-1)(x-1) = v
std::vector<cd> roots_of(int n, cd v) {
  PrecisionPolicy pol(30);
  mpfr_prec_t w = pol.bits();
  std::vector<BigComplex> c(n + 1, BigComplex(w));
  c[0] = BigComplex::from_double(-v.real(), -v.imag(), w);
  c[n - 1] = BigComplex(Rational(-1), 0, w);
  c[n] = BigComplex(Rational(1), 0, w);
  std::vector<cd> out;
  for (auto& z : poly_roots(c, pol)) out.emplace_back(z.re.to_double(), z.im.to_double());
  return out;
}

struct Numeric {
  int n;
  std::vector<cd> x, y;
  cd base(int raw) const {
    if (raw < n) return x[raw];
    if (raw < 2 * n) return y[raw - n];
    int k = raw - 2 * n;
    return x[k / n] - y[k % n];
  }
  // exp(sum c log base) with principal logs; the relations hold up to sign, so the
  // value is defined up to a root of unity of order 2 den
  cd exp_of(const LVec& v, long& den) const {
    cd l = 0;
    for (auto& [raw, c] : v) {
      den = std::lcm(den, c.get_den().get_si());
      l += c.get_d() * std::log(base(raw));
    }
    return std::exp(l);
  }
};

}  // namespace

TEST(LogSpace, DimensionAndRank) {
  for (int n = 2; n <= 4; ++n) {
    LogSpace L(n);
    EXPECT_EQ(L.dim(), 2 * n + n * n);
    // relations: row sums all equal, column sums equal to the first row sum
    std::vector<std::vector<Rational>> rel;
    auto row = [&](int l) {
      std::vector<Rational> v(L.dim());
      for (int j = 1; j <= n; ++j) v[2 * n + (l - 1) * n + j - 1] += 1;
      return v;
    };
    for (int l = 2; l <= n; ++l) {
      auto v = row(l), w = row(1);
      for (int k = 0; k < L.dim(); ++k) v[k] -= w[k];
      rel.push_back(v);
    }
    for (int m = 1; m <= n; ++m) {
      std::vector<Rational> v(L.dim());
      for (int i = 1; i <= n; ++i) v[2 * n + (i - 1) * n + m - 1] += 1;
      auto w = row(1);
      for (int k = 0; k < L.dim(); ++k) v[k] -= w[k];
      rel.push_back(v);
    }
    EXPECT_EQ(L.rank(), rank_of(rel));
    EXPECT_EQ(L.rank(), 2 * n - 2);
  }
}

TEST(LogSpace, Relations) {
  LogSpace L(2);
  EXPECT_EQ(L.S(), L.xi(1) + L.xi(2) - L.eta(1) - L.eta(2));
  for (int n = 2; n <= 4; ++n) {
    LogSpace M(n);
    LVec sum;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) sum = sum + M.s(i, j);
    EXPECT_EQ(M.reduce((Rational(1) / n) * sum), M.S());
    LVec c1, c2;
    for (int i = 1; i <= n; ++i) {
      c1 = c1 + M.zeta(i, 1);
      c2 = c2 + M.zeta(i, 2);
    }
    EXPECT_TRUE(M.reduce(c1 - c2).empty());
  }
}

TEST(Wedge, Basics) {
  LogSpace L(3);
  LVec a = L.xi(1), b = L.eta(2) + L.xi(3);
  EXPECT_TRUE(is_zero(wedge(a, a)));
  EXPECT_EQ(wedge(a, b), Rational(-1) * wedge(b, a));
  EXPECT_EQ(wedge(a + b, b), wedge(a, b));
}

TEST(FormalLogs, XlOverYmExpansion) {
  for (int n = 2; n <= 4; ++n) {
    LogSpace L(n);
    for (int l = 1; l <= n; ++l)
      for (int m = 1; m <= n; ++m) {
        LVec s = L.s(l, m);
        Tensor want;
        want.add(1, s, s, s, L.zeta(l, m));
        want.add(-1, s, s, wedge(L.xi(l), L.eta(m)));
        EXPECT_EQ(beta4_formal(L, ArgKind::XlOverYm, l, m), want);
      }
  }
}

TEST(FormalLogs, OneMinusInvXIsPureXi) {
  int n = 3;
  LogSpace L(n);
  for (int l = 1; l <= n; ++l) {
    LVec a = L.xi_sum() - Rational(n) * L.xi(l);
    Tensor want;
    want.add(1, a, a, a, Rational(-1) * L.xi(l));
    EXPECT_EQ(beta4_formal(L, ArgKind::OneMinusInvX, l, 1), want);
    for (auto& [k, c] : Tensor(want).coords()) {
      int idx[4];
      Tensor::unpack(k, idx);
      for (int i : idx) EXPECT_TRUE(L.is_xi(i));
    }
  }
}

TEST(FormalLogs, NumericallyConsistent) {
  // exp of the two formal logs are a and 1 - a up to roots of unity, at actual roots
  for (int n = 2; n <= 4; ++n) {
    Numeric num{n, roots_of(n, {0.37, -1.21}), roots_of(n, {-2.3, 0.45})};
    LogSpace L(n);
    for (ArgKind k : {ArgKind::XOverY, ArgKind::InvRatio, ArgKind::OneMinusRatio, ArgKind::XlOverYm,
                      ArgKind::OneMinusInvX, ArgKind::OneMinusInvY})
      for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m) {
          auto [u, v] = formal_logs(L, k, l, m);
          long d = 1;
          cd a = num.exp_of(u, d), b = num.exp_of(v, d);
          d *= 2;
          double best = 1e9;
          for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j) {
              cd e1 = std::polar(1.0, 2 * M_PI * i / d), e2 = std::polar(1.0, 2 * M_PI * j / d);
              best = std::min(best, std::abs(e1 * a + e2 * b - 1.0));
            }
          EXPECT_LT(best, 1e-8) << to_string(k) << " n=" << n << " l=" << l << " m=" << m;
        }
  }
}

TEST(ArgKind, NamesRoundTrip) {
  for (ArgKind k : {ArgKind::XOverY, ArgKind::InvRatio, ArgKind::OneMinusRatio, ArgKind::XlOverYm,
                    ArgKind::OneMinusInvX, ArgKind::OneMinusInvY})
    EXPECT_EQ(parse_arg_kind(to_string(k)), k);
}

TEST(Proof, IdentitiesHold) {
  for (int n = 2; n <= 4; ++n) {
    ProofReport r = verify_identities(n);
    EXPECT_TRUE(r.all_pass()) << r.to_json().dump();
    EXPECT_FALSE(r.identities.empty());
  }
}

TEST(Proof, PerturbedIdentityFails) { EXPECT_FALSE(verify_identities(3, true).all_pass()); }

TEST(Proof, ClaimAndTheorem) {
  for (int n : {2, 3, 4}) {
    ProofReport r = verify_claim_and_theorem(n);
    EXPECT_TRUE(r.all_pass()) << r.to_json().dump();
    EXPECT_TRUE(r.theorem_zero);
  }
  EXPECT_FALSE(verify_claim_and_theorem(3, true).all_pass());
}

TEST(Proof, TheoremTensorVanishesOnlyForTheRightCoefficient) {
  for (int n = 2; n <= 4; ++n) {
    LogSpace L(n);
    EXPECT_TRUE(theorem_beta4(L, Rational(n * (n - 2))).is_zero()) << n;
    EXPECT_FALSE(theorem_beta4(L, Rational(n * (n - 2) + 1)).is_zero()) << n;
  }
}

TEST(Proof, Cap) {
  EXPECT_ANY_THROW(verify_identities(1));
  EXPECT_ANY_THROW(verify_identities(kProofCap + 1));
}
