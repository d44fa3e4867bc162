#include "polylog/catalog.hpp"
#include "polylog/numeric.hpp"

#include <gtest/gtest.h>

using namespace polylog;

namespace {

const PrecisionPolicy P50(50);

BigReal R(const char* s) { return BigReal::from_string(s, P50.bits() + 32); }
BigComplex C(const char* re, const char* im) { return {R(re), R(im)}; }
ProjectiveComplex PC(const char* re, const char* im) { return C(re, im); }

// |a - b| < 10^-e
void near(const BigReal& a, const BigReal& b, int e = 40) {
  BigReal d = abs(a - b);
  EXPECT_TRUE(d < ten_pow(-e, a.prec())) << a.str(45) << " vs " << b.str(45);
}

// Bernoulli numbers from sum_{k<=r} C(r+1,k) B_k = 0
std::vector<Rational> bernoulli_table(int n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int r = 1; r <= n; ++r) {
    Rational s = 0;
    Integer c = 1;  // C(r+1, k)
    for (int k = 0; k < r; ++k) {
      s += Rational(c) * b[k];
      c = c * (r + 1 - k) / (k + 1);
    }
    b[r] = make_rational(-s.get_num(), s.get_den() * (r + 1));
  }
  return b;
}

}  // namespace

TEST(Bernoulli, PaperValuesAndRecurrence) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(3), 0);
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  auto t = bernoulli_table(30);
  for (int r = 0; r <= 30; ++r) EXPECT_EQ(bernoulli(r), t[r]) << r;
}

TEST(Zeta, Values) {
  mpfr_prec_t b = P50.bits();
  BigReal p = pi(b);
  near(zeta_int(2, P50), p * p / 6);
  near(zeta_int(3, P50), R("1.2020569031595942853997381615114499907649862923404988817922"));
  near(zeta_int(4, P50), pow(p, 4) / 90);
}

TEST(Li, Values) {
  BigComplex half = C("0.5", "0");
  near(li_m(1, half, P50).re, log(BigReal(2, P50.bits())));
  near(li_m(2, C("1", "0"), P50).re, zeta_int(2, P50));
  near(li_m(2, half, P50).re, R("0.58224052646501250590265632015968010874419847480612642543434"));
  EXPECT_THROW(li_m(2, C("2", "0"), P50), BranchError);
}

TEST(Li, AgreesWithDirectSeries) {
  // |z| = 0.3: 200 terms of sum z^k/k^m are far past 1e-45
  BigComplex z = C("0.1", "-0.28");
  for (int m = 1; m <= 6; ++m) {
    BigComplex s(z.prec()), zk = z;
    for (long k = 1; k <= 200; ++k, zk = zk * z) s += zk / pow(BigReal(k, z.prec()), m);
    BigComplex v = li_m(m, z, P50);
    near(v.re, s.re);
    near(v.im, s.im);
  }
}

TEST(CL, ReferenceValues) {
  // single-valued sums with r < m, computed independently with mpmath
  struct Ref {
    int m;
    const char* v03;  // z = 0.3 + 0.7i
    const char* v21;  // z = 2 + i
  } refs[] = {
      {2, "0.981810571427325481789248274918186440563120910149240384959", "0.511666398553823495967896156015781548100396709732920047140183"},
      {3, "0.28144755367983409965285553835389308327080891056540201454094", "0.860425566298109182532300711381607146751607654650929756022893"},
      {4, "0.94396128014186798240711311637354661247762717741657011901061", "0.44605204946665930017613040709535786921798576860888474934126"},
      {5, "0.365325213460387939474887716940306231146228180747238178499834", "0.81719493640322309434340970768501572087797050808969651332351"},
      {7, "0.383583543970199778748586866002416987729798630537679034234433", "0.80791171138996071466834689339364170295719680626298046845552"},
  };
  for (auto& r : refs) {
    near(cl_m(r.m, PC("0.3", "0.7"), P50), R(r.v03));
    near(cl_m(r.m, PC("2", "1"), P50), R(r.v21));
  }
}

TEST(CL, SpecialPoints) {
  near(cl_m(2, PC("0", "1"), P50), R("0.915965594177219015054603514932384110774149374281672134266498"));
  near(cl_m(3, PC("1", "0"), P50), zeta_int(3, P50));
  for (const char* x : {"-3", "0.25", "7", "-0.5"}) EXPECT_TRUE(cl_m(2, PC(x, "0"), P50).is_zero() ||
                                                               abs(cl_m(2, PC(x, "0"), P50)) < ten_pow(-45, 200));
  EXPECT_TRUE(cl_m(3, ProjectiveComplex::infinity(200), P50).is_zero());
  EXPECT_TRUE(cl_m(4, PC("0", "0"), P50).is_zero());
}

TEST(CL, InversionAndConjugation) {
  Rng rng(21);
  for (int k = 0; k < 10; ++k) {
    BigComplex z = sample_annulus(rng, P50.bits() + 32);
    for (int m = 2; m <= 7; ++m) {
      BigReal a = cl_m(m, z, P50), b = cl_m(m, inv(z), P50), c = cl_m(m, conj(z), P50);
      near(a, m % 2 ? b : -b);
      near(c, m % 2 ? a : -a);
    }
  }
}

TEST(CL, ApplyOnSums) {
  const mpfr_prec_t w = P50.bits() + 32;
  BigReal tol = P50.tolerance();
  // five-term at x = 2+i, y = 1-2i
  EquationSpec ft = five_term();
  std::map<VarId, BigComplex> pt{{var("x"), C("2", "1")}, {var("y"), C("1", "-2")}};
  auto v = cl_eval(2, ft.sum, ComplexEvaluator(pt, w));
  ASSERT_TRUE(v);
  EXPECT_TRUE(abs(*v) < tol);
  // [x] + [1/x] - 2[x] at m = 3
  RatFunc x = RatFunc::variable("x");
  FormalSum s = FormalSum::single(x) + FormalSum::single(x.inv()) - FormalSum::single(x).scale(2);
  auto u = cl_eval(3, s, ComplexEvaluator({{var("x"), C("2", "1")}}, w));
  ASSERT_TRUE(u);
  EXPECT_TRUE(abs(*u) < tol);
  // [conj z] + [z] at m = 2
  BigComplex z = C("2", "1");
  EXPECT_TRUE(abs(cl_m(2, conj(z), P50) + cl_m(2, z, P50)) < tol);
}

TEST(CL, FiveTermRandomPoints) {
  auto v = verify_numeric(five_term(), 25, P50, 4);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.points, 25);
  // the five-term sum with one coefficient changed is not a relation
  EquationSpec bad = five_term();
  bad.sum.add(1, RatFunc::variable("x"));
  EXPECT_FALSE(verify_numeric(bad, 5, P50, 4).pass);
}

TEST(Roots, Examples) {
  mpfr_prec_t w = P50.bits() + 32;
  auto c = [&](long v) { return BigComplex(Rational(v), 0, w); };
  auto r = poly_roots({c(-1), c(0), c(1)}, P50);
  ASSERT_EQ(r.size(), 2u);
  near(r[0].re, BigReal(-1, w));
  near(r[1].re, BigReal(1, w));

  r = poly_roots({BigComplex(Rational(-3, 4), 0, w), c(-1), c(1)}, P50);
  ASSERT_EQ(r.size(), 2u);
  near(r[0].re, R("-0.5"));
  near(r[1].re, R("1.5"));

  r = poly_roots({c(4), c(-4), c(1)}, P50);
  ASSERT_EQ(r.size(), 2u);
  near(r[0].re, BigReal(2, w));
  near(r[1].re, BigReal(2, w));
}

TEST(Roots, ResidualsAndVieta) {
  Rng rng(8);
  mpfr_prec_t w = P50.bits() + 32;
  for (int deg = 3; deg <= 9; ++deg) {
    std::vector<BigComplex> co;
    for (int i = 0; i <= deg; ++i) co.push_back(sample_annulus(rng, w));
    auto roots = poly_roots(co, P50);
    ASSERT_EQ(roots.size(), static_cast<std::size_t>(deg));
    BigComplex sum(w);
    for (auto& z : roots) {
      sum += z;
      BigComplex p(w);
      for (int i = deg; i >= 0; --i) p = p * z + co[i];
      EXPECT_TRUE(abs(p) < ten_pow(-40, w));
    }
    // sum of roots = -c_{d-1}/c_d
    BigComplex s = -(co[deg - 1] / co[deg]);
    EXPECT_TRUE(abs(sum - s) < ten_pow(-40, w));
  }
}

TEST(Precision, Policy) {
  PrecisionPolicy p(60, 10, 20);
  EXPECT_EQ(p.tolerance_exponent(), -40);
  EXPECT_GE(p.bits(), digits_to_bits(70));
  EXPECT_ANY_THROW(PrecisionPolicy(5, 10, 20));
}

TEST(Preimages, PolesAndZeros) {
  PrecisionPolicy pol(40);
  mpfr_prec_t w = pol.bits() + 32;
  RatFunc x = RatFunc::variable("x");
  // a = 2, b = 3, c = 5: phi = (x-2)(x-3)/((x-1/5)(x-30))
  RatFunc phi = (x - 2) * (x - 3) / ((x - Rational(1, 5)) * (x - 30));
  EXPECT_EQ(rational_degree(phi), 2);
  auto poles = preimages(phi, ProjectiveComplex::infinity(w), pol);
  ASSERT_EQ(poles.size(), 2u);
  near(poles[0].value.re, R("0.2"), 30);
  near(poles[1].value.re, BigReal(30, w), 30);
  auto zeros = preimages(phi, BigComplex(w), pol);
  ASSERT_EQ(zeros.size(), 2u);
  near(zeros[0].value.re, BigReal(2, w), 30);
  near(zeros[1].value.re, BigReal(3, w), 30);
  // phi(x) = x^2 has infinity as a double preimage of infinity
  auto inf = preimages(x * x, ProjectiveComplex::infinity(w), pol);
  ASSERT_EQ(inf.size(), 2u);
  EXPECT_TRUE(inf[0].infinite && inf[1].infinite);
}

TEST(Theorems, GeneralDilogAndFourLog) {
  PrecisionPolicy pol(50, 10, 20);
  mpfr_prec_t w = pol.bits() + 32;
  RatFunc x = RatFunc::variable("x");
  // five-term as a special case: phi = x(1-x), (B, C, D) = (1, 0, inf)
  Rng rng(2);
  for (int k = 0; k < 3; ++k) {
    auto v = verify_dilog_general(x * (1 - x), sample_annulus(rng, w), BigComplex(Rational(1), 0, w), BigComplex(w),
                                  ProjectiveComplex::infinity(w), pol);
    EXPECT_TRUE(v.pass);
  }
  auto f = verify_fourlog_numeric(2, 20, PrecisionPolicy(60, 10, 20), 1);
  EXPECT_TRUE(f.pass);
  EXPECT_TRUE(f.max_abs < ten_pow(-40, 256));
  // a wrong coefficient on [x/y] breaks it
  EXPECT_FALSE(verify_fourlog_numeric(3, 3, PrecisionPolicy(50), 1, Rational(1)).pass);
}
