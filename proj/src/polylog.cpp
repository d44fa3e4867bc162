#include "polylog/numeric.hpp"

#include <climits>
#include <mutex>

namespace polylog {

namespace {

constexpr mpfr_prec_t kExtra = 32;

std::mutex bern_mu;
std::vector<Rational> bern_cache;  // B_0.. with B_1 = +1/2 (Akiyama-Tanigawa)
std::vector<Rational> at_row;

}  // namespace

Rational bernoulli(int r) {
  if (r < 0) throw std::invalid_argument("bernoulli: negative index");
  if (r == 1) return Rational(-1, 2);
  if (r > 1 && r % 2 == 1) return 0;
  std::lock_guard<std::mutex> lk(bern_mu);
  while (static_cast<int>(bern_cache.size()) <= r) {
    std::size_t m = bern_cache.size();
    at_row.push_back(Rational(1, static_cast<long>(m + 1)));
    for (std::size_t j = m; j >= 1; --j) {
      at_row[j - 1] = Rational(static_cast<long>(j)) * (at_row[j - 1] - at_row[j]);
      at_row[j - 1].canonicalize();
    }
    bern_cache.push_back(at_row[0]);
  }
  return bern_cache[static_cast<std::size_t>(r)];
}

BigReal zeta_int(int k, mpfr_prec_t bits) {
  if (k < 2) throw std::invalid_argument("zeta_int: k must be at least 2");
  BigReal r(bits);
  mpfr_zeta_ui(r.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
  return r;
}

BigReal zeta_int(int k, const PrecisionPolicy& pol) { return zeta_int(k, pol.bits()); }

namespace {

BigComplex cone(mpfr_prec_t b) { return BigComplex::real(BigReal(1, b)); }

BigComplex li_series(int m, const BigComplex& z, mpfr_prec_t w) {
  BigComplex sum(w), p = z;
  BigReal eps = abs(z) * pow(BigReal(2, w), -static_cast<long>(w));
  for (long n = 1;; ++n) {
    BigReal nm(w);
    mpfr_ui_pow_ui(nm.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(m), MPFR_RNDN);
    BigComplex t = p / nm;
    sum += t;
    if (abs(t) < eps) break;
    p = p * z;
  }
  return sum;
}

// c_j = zeta(m-j)/j! for j >= m, w-bit, enough terms for |log z| <= 3.3
struct LogCoeffs {
  std::vector<BigReal> c;  // index j - m
};

std::mutex coeff_mu;
std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const LogCoeffs>> coeff_cache;

std::shared_ptr<const LogCoeffs> log_coeffs(int m, mpfr_prec_t w) {
  {
    std::lock_guard<std::mutex> lk(coeff_mu);
    auto it = coeff_cache.find({m, w});
    if (it != coeff_cache.end()) return it->second;
  }
  auto lc = std::make_shared<LogCoeffs>();
  long len = static_cast<long>(w) * 11 / 10 + 8;
  BigReal twopi = pi(w) * 2;
  lc->c.reserve(static_cast<std::size_t>(len));
  for (long n = 0; n < len; ++n) {
    long j = n + m;
    BigReal v(w);
    if (n == 0) {
      // zeta(0) = -1/2
      v = BigReal(-1, w) / 2;
      for (long i = 2; i <= j; ++i) v = v / i;
    } else if (n % 2 == 1) {
      long k = (n + 1) / 2;
      BigReal den = pow(twopi, 2 * k);
      for (long i = 2 * k; i <= 2 * k - 1 + m; ++i) den = den * i;
      v = zeta_int(static_cast<int>(2 * k), w) * 2 / den;
      if (k % 2) v = -v;
    }
    lc->c.push_back(std::move(v));
  }
  std::lock_guard<std::mutex> lk(coeff_mu);
  coeff_cache.emplace(std::make_pair(m, w), lc);
  return lc;
}

BigComplex li_logexp(int m, const BigComplex& z, mpfr_prec_t w) {
  BigComplex mu = log(z);
  BigReal eps = pow(BigReal(2, w), -static_cast<long>(w));
  BigComplex sum(w), p = cone(w);  // mu^j
  BigReal fact(1, w);              // j!
  for (int j = 0; j < m - 1; ++j) {
    sum += p * (zeta_int(m - j, w) / fact);
    p = p * mu;
    fact = fact * (j + 1);
  }
  // j = m-1: mu^(m-1)/(m-1)! (H_{m-1} - log(-mu))
  BigReal h(0, w);
  for (int i = 1; i <= m - 1; ++i) h += BigReal(1, w) / i;
  sum += p / fact * (BigComplex::real(h) - log(-mu));
  p = p * mu;
  auto lc = log_coeffs(m, w);
  int small = 0;
  for (std::size_t n = 0; n < lc->c.size(); ++n, p = p * mu) {
    if (lc->c[n].is_zero()) continue;
    BigComplex t = p * lc->c[n];
    sum += t;
    if (abs(t) < eps) {
      if (++small >= 2) return sum;
    } else {
      small = 0;
    }
  }
  throw ConvergenceError("Li_m log expansion did not converge");
}

BigComplex bernoulli_poly(int m, const BigComplex& x) {
  mpfr_prec_t w = x.prec();
  BigComplex acc(w);
  for (int k = 0; k <= m; ++k) {
    Rational b = bernoulli(k);
    if (b == 0) continue;
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    acc += pow(x, m - k) * BigReal(Rational(binom) * b, w);
  }
  return acc;
}

BigComplex li_core(int m, const BigComplex& z, mpfr_prec_t w);

BigComplex li_inversion(int m, const BigComplex& z, mpfr_prec_t w) {
  BigComplex twopii(BigReal(w), pi(w) * 2);
  BigComplex x = cone(w) / 2 + log(-z) / twopii;
  BigReal mf(1, w);
  for (int i = 2; i <= m; ++i) mf = mf * i;
  BigComplex main = -(pow(twopii, m) / mf) * bernoulli_poly(m, x);
  BigComplex other = li_core(m, inv(z), w);
  return m % 2 == 0 ? main - other : main + other;
}

BigComplex li_core(int m, const BigComplex& z, mpfr_prec_t w) {
  if (z.is_zero()) return BigComplex(w);
  if (m == 0) return z / (cone(w) - z);
  if (m == 1) return -log(cone(w) - z);
  if (z.is_real() && mpfr_cmp_ui(z.re.raw(), 1) == 0) return BigComplex::real(zeta_int(m, w));
  BigReal r = abs(z);
  if (mpfr_cmp_d(r.raw(), 0.5) <= 0) return li_series(m, z, w);
  if (mpfr_cmp_ui(r.raw(), 2) < 0) return li_logexp(m, z, w);
  return li_inversion(m, z, w);
}

}  // namespace

BigComplex li_m(int m, const BigComplex& z) {
  if (m < 1) throw std::invalid_argument("li_m: order must be at least 1");
  if (z.is_real() && mpfr_cmp_ui(z.re.raw(), 1) >= 0) {
    if (m == 1) throw DomainError("Li_1 has a pole at z = 1");
    if (mpfr_cmp_ui(z.re.raw(), 1) > 0) throw BranchError("Li_m is branch-ambiguous on the real ray z > 1; use CL_m");
  }
  mpfr_prec_t b = z.prec();
  return li_core(m, z.with_prec(b + kExtra), b + kExtra).with_prec(b);
}

BigComplex li_m(int m, const BigComplex& z, const PrecisionPolicy& pol) { return li_m(m, z.with_prec(pol.bits())); }

namespace {

BigReal cl_unit_disc(int m, const BigComplex& z, mpfr_prec_t w) {
  BigReal L = log(abs(z));
  BigComplex acc(w);
  BigReal lr(1, w);  // L^r
  for (int r = 0; r < m; ++r, lr = lr * L) {
    Rational b = bernoulli(r);
    if (b == 0) continue;
    Rational c = b;
    mpz_mul_2exp(c.get_num_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(r));
    for (int i = 2; i <= r; ++i) c /= i;
    c.canonicalize();
    acc += li_core(m - r, z, w) * (BigReal(c, w) * lr);
  }
  return m % 2 == 1 ? acc.re : acc.im;
}

}  // namespace

BigReal cl_m(int m, const ProjectiveComplex& p) {
  if (m < 2) throw std::invalid_argument("cl_m: weight must be at least 2");
  mpfr_prec_t b = p.value.prec();
  if (p.infinite || p.value.is_zero()) return BigReal(b);
  const BigComplex& z = p.value;
  if (z.is_real() && mpfr_cmp_ui(z.re.raw(), 1) == 0) return m % 2 == 1 ? zeta_int(m, b) : BigReal(b);
  mpfr_prec_t w = b + kExtra;
  BigComplex zw = z.with_prec(w);
  if (mpfr_cmp_ui(norm(zw).raw(), 1) <= 0) return cl_unit_disc(m, zw, w).with_prec(b);
  BigReal v = cl_unit_disc(m, inv(zw), w);
  return (m % 2 == 1 ? v : -v).with_prec(b);
}

BigReal cl_m(int m, const ProjectiveComplex& z, const PrecisionPolicy& pol) {
  if (z.infinite) return BigReal(pol.bits());
  return cl_m(m, ProjectiveComplex(z.value.with_prec(pol.bits())));
}

BigReal cl_apply(int m, const FormalSum& s, const PrecisionPolicy& pol) {
  mpfr_prec_t b = pol.bits();
  BigReal acc(b);
  for (auto& t : s.terms()) {
    if (!t.arg.num().is_constant() || !t.arg.den().is_constant())
      throw DomainError("cl_apply: non-constant argument " + to_string(t.arg));
    Rational q = t.arg.num().is_zero() ? Rational(0) : t.arg.constant_value();
    acc += cl_m(m, ProjectiveComplex(BigComplex(q, 0, b))) * BigReal(t.coeff, b);
  }
  return acc;
}

ComplexEvaluator::ComplexEvaluator(std::map<VarId, BigComplex> point, mpfr_prec_t bits)
    : point_(std::move(point)), bits_(bits) {}

ComplexEvaluator::Sum ComplexEvaluator::eval_sum(const MultiPoly& p, mpfr_prec_t bits) const {
  Sum s{BigComplex(bits), BigReal(bits)};
  std::map<VarId, std::vector<BigComplex>> pw;
  for (auto& t : p.terms()) {
    BigComplex v = BigComplex::real(BigReal(t.c, bits));
    for (auto& [x, e] : t.m.e) {
      auto it = point_.find(x);
      if (it == point_.end()) throw DomainError("complex eval: unbound variable " + var_name(x));
      auto& cache = pw[x];
      if (cache.empty()) {
        cache.push_back(cone(bits));
        cache.push_back(it->second.with_prec(bits));
      }
      while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
      v = v * cache[e];
    }
    s.magnitude += abs(v.re) + abs(v.im);
    s.value += v;
  }
  return s;
}

namespace {

// bits lost to cancellation; LONG_MAX/4 for an exactly zero result
long cancellation(const BigComplex& v, const BigReal& mag) {
  if (mag.is_zero()) return 0;
  BigReal a = abs(v.re) + abs(v.im);
  if (a.is_zero()) return LONG_MAX / 4;
  return std::max(0L, mag.exp2() - a.exp2());
}

}  // namespace

ComplexEvaluator::Result ComplexEvaluator::eval(const RatFunc& f) const {
  Result r;
  mpfr_prec_t cap = 8 * bits_ + 256;
  for (mpfr_prec_t w = bits_ + kExtra;; w = 2 * w) {
    Sum n = eval_sum(f.num(), w), d = eval_sum(f.den(), w);
    long ln = cancellation(n.value, n.magnitude), ld = cancellation(d.value, d.magnitude);
    long need = static_cast<long>(bits_) + 16;
    bool nok = ln + need <= w, dok = ld + need <= w;
    if ((nok && dok) || w >= cap) {
      bool nz = !nok, dz = !dok;
      if (nz && dz) {
        r.status = Indeterminate;
      } else if (dz) {
        r.status = Pole;
        r.value = ProjectiveComplex::infinity(bits_);
      } else if (nz) {
        r.value = ProjectiveComplex(BigComplex(bits_));
      } else {
        r.value = ProjectiveComplex((n.value / d.value).with_prec(bits_));
      }
      return r;
    }
  }
}

BigComplex ComplexEvaluator::eval_poly(const MultiPoly& p) const {
  mpfr_prec_t cap = 8 * bits_ + 256;
  for (mpfr_prec_t w = bits_ + kExtra;; w = 2 * w) {
    Sum s = eval_sum(p, w);
    long l = cancellation(s.value, s.magnitude);
    if (l + static_cast<long>(bits_) + 16 <= w) return s.value.with_prec(bits_);
    if (w >= cap) return BigComplex(bits_);
  }
}

std::optional<BigReal> cl_eval(int m, const FormalSum& s, const ComplexEvaluator& ev) {
  BigReal acc(ev.bits());
  for (auto& t : s.terms()) {
    auto r = ev.eval(t.arg);
    if (r.status == ComplexEvaluator::Indeterminate) return std::nullopt;
    acc += cl_m(m, r.value) * BigReal(t.coeff, ev.bits());
  }
  return acc;
}

ProjectiveComplex cross_ratio(const ProjectiveComplex& x, const ProjectiveComplex& y, const ProjectiveComplex& z,
                              const ProjectiveComplex& w) {
  mpfr_prec_t b = std::min({x.value.prec(), y.value.prec(), z.value.prec(), w.value.prec()});
  struct F {
    bool zero, one;
    BigComplex v;
  };
  auto factor = [&](const ProjectiveComplex& a, const ProjectiveComplex& c) -> F {
    if (a.infinite && c.infinite) return {true, false, BigComplex(b)};
    if (a.infinite || c.infinite) return {false, true, BigComplex(b)};
    BigComplex d = a.value - c.value;
    return {d.is_zero(), false, d};
  };
  F n1 = factor(x, z), n2 = factor(y, w), d1 = factor(x, w), d2 = factor(y, z);
  bool nz = n1.zero || n2.zero, dz = d1.zero || d2.zero;
  if (nz && dz) throw DomainError("indeterminate numeric cross ratio");
  if (dz) return ProjectiveComplex::infinity(b);
  if (nz) return ProjectiveComplex(BigComplex(b));
  BigComplex num = cone(b), den = cone(b);
  if (!n1.one) num = num * n1.v;
  if (!n2.one) num = num * n2.v;
  if (!d1.one) den = den * d1.v;
  if (!d2.one) den = den * d2.v;
  return ProjectiveComplex(num / den);
}

std::vector<BigComplex> coefficients_at(const MultiPoly& p, VarId x, const ComplexEvaluator& ev) {
  auto cs = p.coefficients_in(x);
  unsigned deg = cs.empty() ? 0 : cs.rbegin()->first;
  std::vector<BigComplex> out(deg + 1, BigComplex(ev.bits()));
  for (auto& [k, c] : cs) out[k] = ev.eval_poly(c);
  return out;
}

}  // namespace polylog
