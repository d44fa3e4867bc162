#include "polylog/numeric.hpp"

#include <climits>
#include <cmath>

namespace polylog {

namespace {
constexpr mpfr_rnd_t R = MPFR_RNDN;

mpfr_prec_t pmin(const BigReal& a, const BigReal& b) { return std::min(a.prec(), b.prec()); }
}  // namespace

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(x_, bits);
  mpfr_set_zero(x_, 1);
}

BigReal::BigReal(long v, mpfr_prec_t bits) {
  mpfr_init2(x_, bits);
  mpfr_set_si(x_, v, R);
}

BigReal::BigReal(const Rational& q, mpfr_prec_t bits) {
  mpfr_init2(x_, bits);
  mpfr_set_q(x_, q.get_mpq_t(), R);
}

BigReal BigReal::from_double(double d, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_set_d(r.x_, d, R);
  return r;
}

BigReal BigReal::from_string(const std::string& s, mpfr_prec_t bits) {
  BigReal r(bits);
  if (mpfr_set_str(r.x_, s.c_str(), 10, R) != 0) throw std::invalid_argument("not a number: " + s);
  return r;
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(x_, o.prec());
  mpfr_set(x_, o.x_, R);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(x_, MPFR_PREC_MIN);
  mpfr_swap(x_, o.x_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(x_, o.prec());
    mpfr_set(x_, o.x_, R);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  mpfr_swap(x_, o.x_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(x_); }

BigReal BigReal::with_prec(mpfr_prec_t bits) const {
  BigReal r(bits);
  mpfr_set(r.x_, x_, R);
  return r;
}

std::string BigReal::str(int digits) const {
  if (!is_finite()) return mpfr_nan_p(x_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(std::max(1, digits)) + "Rg";
  mpfr_asprintf(&buf, fmt.c_str(), x_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

long BigReal::exp2() const {
  if (is_zero()) return LONG_MIN / 4;
  return mpfr_get_exp(x_);
}

BigReal BigReal::operator-() const {
  BigReal r(prec());
  mpfr_neg(r.x_, x_, R);
  return r;
}

#define POLYLOG_BINOP(op, fn)                               \
  BigReal BigReal::operator op(const BigReal& o) const {    \
    BigReal r(pmin(*this, o));                              \
    fn(r.x_, x_, o.x_, R);                                  \
    return r;                                               \
  }
POLYLOG_BINOP(+, mpfr_add)
POLYLOG_BINOP(-, mpfr_sub)
POLYLOG_BINOP(*, mpfr_mul)
POLYLOG_BINOP(/, mpfr_div)
#undef POLYLOG_BINOP

BigReal BigReal::operator*(long k) const {
  BigReal r(prec());
  mpfr_mul_si(r.x_, x_, k, R);
  return r;
}

BigReal BigReal::operator/(long k) const {
  BigReal r(prec());
  mpfr_div_si(r.x_, x_, k, R);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }

#define POLYLOG_UNARY(name, fn)        \
  BigReal name(const BigReal& a) {     \
    BigReal r(a.prec());               \
    fn(r.raw(), a.raw(), R);           \
    return r;                          \
  }
POLYLOG_UNARY(abs, mpfr_abs)
POLYLOG_UNARY(sqrt, mpfr_sqrt)
POLYLOG_UNARY(log, mpfr_log)
POLYLOG_UNARY(exp, mpfr_exp)
POLYLOG_UNARY(sin, mpfr_sin)
POLYLOG_UNARY(cos, mpfr_cos)
#undef POLYLOG_UNARY

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(pmin(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), R);
  return r;
}

BigReal hypot(const BigReal& a, const BigReal& b) {
  BigReal r(pmin(a, b));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), R);
  return r;
}

BigReal pow(const BigReal& a, long k) {
  BigReal r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), k, R);
  return r;
}

BigReal pi(mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_const_pi(r.raw(), R);
  return r;
}

BigReal ten_pow(long e, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(std::labs(e)), R);
  if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), R);
  return r;
}

std::string BigComplex::str(int digits) const {
  if (im.is_zero()) return re.str(digits);
  std::string i = im.str(digits);
  if (i[0] == '-') return re.str(digits) + " - " + i.substr(1) + "i";
  return re.str(digits) + " + " + i + "i";
}

BigComplex BigComplex::operator*(const BigComplex& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re};
}

BigComplex BigComplex::operator/(const BigComplex& o) const {
  BigReal d = norm(o);
  return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

BigComplex& BigComplex::operator+=(const BigComplex& o) { return *this = *this + o; }
BigComplex& BigComplex::operator-=(const BigComplex& o) { return *this = *this - o; }

BigReal abs(const BigComplex& z) { return hypot(z.re, z.im); }
BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }
BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  return {log(abs(z)), arg(z)};
}

BigComplex exp(const BigComplex& z) {
  BigReal m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

BigComplex inv(const BigComplex& z) {
  if (z.is_zero()) throw DomainError("inverse of zero");
  BigReal d = norm(z);
  return {z.re / d, -z.im / d};
}

BigComplex pow(const BigComplex& z, long k) {
  if (k < 0) return pow(inv(z), -k);
  BigComplex r = BigComplex::real(BigReal(1, z.prec()));
  BigComplex b = z;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

void PrecisionPolicy::validate() const {
  if (digits < 10) throw std::invalid_argument("precision must be at least 10 digits");
  if (digits <= guard + slack)
    throw std::invalid_argument("precision " + std::to_string(digits) + " must exceed guard + slack = " +
                                std::to_string(guard + slack));
}

mpfr_prec_t PrecisionPolicy::bits() const { return digits_to_bits(digits + guard); }

BigReal PrecisionPolicy::tolerance() const { return ten_pow(tolerance_exponent(), bits()); }

}  // namespace polylog
