#pragma once

#include "polylog/formal_sum.hpp"

#include <mpfr.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polylog {

// Binary float of fixed precision (RAII over mpfr_t). Binary operations round
// to the smaller precision of the operands.
class BigReal {
 public:
  explicit BigReal(mpfr_prec_t bits = 64);
  BigReal(long v, mpfr_prec_t bits);
  BigReal(const Rational& q, mpfr_prec_t bits);
  static BigReal from_double(double d, mpfr_prec_t bits);
  static BigReal from_string(const std::string& s, mpfr_prec_t bits);

  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }
  BigReal with_prec(mpfr_prec_t bits) const;

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  std::string str(int digits = 20) const;
  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_finite() const { return mpfr_number_p(x_) != 0; }
  // binary exponent (value in [2^(e-1), 2^e)); very negative for zero
  long exp2() const;

  BigReal operator-() const;
  BigReal operator+(const BigReal& o) const;
  BigReal operator-(const BigReal& o) const;
  BigReal operator*(const BigReal& o) const;
  BigReal operator/(const BigReal& o) const;
  BigReal operator*(long k) const;
  BigReal operator/(long k) const;
  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);

  bool operator<(const BigReal& o) const { return mpfr_less_p(x_, o.x_); }
  bool operator>(const BigReal& o) const { return mpfr_greater_p(x_, o.x_); }
  bool operator<=(const BigReal& o) const { return mpfr_lessequal_p(x_, o.x_); }
  bool operator>=(const BigReal& o) const { return mpfr_greaterequal_p(x_, o.x_); }
  bool operator==(const BigReal& o) const { return mpfr_equal_p(x_, o.x_); }

 private:
  mpfr_t x_;
};

BigReal abs(const BigReal& a);
BigReal sqrt(const BigReal& a);
BigReal log(const BigReal& a);
BigReal exp(const BigReal& a);
BigReal sin(const BigReal& a);
BigReal cos(const BigReal& a);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal hypot(const BigReal& a, const BigReal& b);
BigReal pow(const BigReal& a, long k);
BigReal pi(mpfr_prec_t bits);
BigReal ten_pow(long e, mpfr_prec_t bits);

class BigComplex {
 public:
  BigReal re, im;

  explicit BigComplex(mpfr_prec_t bits = 64) : re(bits), im(bits) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(const Rational& r, const Rational& i, mpfr_prec_t bits) : re(r, bits), im(i, bits) {}
  static BigComplex real(const BigReal& r) { return {r, BigReal(r.prec())}; }
  static BigComplex from_double(double r, double i, mpfr_prec_t bits) {
    return {BigReal::from_double(r, bits), BigReal::from_double(i, bits)};
  }

  mpfr_prec_t prec() const { return std::min(re.prec(), im.prec()); }
  BigComplex with_prec(mpfr_prec_t bits) const { return {re.with_prec(bits), im.with_prec(bits)}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  std::string str(int digits = 20) const;

  BigComplex operator-() const { return {-re, -im}; }
  BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
  BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
  BigComplex operator*(const BigComplex& o) const;
  BigComplex operator/(const BigComplex& o) const;
  BigComplex operator*(const BigReal& s) const { return {re * s, im * s}; }
  BigComplex operator/(const BigReal& s) const { return {re / s, im / s}; }
  BigComplex operator*(long k) const { return {re * k, im * k}; }
  BigComplex operator/(long k) const { return {re / k, im / k}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
};

BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z);  // |z|^2
BigReal arg(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal branch
BigComplex exp(const BigComplex& z);
BigComplex inv(const BigComplex& z);
BigComplex pow(const BigComplex& z, long k);

// A point of P^1(C).
struct ProjectiveComplex {
  bool infinite = false;
  BigComplex value;

  ProjectiveComplex() = default;
  ProjectiveComplex(BigComplex v) : value(std::move(v)) {}  // NOLINT
  static ProjectiveComplex infinity(mpfr_prec_t bits) {
    ProjectiveComplex p{BigComplex(bits)};
    p.infinite = true;
    return p;
  }
  std::string str(int digits = 20) const { return infinite ? "inf" : value.str(digits); }
};

struct PrecisionPolicy {
  int digits = 50;  // P
  int guard = 10;
  int slack = 15;

  PrecisionPolicy() = default;
  PrecisionPolicy(int p, int g = 10, int s = 15) : digits(p), guard(g), slack(s) { validate(); }
  void validate() const;
  mpfr_prec_t bits() const;
  // 10^(-P+slack)
  BigReal tolerance() const;
  int tolerance_exponent() const { return -digits + slack; }
};

mpfr_prec_t digits_to_bits(int digits);

struct BranchError : DomainError {
  using DomainError::DomainError;
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational bernoulli(int r);
BigReal zeta_int(int k, const PrecisionPolicy& pol);
BigReal zeta_int(int k, mpfr_prec_t bits);

BigComplex li_m(int m, const BigComplex& z, const PrecisionPolicy& pol);
BigComplex li_m(int m, const BigComplex& z);  // at the precision of z
BigReal cl_m(int m, const ProjectiveComplex& z, const PrecisionPolicy& pol);
BigReal cl_m(int m, const ProjectiveComplex& z);  // at the precision of z

// Sum of coeff * CL_m(arg) for a sum whose arguments are all constants.
BigReal cl_apply(int m, const FormalSum& s, const PrecisionPolicy& pol);

// Evaluates rational functions at a complex point; working precision is raised
// when the polynomial sums cancel.
class ComplexEvaluator {
 public:
  ComplexEvaluator(std::map<VarId, BigComplex> point, mpfr_prec_t bits);

  enum Status { Value, Pole, Indeterminate };
  struct Result {
    Status status = Value;
    ProjectiveComplex value;
  };

  Result eval(const RatFunc& f) const;
  BigComplex eval_poly(const MultiPoly& p) const;
  mpfr_prec_t bits() const { return bits_; }

 private:
  struct Sum {
    BigComplex value;
    BigReal magnitude;  // sum of |terms|
  };
  Sum eval_sum(const MultiPoly& p, mpfr_prec_t bits) const;
  std::map<VarId, BigComplex> point_;
  mpfr_prec_t bits_;
};

// Sum of coeff * CL_m(arg(point)); a term whose argument is 0/0 at the point
// makes the result unavailable (nullopt).
std::optional<BigReal> cl_eval(int m, const FormalSum& s, const ComplexEvaluator& ev);

ProjectiveComplex cross_ratio(const ProjectiveComplex& x, const ProjectiveComplex& y, const ProjectiveComplex& z,
                              const ProjectiveComplex& w);

// All complex roots of c_0 + c_1 x + ... + c_d x^d with multiplicity, sorted by
// (re, im); members of a multiple-root cluster are returned as identical values.
std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs, const PrecisionPolicy& pol);

// Coefficients of p in variable x, the other variables taken from ev.
std::vector<BigComplex> coefficients_at(const MultiPoly& p, VarId x, const ComplexEvaluator& ev);

}  // namespace polylog
