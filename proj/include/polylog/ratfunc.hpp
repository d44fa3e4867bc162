#pragma once

#include "polylog/poly.hpp"

#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polylog {

class RatFunc;
using Binding = std::map<VarId, RatFunc>;

// Exact element of Q(x1..xn), stored unreduced as num/den with den primitive
// and its name-order leading coefficient positive.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT
  RatFunc(MultiPoly num, MultiPoly den);
  RatFunc(const RatFunc& o) : num_(o.num_), den_(o.den_) { copy_fp(o); }
  RatFunc(RatFunc&& o) noexcept : num_(std::move(o.num_)), den_(std::move(o.den_)) { copy_fp(o); }
  RatFunc& operator=(const RatFunc& o);
  RatFunc& operator=(RatFunc&& o) noexcept;

  static RatFunc variable(std::string_view name) { return variable(var(name)); }
  static RatFunc variable(VarId v) { return RatFunc(MultiPoly::variable(v), MultiPoly(1)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  // identically constant as a function
  bool is_constant() const;
  Rational constant_value() const;
  bool depends_on(VarId v) const;
  std::vector<VarId> variables() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inv() const;
  RatFunc pow(long k) const;

  // common factors removed by multivariate gcd
  RatFunc reduced() const;

  // value mod 2^61-1 at a hashed point; kBadMod if the point hits a pole
  std::uint64_t fingerprint(std::uint64_t salt = 0) const;
  // bitwise identical representation
  bool same_repr(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string str() const;

 private:
  void normalize();
  void copy_fp(const RatFunc& o);
  MultiPoly num_, den_;
  mutable std::atomic<std::uint64_t> fp0_{kUnset}, fp1_{kUnset};
  static constexpr std::uint64_t kUnset = ~0ULL - 1;
};

RatFunc operator+(const Rational& c, const RatFunc& f);
RatFunc operator-(const Rational& c, const RatFunc& f);
RatFunc operator*(const Rational& c, const RatFunc& f);
RatFunc operator/(const Rational& c, const RatFunc& f);

// unbound variables are left in place
RatFunc substitute(const RatFunc& f, const Binding& b);
MultiPoly substitute_poly(const MultiPoly& p, const Binding& b, const std::map<VarId, unsigned>& lift);

bool equivalent(const RatFunc& f, const RatFunc& g);
bool equivalent_up_to_inversion(const RatFunc& f, const RatFunc& g);
// hash that agrees on equivalent functions and on f, 1/f
std::uint64_t inversion_class_key(const RatFunc& f);

template <class T>
struct Eval {
  enum Status { Value, Pole, Indeterminate };
  Status status = Value;
  T value{};
  bool ok() const { return status == Value; }
};

Eval<Rational> eval(const RatFunc& f, const std::map<VarId, Rational>& point);
Rational eval_poly(const MultiPoly& p, const std::map<VarId, Rational>& point);

struct ProjectiveValue {
  bool infinite = false;
  RatFunc value;

  static ProjectiveValue infinity() { return {true, RatFunc()}; }
  ProjectiveValue() = default;
  ProjectiveValue(bool inf, RatFunc v) : infinite(inf), value(std::move(v)) {}
  ProjectiveValue(RatFunc v) : value(std::move(v)) {}  // NOLINT
  ProjectiveValue(long c) : value(c) {}  // NOLINT
  const RatFunc& finite() const;
};

// (x-z)/(x-w) * (y-w)/(y-z); factors containing infinity are dropped
ProjectiveValue cross_ratio(const ProjectiveValue& x, const ProjectiveValue& y, const ProjectiveValue& z,
                            const ProjectiveValue& w);

inline constexpr int kDefaultExponentLimit = 64;
RatFunc parse(std::string_view text, int exponent_limit = kDefaultExponentLimit);
std::string to_string(const RatFunc& f);

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace polylog
