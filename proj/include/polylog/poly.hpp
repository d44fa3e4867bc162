#pragma once

#include "polylog/exact.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polylog {

using VarId = std::uint32_t;

inline constexpr std::uint64_t kMod = (1ULL << 61) - 1;
inline constexpr std::uint64_t kBadMod = ~0ULL;
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e);
std::uint64_t mod_inv(std::uint64_t a);
std::uint64_t mod_of(const Rational& q);  // kBadMod if den = 0 mod p
std::uint64_t var_point(VarId v, std::uint64_t salt);

// Global variable table. Ids are stable for the life of the process.
VarId var(std::string_view name);
const std::string& var_name(VarId id);
// true if a precedes b in the name order used for serialization
bool name_less(VarId a, VarId b);

struct Monomial {
  std::vector<std::pair<VarId, std::uint32_t>> e;  // sorted by id, exps > 0

  unsigned degree() const;
  unsigned degree(VarId v) const;
  bool is_one() const { return e.empty(); }
  bool contains(VarId v) const { return degree(v) > 0; }
  Monomial operator*(const Monomial& o) const;
  // nullopt-free divide: caller checks divides()
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

// graded, then lex with smaller id as bigger variable; >0 if a > b
int compare(const Monomial& a, const Monomial& b);
// same shape under the name order
int compare_by_name(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  Rational c;
};

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
  static MultiPoly variable(VarId v);
  static MultiPoly monomial(const Monomial& m, const Rational& c);
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  Rational constant_value() const;
  const Term& lead() const { return t_.front(); }
  const Term& lead_by_name() const;
  unsigned degree() const;
  unsigned degree(VarId v) const;
  std::vector<VarId> variables() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly pow(unsigned k) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly derivative(VarId v) const;
  // coefficients of powers of v
  std::map<unsigned, MultiPoly> coefficients_in(VarId v) const;
  static MultiPoly from_coefficients(VarId v, const std::map<unsigned, MultiPoly>& c);

  // exact quotient; throws if o does not divide
  MultiPoly divexact(const MultiPoly& o) const;
  bool divides_into(const MultiPoly& o, MultiPoly* q) const;

  // rational content: positive, with primitive() = this / content()
  Rational content() const;

  // value mod 2^61-1 at the hashed point for salt; kBadMod if undefined
  std::uint64_t eval_mod(std::uint64_t salt) const;

  std::string str() const;

 private:
  void normalize();
  std::vector<Term> t_;  // strictly decreasing by compare(), no zeros
};

// rational polynomial gcd, normalized: lead_by_name positive, content 1
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace polylog
