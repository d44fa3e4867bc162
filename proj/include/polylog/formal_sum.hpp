#pragma once

#include "polylog/ratfunc.hpp"

#include <json.hpp>

#include <unordered_map>
#include <vector>

namespace polylog {

struct SumTerm {
  Rational coeff;
  RatFunc arg;
};

// Rational linear combination of arguments [f]; equivalent arguments merge,
// zero coefficients vanish, identically constant arguments are stored as
// constants.
class FormalSum {
 public:
  FormalSum() = default;
  static FormalSum single(const RatFunc& arg, const Rational& c = 1);

  void add(const Rational& c, const RatFunc& arg);
  const std::vector<SumTerm>& terms() const& { return t_; }
  std::vector<SumTerm> terms() && { return std::move(t_); }
  std::size_t size() const { return t_.size(); }
  bool empty() const { return t_.empty(); }
  Rational coefficient_of(const RatFunc& arg) const;

  FormalSum operator+(const FormalSum& o) const;
  FormalSum operator-(const FormalSum& o) const;
  FormalSum operator-() const { return scale(-1); }
  FormalSum scale(const Rational& c) const;
  FormalSum& operator+=(const FormalSum& o);

  std::vector<VarId> variables() const;
  // terms ordered by fingerprint, for order-independent output
  std::vector<SumTerm> canonical() const;

 private:
  std::vector<SumTerm> t_;
  std::unordered_multimap<std::uint64_t, std::size_t> index_;
  void reindex();
};

// Identify [x] with sign*[1/x], sign = (-1)^(m-1); representatives are first
// occurrences.
FormalSum merge_inversions(const FormalSum& s, int m);
std::size_t count_distinct_up_to_inversion(const FormalSum& s);
std::size_t count_nonconstant(const FormalSum& s);

class Automorphism {
 public:
  Automorphism(std::vector<VarId> vars, std::vector<RatFunc> images);
  static Automorphism identity(std::vector<VarId> vars);

  const std::vector<VarId>& vars() const { return vars_; }
  const std::vector<RatFunc>& images() const { return images_; }
  RatFunc apply(const RatFunc& f) const;
  bool operator==(const Automorphism& o) const;
  std::uint64_t key() const { return key_; }

 private:
  std::vector<VarId> vars_;
  std::vector<RatFunc> images_;
  std::uint64_t key_;
};

// (s o t)(f) = s(t(f)); images reduced by gcd
Automorphism compose(const Automorphism& s, const Automorphism& t);

FormalSum map_arguments(const FormalSum& s, const Automorphism& a);

struct ClosureTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Automorphism> group_closure(const std::vector<Automorphism>& gens, std::size_t bound = 1024);
std::vector<RatFunc> orbit(const RatFunc& x, const std::vector<Automorphism>& group, bool up_to_inversion);

struct DegenerateTerm {
  Rational coeff;
  RatFunc arg;
  std::string reason;  // "zero", "one", "pole", "indeterminate"
};

struct Specialization {
  bool degenerate = false;  // a term was dropped and degeneracy was not allowed
  FormalSum sum;  // constant arguments only
  std::vector<DegenerateTerm> dropped;
};

Specialization specialize(const FormalSum& s, const std::map<VarId, Rational>& point, bool allow_degenerate = false);

nlohmann::json to_json(const FormalSum& s);
FormalSum formal_sum_from_json(const nlohmann::json& j);

}  // namespace polylog
