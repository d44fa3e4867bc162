#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace polylog {

using Rational = mpq_class;
using Integer = mpz_class;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

// sign * prod p^e
struct RationalFactorization {
  int sign = 1;
  std::map<Integer, long> factors;

  Rational reconstruct() const;
};

RationalFactorization factor_rational(const Rational& q);

// prime factorization of |n|, n != 0
std::map<Integer, long> factor_integer(const Integer& n);

// SplitMix64. Streams are derived with split(i), which hashes (state, i)
// into a fresh seed, so a stream depends only on its derivation path.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next();
  // uniform in [0, n), n > 0, by rejection
  std::uint64_t below(std::uint64_t n);
  // uniform in [lo, hi]
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  double uniform();
  Rng split(std::uint64_t stream) const;
  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t z);
std::uint64_t fnv1a(const std::string& s);

// Deterministic sampler of low height rationals; draw k depends only on
// (height, seed, k).
class RationalSampler {
 public:
  RationalSampler(long height, std::uint64_t seed, std::set<Rational> exclusions = {});
  Rational next();
  std::size_t calls() const { return calls_; }

 private:
  long height_;
  Rng rng_;
  std::set<Rational> excl_;
  std::size_t calls_ = 0;
  std::vector<Rational> pool_;
  bool pool_built_ = false;
};

Rational random_rational(long height, std::uint64_t seed, const std::set<Rational>& exclusions,
                         std::size_t call_index = 0);

// Writes a batch of rationals over a pairwise coprime base: small primes by
// trial division, leftover cofactors refined into a coprime base. Distinct base
// elements are multiplicatively independent, so exponent vectors are faithful
// in Q (x) Q^* without factoring large cofactors.
class LogEncoder {
 public:
  explicit LogEncoder(unsigned trial_bound = 1u << 16);

  void add(const Rational& q);
  void finalize();
  // exponent vector over base indices, sign dropped
  std::vector<std::pair<std::size_t, long>> encode(const Rational& q) const;
  const std::vector<Integer>& base() const { return base_; }
  std::string name(std::size_t i) const { return base_[i].get_str(); }

 private:
  void add_integer(Integer n);
  void refine(Integer n);
  std::vector<std::pair<std::size_t, long>> encode_integer(Integer n, long sign) const;

  unsigned bound_;
  std::vector<unsigned long> primes_;
  std::vector<Integer> pending_;
  std::vector<Integer> base_;
  std::map<Integer, std::size_t> index_;
  bool final_ = false;
};

std::vector<unsigned long> small_primes(unsigned long bound);

}  // namespace polylog
