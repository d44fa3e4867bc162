#pragma once

#include "polylog/formal_sum.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace polylog {

// Element of Q (x) F^x in additive notation; basis names are primes (or other
// pairwise coprime integers), signs dropped.
struct PrimeVector {
  std::map<std::string, Rational> coords;

  bool is_zero() const { return coords.empty(); }
  PrimeVector& add(const PrimeVector& o, const Rational& c = 1);
  bool operator==(const PrimeVector& o) const { return coords == o.coords; }
  std::string str() const;
};

PrimeVector log_vector(const Rational& q);

class DualFunctional {
 public:
  DualFunctional() = default;
  explicit DualFunctional(std::map<std::string, Rational> values) : values_(std::move(values)) {}
  // values in [-height, height] derived from (seed, basis name)
  static DualFunctional hashed(std::uint64_t seed, long height);

  Rational value(const std::string& name) const;
  Rational operator()(const PrimeVector& v) const;
  nlohmann::json to_json() const;

 private:
  std::map<std::string, Rational> values_;
  bool hashed_ = false;
  std::uint64_t seed_ = 0;
  long height_ = 0;
};

// <beta_m(s), theta^(m-2) (x) (phi ^ psi)>; arguments must be constants outside {0, 1}
Rational beta_pairing(const FormalSum& s, int m, const DualFunctional& theta, const DualFunctional& phi,
                      const DualFunctional& psi);

// Full expansion of beta_m(s) for m <= 4: key (sorted symmetric indices, a < b
// of the wedge) -> coefficient.
using SymbolKey = std::pair<std::vector<std::string>, std::pair<std::string, std::string>>;
std::map<SymbolKey, Rational> beta_tensor(const FormalSum& s, int m);

struct KernelOptions {
  int trials = 8;       // R
  int functionals = 4;  // K
  long height = 40;     // H
  std::uint64_t seed = 0;
  int jobs = 1;
  int max_resamples = 256;
};

struct Witness {
  int trial = 0;
  int functional = 0;
  std::map<std::string, Rational> point;
  std::uint64_t theta_seed = 0, phi_seed = 0, psi_seed = 0;
  Rational value;
};

struct Verdict {
  bool pass = false;
  std::optional<Witness> witness;
  int trials = 0;
  int functionals = 0;
  long height = 0;
  std::uint64_t seed = 0;
  std::size_t resamples = 0;
  nlohmann::json to_json() const;
};

struct SpecializationError : DomainError {
  using DomainError::DomainError;
};

Verdict kernel_test(const FormalSum& s, int m, const KernelOptions& opt);

// functional seeds used by kernel_test for trial r, functional k
std::uint64_t functional_seed(std::uint64_t seed, int r, int k, int which);

}  // namespace polylog
