#pragma once

#include "polylog/exact.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace polylog {

// Sparse vector over the raw basis xi_i, eta_j, zeta_lm.
using LVec = std::map<int, Rational>;

LVec operator+(const LVec& a, const LVec& b);
LVec operator-(const LVec& a, const LVec& b);
LVec operator*(const Rational& c, const LVec& a);

// Formal logarithms of the roots x_i, y_j and of the differences x_l - y_m,
// modulo "all row and column sums of (zeta_lm) agree".
class LogSpace {
 public:
  explicit LogSpace(int n);

  int n() const { return n_; }
  int dim() const { return 2 * n_ + n_ * n_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // 1-based indices
  LVec xi(int i) const { return basis(i - 1); }
  LVec eta(int j) const { return basis(n_ + j - 1); }
  LVec zeta(int l, int m) const { return basis(2 * n_ + (l - 1) * n_ + (m - 1)); }
  LVec basis(int raw) const { return reduce({{raw, 1}}); }

  LVec xi_sum() const;   // xi
  LVec eta_sum() const;  // eta
  LVec S() const { return xi_sum() - eta_sum(); }
  LVec s(int l, int m) const { return xi(l) - eta(m); }
  LVec Z() const;  // common value of the row/column sums

  LVec reduce(const LVec& v) const;
  bool is_xi(int raw) const { return raw < n_; }
  bool is_eta(int raw) const { return raw >= n_ && raw < 2 * n_; }
  std::string name(int raw) const;
  std::vector<int> pivots() const;

 private:
  int n_;
  std::vector<std::pair<int, LVec>> rows_;  // (pivot, row normalized at pivot)
};

// Element of Lambda^2(L).
using Wedge = std::map<std::pair<int, int>, Rational>;
Wedge wedge(const LVec& a, const LVec& b);
Wedge operator+(const Wedge& a, const Wedge& b);
Wedge operator*(const Rational& c, const Wedge& w);
bool is_zero(const Wedge& w);

// Sym^2(L) (x) Lambda^2(L), keys (i <= j, k < l).
class Tensor {
 public:
  void add(const Rational& c, const LVec& a, const LVec& b, const Wedge& w);
  void add(const Rational& c, const LVec& a, const LVec& b, const LVec& x, const LVec& y) {
    add(c, a, b, wedge(x, y));
  }
  void add_coord(std::uint64_t key, const Rational& c);
  Tensor& operator+=(const Tensor& o);
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor scale(const Rational& c) const;
  bool operator==(const Tensor& o) const { return c_ == o.c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::unordered_map<std::uint64_t, Rational>& coords() const { return c_; }

  static std::uint64_t key(int i, int j, int k, int l);
  static void unpack(std::uint64_t key, int out[4]);

 private:
  std::unordered_map<std::uint64_t, Rational> c_;
};

// Sym^3(L) (x) L, keys (i <= j <= k, l); "A^3 ^ B" lives here.
class CubicTensor {
 public:
  void add(const Rational& c, const LVec& a, const LVec& b, const LVec& d, const LVec& e);
  CubicTensor& operator+=(const CubicTensor& o);
  // a.b.c (x) d -> (1/3)[(a.b)(x)(c^d) + (a.c)(x)(b^d) + (b.c)(x)(a^d)]
  Tensor to_tensor() const;
  const std::unordered_map<std::uint64_t, Rational>& coords() const { return c_; }

 private:
  std::unordered_map<std::uint64_t, Rational> c_;
};

struct FormalTensor {
  CubicTensor cubic;
  Tensor mixed;

  Tensor canonical() const { return mixed + cubic.to_tensor(); }
  FormalTensor& operator+=(const FormalTensor& o);
};

enum class ArgKind { XOverY, InvRatio, OneMinusRatio, XlOverYm, OneMinusInvX, OneMinusInvY };
ArgKind parse_arg_kind(const std::string& s);
std::string to_string(ArgKind k);

// (log a, log(1 - a)) for the argument a of the given kind
std::pair<LVec, LVec> formal_logs(const LogSpace& L, ArgKind k, int l, int m);
// beta_4([a]) = A.A (x) (A ^ B)
Tensor beta4_formal(const LogSpace& L, ArgKind k, int l, int m);

struct ProofReport {
  int n = 0;
  std::vector<std::pair<std::string, bool>> identities;
  std::vector<std::pair<std::string, bool>> claim_parts;
  bool theorem_zero = false;
  bool all_pass() const;
  nlohmann::json to_json() const;
};

inline constexpr int kProofCap = 6;

// perturb: use base (3-n) in the weight sums (negative control)
ProofReport verify_identities(int n, bool perturb = false, int cap = kProofCap);
// perturb: coefficient n(n-3) instead of n(n-2) on [X/Y] (negative control)
ProofReport verify_claim_and_theorem(int n, bool perturb = false, int cap = kProofCap);

// beta_4 of the full four-log combination at n
Tensor theorem_beta4(const LogSpace& L, const Rational& xy_coeff);

}  // namespace polylog
