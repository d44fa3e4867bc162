#include "polylog/exact.hpp"

#include <algorithm>
#include <mutex>

namespace polylog {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw DomainError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational RationalFactorization::reconstruct() const {
  Integer num = 1, den = 1;
  for (auto& [p, e] : factors) {
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e > 0 ? e : -e));
    if (e > 0)
      num *= pw;
    else
      den *= pw;
  }
  return make_rational(sign * num, den);
}

std::vector<unsigned long> small_primes(unsigned long bound) {
  std::vector<char> sieve(bound + 1, 1);
  std::vector<unsigned long> out;
  for (unsigned long i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= bound; j += i) sieve[j] = 0;
  }
  return out;
}

namespace {

const std::vector<unsigned long>& trial_primes() {
  static const std::vector<unsigned long> p = small_primes(100000);
  return p;
}

bool is_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor of odd composite n
Integer brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1, m = 128;
    auto f = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer d = abs(x - y);
          q = (q * d) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(Integer(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, std::map<Integer, long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Integer root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split(root, out);
    split(root, out);
    return;
  }
  Integer d = brent(n);
  split(d, out);
  split(Integer(n / d), out);
}

}  // namespace

std::map<Integer, long> factor_integer(const Integer& n0) {
  if (n0 == 0) throw DomainError("factor of zero");
  Integer n = abs(n0);
  std::map<Integer, long> out;
  for (unsigned long p : trial_primes()) {
    if (Integer(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      long e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      out[Integer(p)] = e;
    }
  }
  if (n > 1) split(n, out);
  return out;
}

RationalFactorization factor_rational(const Rational& q) {
  if (q == 0) throw DomainError("factor_rational: zero");
  RationalFactorization f;
  f.sign = sgn(q) < 0 ? -1 : 1;
  for (auto& [p, e] : factor_integer(q.get_num())) f.factors[p] += e;
  for (auto& [p, e] : factor_integer(q.get_den())) f.factors[p] -= e;
  return f;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    std::uint64_t v = next();
    if (v < lim) return v % n;
  }
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rng Rng::split(std::uint64_t stream) const {
  return Rng(mix64(state_ ^ mix64(stream + 0x632be59bd9b4e019ULL)));
}

RationalSampler::RationalSampler(long height, std::uint64_t seed, std::set<Rational> exclusions)
    : height_(height), rng_(seed), excl_(std::move(exclusions)) {
  if (height < 2) throw std::invalid_argument("random_rational: height must be >= 2");
}

Rational RationalSampler::next() {
  ++calls_;
  auto ok = [&](const Rational& q) { return q != 0 && q != 1 && !excl_.count(q); };
  for (int attempt = 0; attempt < 64; ++attempt) {
    long n = rng_.range(-height_, height_);
    long d = rng_.range(1, height_);
    if (n == 0) continue;
    Integer g = gcd(Integer(n), Integer(d));
    if (g != 1) continue;
    Rational q(n, d);
    if (ok(q)) return q;
  }
  if (!pool_built_) {
    for (long d = 1; d <= height_; ++d)
      for (long n = -height_; n <= height_; ++n) {
        if (n == 0 || gcd(Integer(n), Integer(d)) != 1) continue;
        Rational q(n, d);
        if (ok(q)) pool_.push_back(q);
      }
    pool_built_ = true;
  }
  if (pool_.empty()) throw DomainError("random_rational: sample space exhausted");
  return pool_[rng_.below(pool_.size())];
}

Rational random_rational(long height, std::uint64_t seed, const std::set<Rational>& exclusions,
                         std::size_t call_index) {
  RationalSampler s(height, seed, exclusions);
  Rational q;
  for (std::size_t i = 0; i <= call_index; ++i) q = s.next();
  return q;
}

LogEncoder::LogEncoder(unsigned trial_bound) : bound_(trial_bound) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<unsigned long>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(trial_bound);
  if (it == cache.end()) it = cache.emplace(trial_bound, small_primes(trial_bound)).first;
  primes_ = it->second;
}

void LogEncoder::add(const Rational& q) {
  if (q == 0) throw DomainError("log of zero");
  add_integer(abs(q.get_num()));
  add_integer(Integer(q.get_den()));
}

void LogEncoder::add_integer(Integer n) {
  if (final_) throw std::logic_error("LogEncoder: add after finalize");
  for (unsigned long p : primes_) {
    if (n == 1) return;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      if (!index_.count(Integer(p))) {
        index_[Integer(p)] = 0;
        base_.push_back(Integer(p));
      }
    }
  }
  if (n > 1) pending_.push_back(n);
}

void LogEncoder::refine(Integer n) {
  std::vector<Integer> work{n};
  while (!work.empty()) {
    Integer x = work.back();
    work.pop_back();
    if (x == 1) continue;
    bool placed = false;
    for (std::size_t i = 0; i < pending_.size(); ++i) {
      Integer g = gcd(x, pending_[i]);
      if (g == 1) continue;
      if (g == x && g == pending_[i]) {
        placed = true;
        break;
      }
      Integer b = pending_[i];
      pending_.erase(pending_.begin() + static_cast<long>(i));
      work.push_back(g);
      work.push_back(Integer(b / g));
      work.push_back(Integer(x / g));
      placed = true;
      break;
    }
    if (!placed) pending_.push_back(x);
  }
}

void LogEncoder::finalize() {
  if (final_) return;
  std::vector<Integer> in;
  in.swap(pending_);
  std::sort(in.begin(), in.end());
  for (auto& n : in) refine(n);
  std::sort(pending_.begin(), pending_.end());
  for (auto& b : pending_) base_.push_back(b);
  pending_.clear();
  std::sort(base_.begin(), base_.end());
  index_.clear();
  for (std::size_t i = 0; i < base_.size(); ++i) index_[base_[i]] = i;
  final_ = true;
}

std::vector<std::pair<std::size_t, long>> LogEncoder::encode_integer(Integer n, long sign) const {
  std::vector<std::pair<std::size_t, long>> out;
  for (std::size_t i = 0; i < base_.size() && n != 1; ++i) {
    const Integer& b = base_[i];
    if (!mpz_divisible_p(n.get_mpz_t(), b.get_mpz_t())) continue;
    long e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), b.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), b.get_mpz_t());
      ++e;
    }
    out.emplace_back(i, sign * e);
  }
  if (n != 1) throw std::logic_error("LogEncoder: value outside base " + n.get_str());
  return out;
}

std::vector<std::pair<std::size_t, long>> LogEncoder::encode(const Rational& q) const {
  if (!final_) throw std::logic_error("LogEncoder: encode before finalize");
  if (q == 0) throw DomainError("log of zero");
  auto a = encode_integer(abs(q.get_num()), 1);
  auto b = encode_integer(Integer(q.get_den()), -1);
  std::map<std::size_t, long> acc;
  for (auto& [i, e] : a) acc[i] += e;
  for (auto& [i, e] : b) acc[i] += e;
  std::vector<std::pair<std::size_t, long>> out;
  for (auto& [i, e] : acc)
    if (e) out.emplace_back(i, e);
  return out;
}

}  // namespace polylog
