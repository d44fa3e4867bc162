#include "polylog/ratfunc.hpp"

#include <algorithm>

namespace polylog {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

RatFunc& RatFunc::operator=(const RatFunc& o) {
  if (this != &o) {
    num_ = o.num_;
    den_ = o.den_;
    copy_fp(o);
  }
  return *this;
}

RatFunc& RatFunc::operator=(RatFunc&& o) noexcept {
  num_ = std::move(o.num_);
  den_ = std::move(o.den_);
  copy_fp(o);
  return *this;
}

void RatFunc::copy_fp(const RatFunc& o) {
  fp0_.store(o.fp0_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  fp1_.store(o.fp1_.load(std::memory_order_relaxed), std::memory_order_relaxed);
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  Rational c = den_.content();
  if (den_.lead_by_name().c < 0) c = -c;
  if (c != 1) {
    Rational s = Rational(1) / c;
    num_ = num_ * s;
    den_ = den_ * s;
  }
}

bool RatFunc::depends_on(VarId v) const {
  if (!num_.degree(v) && !den_.degree(v)) return false;
  return !(num_.derivative(v) * den_ - num_ * den_.derivative(v)).is_zero();
}

std::vector<VarId> RatFunc::variables() const {
  auto a = num_.variables(), b = den_.variables();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

bool RatFunc::is_constant() const {
  if (num_.is_constant() && den_.is_constant()) return true;
  for (VarId v : variables())
    if (depends_on(v)) return false;
  return true;
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of non-constant function");
  if (num_.is_zero()) return 0;
  return num_.lead().c / den_.lead().c;
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw DomainError("inverse of the zero function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DomainError("division by the zero function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  return RatFunc(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

RatFunc RatFunc::reduced() const {
  if (num_.is_zero() || den_.is_constant()) return *this;
  MultiPoly g = gcd(num_, den_);
  if (g.is_constant()) return *this;
  return RatFunc(num_.divexact(g), den_.divexact(g));
}

std::uint64_t RatFunc::fingerprint(std::uint64_t salt) const {
  std::atomic<std::uint64_t>* slot = salt == 0 ? &fp0_ : salt == 1 ? &fp1_ : nullptr;
  if (slot) {
    std::uint64_t v = slot->load(std::memory_order_relaxed);
    if (v != kUnset) return v;
  }
  std::uint64_t n = num_.eval_mod(salt), d = den_.eval_mod(salt);
  std::uint64_t v = (n == kBadMod || d == kBadMod || d == 0) ? kBadMod : mod_mul(n, mod_inv(d));
  if (slot) slot->store(v, std::memory_order_relaxed);
  return v;
}

std::string RatFunc::str() const { return to_string(*this); }

RatFunc operator+(const Rational& c, const RatFunc& f) { return RatFunc(c) + f; }
RatFunc operator-(const Rational& c, const RatFunc& f) { return RatFunc(c) - f; }
RatFunc operator*(const Rational& c, const RatFunc& f) { return RatFunc(c) * f; }
RatFunc operator/(const Rational& c, const RatFunc& f) { return RatFunc(c) / f; }

MultiPoly substitute_poly(const MultiPoly& p, const Binding& b, const std::map<VarId, unsigned>& lift) {
  std::map<VarId, std::vector<MultiPoly>> npow, dpow;
  auto power = [](std::vector<MultiPoly>& cache, const MultiPoly& base, unsigned k) -> const MultiPoly& {
    if (cache.empty()) cache.push_back(MultiPoly(1));
    while (cache.size() <= k) cache.push_back(cache.back() * base);
    return cache[k];
  };
  std::vector<Term> acc;
  for (auto& t : p.terms()) {
    MultiPoly prod(t.c);
    Monomial rest;
    for (auto& [v, e] : t.m.e) {
      auto it = b.find(v);
      if (it == b.end()) {
        rest.e.emplace_back(v, e);
        continue;
      }
      prod = prod * power(npow[v], it->second.num(), e);
    }
    for (auto& [v, L] : lift) {
      unsigned e = t.m.degree(v);
      if (L > e) prod = prod * power(dpow[v], b.at(v).den(), L - e);
    }
    for (auto& q : prod.terms()) acc.push_back({q.m * rest, q.c});
  }
  return MultiPoly::from_terms(std::move(acc));
}

RatFunc substitute(const RatFunc& f, const Binding& b) {
  std::map<VarId, unsigned> lift;
  for (VarId v : f.variables()) {
    auto it = b.find(v);
    if (it == b.end()) continue;
    if (it->second.den().is_constant()) {
      lift[v] = 0;
      continue;
    }
    lift[v] = std::max(f.num().degree(v), f.den().degree(v));
  }
  MultiPoly n = substitute_poly(f.num(), b, lift);
  MultiPoly d = substitute_poly(f.den(), b, lift);
  if (d.is_zero()) throw DomainError("substitution makes the denominator vanish");
  return RatFunc(n, d);
}

bool equivalent(const RatFunc& f, const RatFunc& g) {
  for (std::uint64_t salt : {0ULL, 1ULL}) {
    std::uint64_t a = f.fingerprint(salt), b = g.fingerprint(salt);
    if (a != kBadMod && b != kBadMod && a != b) return false;
  }
  if (f.same_repr(g)) return true;
  return f.num() * g.den() == g.num() * f.den();
}

bool equivalent_up_to_inversion(const RatFunc& f, const RatFunc& g) {
  if (equivalent(f, g)) return true;
  if (g.is_zero() || f.is_zero()) return false;
  return equivalent(f, g.inv());
}

std::uint64_t inversion_class_key(const RatFunc& f) {
  std::uint64_t k = f.fingerprint(0);
  if (k == kBadMod || k == 0) return kBadMod;
  return std::min(k, mod_inv(k));
}

Rational eval_poly(const MultiPoly& p, const std::map<VarId, Rational>& point) {
  std::map<VarId, std::vector<Rational>> pw;
  Rational acc = 0;
  for (auto& t : p.terms()) {
    Rational v = t.c;
    for (auto& [x, e] : t.m.e) {
      auto it = point.find(x);
      if (it == point.end()) throw DomainError("eval: unbound variable " + var_name(x));
      auto& c = pw[x];
      if (c.empty()) c.push_back(1);
      while (c.size() <= e) c.push_back(c.back() * it->second);
      v *= c[e];
    }
    acc += v;
  }
  return acc;
}

Eval<Rational> eval(const RatFunc& f, const std::map<VarId, Rational>& point) {
  Rational n = eval_poly(f.num(), point), d = eval_poly(f.den(), point);
  Eval<Rational> r;
  if (d == 0) {
    r.status = n == 0 ? Eval<Rational>::Indeterminate : Eval<Rational>::Pole;
    return r;
  }
  r.value = n / d;
  return r;
}

const RatFunc& ProjectiveValue::finite() const {
  if (infinite) throw DomainError("point at infinity has no finite value");
  return value;
}

ProjectiveValue cross_ratio(const ProjectiveValue& x, const ProjectiveValue& y, const ProjectiveValue& z,
                            const ProjectiveValue& w) {
  auto same = [](const ProjectiveValue& a, const ProjectiveValue& b) {
    if (a.infinite || b.infinite) return a.infinite && b.infinite;
    return equivalent(a.value, b.value);
  };
  if (same(x, y) && same(y, z) && same(z, w)) throw DomainError("cross ratio of four equal points");
  struct Factor {
    bool zero;
    RatFunc v;
  };
  auto factor = [](const ProjectiveValue& a, const ProjectiveValue& b) -> Factor {
    if (a.infinite && b.infinite) return {true, RatFunc()};
    if (a.infinite || b.infinite) return {false, RatFunc(1)};
    RatFunc d = a.value - b.value;
    return {d.is_zero(), d};
  };
  Factor n1 = factor(x, z), n2 = factor(y, w), d1 = factor(x, w), d2 = factor(y, z);
  bool nz = n1.zero || n2.zero, dz = d1.zero || d2.zero;
  if (nz && dz) throw DomainError("indeterminate cross ratio (three coincident points)");
  if (dz) return ProjectiveValue::infinity();
  if (nz) return ProjectiveValue(RatFunc());
  RatFunc r = (n1.v * n2.v) / (d1.v * d2.v);
  if (r.is_constant()) return ProjectiveValue(RatFunc(r.constant_value()));
  return ProjectiveValue(r);
}

std::string to_string(const RatFunc& f) {
  if (f.den().is_constant()) return f.num().str();
  return "(" + f.num().str() + ")/(" + f.den().str() + ")";
}

}  // namespace polylog
