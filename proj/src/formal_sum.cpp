#include "polylog/formal_sum.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace polylog {

namespace {

bool cheap_constant(const RatFunc& f) {
  if (f.num().is_constant() && f.den().is_constant()) return true;
  std::uint64_t a = f.fingerprint(0), b = f.fingerprint(1);
  if (a != kBadMod && b != kBadMod && a != b) return false;
  return f.is_constant();
}

}  // namespace

FormalSum FormalSum::single(const RatFunc& arg, const Rational& c) {
  FormalSum s;
  s.add(c, arg);
  return s;
}

void FormalSum::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < t_.size(); ++i) index_.emplace(t_[i].arg.fingerprint(0), i);
}

void FormalSum::add(const Rational& c, const RatFunc& arg0) {
  if (c == 0) return;
  RatFunc arg = cheap_constant(arg0) ? RatFunc(arg0.constant_value()) : arg0;
  std::uint64_t k = arg.fingerprint(0);
  auto [lo, hi] = index_.equal_range(k);
  for (auto it = lo; it != hi; ++it) {
    SumTerm& t = t_[it->second];
    if (!equivalent(t.arg, arg)) continue;
    t.coeff += c;
    if (t.coeff == 0) {
      t_.erase(t_.begin() + static_cast<long>(it->second));
      reindex();
    }
    return;
  }
  index_.emplace(k, t_.size());
  t_.push_back({c, arg});
}

Rational FormalSum::coefficient_of(const RatFunc& arg) const {
  auto [lo, hi] = index_.equal_range(arg.fingerprint(0));
  for (auto it = lo; it != hi; ++it)
    if (equivalent(t_[it->second].arg, arg)) return t_[it->second].coeff;
  return 0;
}

FormalSum FormalSum::operator+(const FormalSum& o) const {
  FormalSum r = *this;
  r += o;
  return r;
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (auto& t : o.t_) add(t.coeff, t.arg);
  return *this;
}

FormalSum FormalSum::operator-(const FormalSum& o) const { return *this + o.scale(-1); }

FormalSum FormalSum::scale(const Rational& c) const {
  if (c == 0) return {};
  FormalSum r = *this;
  for (auto& t : r.t_) t.coeff *= c;
  return r;
}

std::vector<VarId> FormalSum::variables() const {
  std::vector<VarId> vs;
  for (auto& t : t_) {
    auto v = t.arg.variables();
    vs.insert(vs.end(), v.begin(), v.end());
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<SumTerm> FormalSum::canonical() const {
  std::vector<SumTerm> out = t_;
  std::stable_sort(out.begin(), out.end(), [](const SumTerm& a, const SumTerm& b) {
    return a.arg.fingerprint(0) < b.arg.fingerprint(0);
  });
  return out;
}

FormalSum merge_inversions(const FormalSum& s, int m) {
  int sign = (m - 1) % 2 == 0 ? 1 : -1;
  std::vector<SumTerm> reps;
  std::unordered_multimap<std::uint64_t, std::size_t> idx;
  for (auto& t : s.terms()) {
    std::uint64_t k = inversion_class_key(t.arg);
    bool placed = false;
    auto [lo, hi] = idx.equal_range(k);
    for (auto it = lo; it != hi && !placed; ++it) {
      SumTerm& r = reps[it->second];
      if (equivalent(r.arg, t.arg)) {
        r.coeff += t.coeff;
        placed = true;
      } else if (!t.arg.is_zero() && equivalent(r.arg, t.arg.inv())) {
        r.coeff += sign * t.coeff;
        placed = true;
      }
    }
    if (!placed) {
      idx.emplace(k, reps.size());
      reps.push_back(t);
    }
  }
  FormalSum out;
  for (auto& r : reps) out.add(r.coeff, r.arg);
  return out;
}

std::size_t count_distinct_up_to_inversion(const FormalSum& s) {
  std::vector<const RatFunc*> reps;
  std::unordered_multimap<std::uint64_t, std::size_t> idx;
  for (auto& t : s.terms()) {
    if (t.arg.is_constant()) continue;
    std::uint64_t k = inversion_class_key(t.arg);
    bool found = false;
    auto [lo, hi] = idx.equal_range(k);
    for (auto it = lo; it != hi && !found; ++it) found = equivalent_up_to_inversion(*reps[it->second], t.arg);
    if (!found) {
      idx.emplace(k, reps.size());
      reps.push_back(&t.arg);
    }
  }
  return reps.size();
}

std::size_t count_nonconstant(const FormalSum& s) {
  std::size_t n = 0;
  for (auto& t : s.terms())
    if (!t.arg.is_constant()) ++n;
  return n;
}

namespace {

std::uint64_t images_key(const std::vector<RatFunc>& im) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto& f : im) h = mix64(h ^ f.fingerprint(0));
  return h;
}

}  // namespace

Automorphism::Automorphism(std::vector<VarId> vars, std::vector<RatFunc> images)
    : vars_(std::move(vars)), images_(std::move(images)) {
  if (vars_.size() != images_.size()) throw std::invalid_argument("automorphism: arity mismatch");
  key_ = images_key(images_);
}

Automorphism Automorphism::identity(std::vector<VarId> vars) {
  std::vector<RatFunc> im;
  for (VarId v : vars) im.push_back(RatFunc::variable(v));
  return Automorphism(std::move(vars), std::move(im));
}

RatFunc Automorphism::apply(const RatFunc& f) const {
  Binding b;
  for (std::size_t i = 0; i < vars_.size(); ++i) b.emplace(vars_[i], images_[i]);
  return substitute(f, b);
}

bool Automorphism::operator==(const Automorphism& o) const {
  if (vars_ != o.vars_) return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (!equivalent(images_[i], o.images_[i])) return false;
  return true;
}

Automorphism compose(const Automorphism& s, const Automorphism& t) {
  if (s.vars() != t.vars()) throw std::invalid_argument("compose: different variable sets");
  std::vector<RatFunc> im;
  for (auto& f : t.images()) im.push_back(s.apply(f).reduced());
  return Automorphism(s.vars(), std::move(im));
}

FormalSum map_arguments(const FormalSum& s, const Automorphism& a) {
  FormalSum out;
  for (auto& t : s.terms()) out.add(t.coeff, a.apply(t.arg));
  return out;
}

std::vector<Automorphism> group_closure(const std::vector<Automorphism>& gens, std::size_t bound) {
  if (gens.empty()) throw std::invalid_argument("group_closure: no generators");
  std::vector<Automorphism> elems{Automorphism::identity(gens[0].vars())};
  std::unordered_multimap<std::uint64_t, std::size_t> idx{{elems[0].key(), 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto& g : gens) {
      Automorphism n = compose(g, elems[i]);
      bool seen = false;
      auto [lo, hi] = idx.equal_range(n.key());
      for (auto it = lo; it != hi && !seen; ++it) seen = elems[it->second] == n;
      if (seen) continue;
      if (elems.size() >= bound) throw ClosureTooLarge("group closure exceeds bound " + std::to_string(bound));
      idx.emplace(n.key(), elems.size());
      elems.push_back(std::move(n));
    }
  }
  return elems;
}

std::vector<RatFunc> orbit(const RatFunc& x, const std::vector<Automorphism>& group, bool up_to_inversion) {
  std::vector<RatFunc> out;
  std::unordered_multimap<std::uint64_t, std::size_t> idx;
  for (auto& g : group) {
    RatFunc y = g.apply(x).reduced();
    std::uint64_t k = up_to_inversion ? inversion_class_key(y) : y.fingerprint(0);
    bool seen = false;
    auto [lo, hi] = idx.equal_range(k);
    for (auto it = lo; it != hi && !seen; ++it)
      seen = up_to_inversion ? equivalent_up_to_inversion(out[it->second], y) : equivalent(out[it->second], y);
    if (seen) continue;
    idx.emplace(k, out.size());
    out.push_back(std::move(y));
  }
  return out;
}

Specialization specialize(const FormalSum& s, const std::map<VarId, Rational>& point, bool allow_degenerate) {
  Specialization r;
  for (auto& t : s.terms()) {
    bool constant = t.arg.num().is_constant() && t.arg.den().is_constant();
    auto e = eval(t.arg, point);
    std::string reason;
    if (e.status == Eval<Rational>::Pole)
      reason = "pole";
    else if (e.status == Eval<Rational>::Indeterminate)
      reason = "indeterminate";
    else if (!constant && e.value == 0)
      reason = "zero";
    else if (!constant && e.value == 1)
      reason = "one";
    if (!reason.empty()) {
      r.dropped.push_back({t.coeff, t.arg, reason});
      if (!allow_degenerate) r.degenerate = true;
      continue;
    }
    r.sum.add(t.coeff, RatFunc(e.value));
  }
  return r;
}

nlohmann::json to_json(const FormalSum& s) {
  nlohmann::json j = nlohmann::json::array();
  for (auto& t : s.terms()) j.push_back({{"coeff", t.coeff.get_str()}, {"arg", to_string(t.arg)}});
  return j;
}

FormalSum formal_sum_from_json(const nlohmann::json& j) {
  FormalSum s;
  for (auto& e : j) s.add(parse_rational(e.at("coeff").get<std::string>()), parse(e.at("arg").get<std::string>()));
  return s;
}

}  // namespace polylog
