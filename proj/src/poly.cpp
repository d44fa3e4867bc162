#include "polylog/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace polylog {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & kMod);
  std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kMod) r -= kMod;
  return r;
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  a %= kMod;
  while (e) {
    if (e & 1) r = mod_mul(r, a);
    a = mod_mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kMod - 2); }

std::uint64_t mod_of(const Rational& q) {
  std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), kMod);
  std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kMod);
  if (d == 0) return kBadMod;
  return mod_mul(n, mod_inv(d));
}

namespace {

struct VarTable {
  std::mutex mu;
  std::deque<std::string> names;
  std::unordered_map<std::string, VarId> ids;
};

VarTable& table() {
  static VarTable t;
  return t;
}

}  // namespace

VarId var(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  std::string s(name);
  auto it = t.ids.find(s);
  if (it != t.ids.end()) return it->second;
  VarId id = static_cast<VarId>(t.names.size());
  t.names.push_back(s);
  t.ids.emplace(s, id);
  return id;
}

const std::string& var_name(VarId id) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  return t.names.at(id);
}

bool name_less(VarId a, VarId b) { return var_name(a) < var_name(b); }

std::uint64_t var_point(VarId v, std::uint64_t salt) {
  std::uint64_t h = mix64(fnv1a(var_name(v)) ^ mix64(salt + 0x51ed2701a5c3b4e9ULL));
  return h % (kMod - 2) + 2;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto& [v, k] : e) d += k;
  return d;
}

unsigned Monomial::degree(VarId v) const {
  for (auto& [w, k] : e)
    if (w == v) return k;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e.reserve(e.size() + o.e.size());
  std::size_t i = 0, j = 0;
  while (i < e.size() || j < o.e.size()) {
    if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first))
      r.e.push_back(e[i++]);
    else if (i == e.size() || o.e[j].first < e[i].first)
      r.e.push_back(o.e[j++]);
    else {
      r.e.emplace_back(e[i].first, e[i].second + o.e[j].second);
      ++i, ++j;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (auto& [v, k] : e)
    if (o.degree(v) < k) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (auto& [v, k] : e) {
    unsigned d = o.degree(v);
    if (k > d) r.e.emplace_back(v, k - d);
  }
  return r;
}

namespace {

template <class Less>
int lex(const std::vector<std::pair<VarId, std::uint32_t>>& a,
        const std::vector<std::pair<VarId, std::uint32_t>>& b, Less less) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return less(a[i].first, b[i].first) ? 1 : -1;
    if (a[i].second != b[i].second) return a[i].second > b[i].second ? 1 : -1;
  }
  if (a.size() != b.size()) return a.size() > b.size() ? 1 : -1;
  return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  return lex(a.e, b.e, [](VarId x, VarId y) { return x < y; });
}

int compare_by_name(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  auto sa = a.e, sb = b.e;
  auto by = [](auto& x, auto& y) { return name_less(x.first, y.first); };
  std::sort(sa.begin(), sa.end(), by);
  std::sort(sb.begin(), sb.end(), by);
  return lex(sa, sb, name_less);
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) t_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::variable(VarId v) {
  MultiPoly p;
  p.t_.push_back({Monomial{{{v, 1}}}, Rational(1)});
  return p;
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.t_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  MultiPoly p;
  p.t_ = std::move(terms);
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return compare(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (out.back().c == 0) out.pop_back();
  }
  // a zero sum followed by equal monomials is impossible after sorting
  t_ = std::move(out);
}

Rational MultiPoly::constant_value() const {
  if (t_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("not a constant polynomial");
  return t_[0].c;
}

const Term& MultiPoly::lead_by_name() const {
  if (t_.empty()) throw std::logic_error("lead of zero polynomial");
  const Term* best = &t_[0];
  for (auto& t : t_)
    if (compare_by_name(t.m, best->m) > 0) best = &t;
  return *best;
}

unsigned MultiPoly::degree() const {
  unsigned d = 0;
  for (auto& t : t_) d = std::max(d, t.m.degree());
  return d;
}

unsigned MultiPoly::degree(VarId v) const {
  unsigned d = 0;
  for (auto& t : t_) d = std::max(d, t.m.degree(v));
  return d;
}

std::vector<VarId> MultiPoly::variables() const {
  std::vector<VarId> vs;
  for (auto& t : t_)
    for (auto& [v, k] : t.m.e) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r;
  r.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    int c = i == t_.size() ? -1 : j == o.t_.size() ? 1 : compare(t_[i].m, o.t_[j].m);
    if (c > 0)
      r.t_.push_back(t_[i++]);
    else if (c < 0)
      r.t_.push_back(o.t_[j++]);
    else {
      Rational s = t_[i].c + o.t_[j].c;
      if (s != 0) r.t_.push_back({t_[i].m, s});
      ++i, ++j;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const Rational& c) const {
  if (c == 0) return {};
  MultiPoly r = *this;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_constant()) return *this * o.t_[0].c;
  if (is_constant()) return o * t_[0].c;
  std::vector<Term> acc;
  acc.reserve(t_.size() * o.t_.size());
  for (auto& a : t_)
    for (auto& b : o.t_) acc.push_back({a.m * b.m, a.c * b.c});
  return from_terms(std::move(acc));
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

MultiPoly MultiPoly::derivative(VarId v) const {
  std::vector<Term> out;
  for (auto& t : t_) {
    unsigned k = t.m.degree(v);
    if (!k) continue;
    Monomial m;
    for (auto& [w, e] : t.m.e)
      if (w != v)
        m.e.emplace_back(w, e);
      else if (e > 1)
        m.e.emplace_back(w, e - 1);
    out.push_back({m, t.c * k});
  }
  return from_terms(std::move(out));
}

std::map<unsigned, MultiPoly> MultiPoly::coefficients_in(VarId v) const {
  std::map<unsigned, std::vector<Term>> parts;
  for (auto& t : t_) {
    Monomial m;
    unsigned k = 0;
    for (auto& [w, e] : t.m.e)
      if (w == v)
        k = e;
      else
        m.e.emplace_back(w, e);
    parts[k].push_back({m, t.c});
  }
  std::map<unsigned, MultiPoly> out;
  for (auto& [k, ts] : parts) out[k] = from_terms(std::move(ts));
  return out;
}

MultiPoly MultiPoly::from_coefficients(VarId v, const std::map<unsigned, MultiPoly>& c) {
  std::vector<Term> out;
  for (auto& [k, p] : c)
    for (auto& t : p.terms()) {
      Monomial m = t.m;
      if (k) m = m * Monomial{{{v, k}}};
      out.push_back({m, t.c});
    }
  return from_terms(std::move(out));
}

bool MultiPoly::divides_into(const MultiPoly& o, MultiPoly* q) const {
  // does o divide *this
  if (o.is_zero()) throw DomainError("division by zero polynomial");
  if (is_zero()) {
    if (q) *q = MultiPoly();
    return true;
  }
  if (o.is_constant()) {
    if (q) *q = *this * (Rational(1) / o.t_[0].c);
    return true;
  }
  MultiPoly r = *this;
  std::vector<Term> qt;
  const Term& lo = o.t_[0];
  while (!r.is_zero()) {
    const Term& lr = r.t_[0];
    if (!lo.m.divides(lr.m)) return false;
    Term t{lr.m / lo.m, lr.c / lo.c};
    qt.push_back(t);
    r = r - o * MultiPoly::monomial(t.m, t.c);
  }
  if (q) *q = from_terms(std::move(qt));
  return true;
}

MultiPoly MultiPoly::divexact(const MultiPoly& o) const {
  MultiPoly q;
  if (!divides_into(o, &q)) throw std::logic_error("divexact: not divisible");
  return q;
}

Rational MultiPoly::content() const {
  if (t_.empty()) return 0;
  Integer g = 0, l = 1;
  for (auto& t : t_) {
    g = gcd(g, Integer(t.c.get_num()));
    l = lcm(l, Integer(t.c.get_den()));
  }
  return make_rational(abs(g), l);
}

std::uint64_t MultiPoly::eval_mod(std::uint64_t salt) const {
  std::map<VarId, std::uint64_t> pts;
  std::uint64_t acc = 0;
  for (auto& t : t_) {
    std::uint64_t c = mod_of(t.c);
    if (c == kBadMod) return kBadMod;
    for (auto& [v, k] : t.m.e) {
      auto it = pts.find(v);
      if (it == pts.end()) it = pts.emplace(v, var_point(v, salt)).first;
      c = mod_mul(c, mod_pow(it->second, k));
    }
    acc += c;
    if (acc >= kMod) acc -= kMod;
  }
  return acc;
}

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  std::vector<const Term*> ts;
  for (auto& t : t_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](const Term* a, const Term* b) { return compare_by_name(a->m, b->m) > 0; });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : ts) {
    Rational c = t->c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    auto vars = t->m.e;
    std::sort(vars.begin(), vars.end(), [](auto& x, auto& y) { return name_less(x.first, y.first); });
    bool wrote = false;
    if (c != 1 || vars.empty()) {
      os << c.get_str();
      wrote = true;
    }
    for (auto& [v, k] : vars) {
      if (wrote) os << "*";
      os << var_name(v);
      if (k > 1) os << "^" << k;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace polylog
