// Multivariate gcd over Q by recursive primitive remainder sequences.

#include "polylog/poly.hpp"

namespace polylog {

namespace {

MultiPoly normalized(const MultiPoly& g) {
  if (g.is_zero()) return g;
  Rational c = g.content();
  if (g.lead_by_name().c < 0) c = -c;
  return g * (Rational(1) / c);
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_in(const MultiPoly& a, VarId v) {
  MultiPoly g;
  for (auto& [k, c] : a.coefficients_in(v)) {
    g = gcd_rec(g, c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

MultiPoly lead_in(const MultiPoly& a, VarId v, unsigned* deg) {
  auto cs = a.coefficients_in(v);
  *deg = cs.rbegin()->first;
  return cs.rbegin()->second;
}

MultiPoly prem(MultiPoly r, const MultiPoly& b, VarId v) {
  unsigned db;
  MultiPoly lb = lead_in(b, v, &db);
  while (!r.is_zero()) {
    unsigned dr;
    MultiPoly lr = lead_in(r, v, &dr);
    if (dr < db) break;
    Monomial shift;
    if (dr > db) shift.e.emplace_back(v, dr - db);
    r = r * lb - lr * MultiPoly::monomial(shift, 1) * b;
    r = normalized(r);
  }
  return r;
}

VarId first_var(const MultiPoly& a, const MultiPoly& b) {
  auto va = a.variables(), vb = b.variables();
  VarId v = ~VarId(0);
  if (!va.empty()) v = std::min(v, va.front());
  if (!vb.empty()) v = std::min(v, vb.front());
  return v;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  VarId v = first_var(a, b);
  unsigned da = a.degree(v), db = b.degree(v);
  if (da == 0) return gcd_rec(a, content_in(b, v));
  if (db == 0) return gcd_rec(content_in(a, v), b);
  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly c = gcd_rec(ca, cb);
  MultiPoly pa = normalized(a.divexact(ca)), pb = normalized(b.divexact(cb));
  if (da < db) std::swap(pa, pb);
  for (;;) {
    MultiPoly r = prem(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) return normalized(c);
    pa = pb;
    pb = normalized(r.divexact(content_in(r, v)));
  }
  MultiPoly g = normalized(pb.divexact(content_in(pb, v)));
  return normalized(c * g);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_rec(a, b); }

}  // namespace polylog
