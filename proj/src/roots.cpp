#include "polylog/numeric.hpp"

#include <algorithm>
#include <numeric>

namespace polylog {

namespace {

// p(z) and p'(z) by Horner
void horner(const std::vector<BigComplex>& c, const BigComplex& z, BigComplex& p, BigComplex& dp) {
  mpfr_prec_t b = z.prec();
  p = BigComplex(b);
  dp = BigComplex(b);
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

std::vector<BigComplex> derivative(const std::vector<BigComplex>& c) {
  std::vector<BigComplex> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
  return d;
}

BigReal rel_residual(const std::vector<BigComplex>& c, const BigComplex& z) {
  mpfr_prec_t b = z.prec();
  BigComplex p(b), dp(b);
  horner(c, z, p, dp);
  if (p.is_zero()) return BigReal(0, b);
  BigReal scale(0, b), az = abs(z), zp(1, b);
  for (auto& ci : c) {
    scale += abs(ci) * zp;
    zp = zp * az;
  }
  return abs(p) / scale;
}

}  // namespace

std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs, const PrecisionPolicy& pol) {
  if (coeffs.size() < 2) throw std::invalid_argument("poly_roots: degree must be at least 1");
  if (coeffs.back().is_zero()) throw std::invalid_argument("poly_roots: leading coefficient is zero");
  const mpfr_prec_t b = pol.bits();
  const mpfr_prec_t w = b + 64;
  const std::size_t d = coeffs.size() - 1;

  std::vector<BigComplex> c;
  BigComplex lead = coeffs.back().with_prec(w);
  for (auto& x : coeffs) c.push_back(x.with_prec(w) / lead);

  std::vector<BigComplex> z;
  if (d == 1) {
    z.push_back(-c[0]);
  } else {
    // radius from the Fujiwara bound
    BigReal r(0, w);
    for (std::size_t i = 0; i < d; ++i) {
      BigReal a = abs(c[i]);
      if (a.is_zero()) continue;
      BigReal t(w);
      mpfr_rootn_ui(t.raw(), a.raw(), static_cast<unsigned long>(d - i), MPFR_RNDN);
      if (t > r) r = t;
    }
    if (r.is_zero()) r = BigReal(1, w);
    BigReal twopi = pi(w) * 2;
    for (std::size_t k = 0; k < d; ++k) {
      BigReal ang = twopi * static_cast<long>(k) / static_cast<long>(d) + BigReal(Rational(2, 5), w);
      BigReal rad = r * BigReal(Rational(static_cast<long>(100 + k), 100), w);
      z.push_back({rad * cos(ang), rad * sin(ang)});
    }
    BigReal eps = pow(BigReal(2, w), -static_cast<long>(w - 16));
    const int cap = 400 + 40 * static_cast<int>(d);
    BigComplex p(w), dp(w);
    for (int it = 0; it < cap; ++it) {
      BigReal maxstep(0, w);
      for (std::size_t k = 0; k < d; ++k) {
        horner(c, z[k], p, dp);
        if (p.is_zero()) continue;
        BigComplex ratio = p / dp;
        BigComplex s(w);
        for (std::size_t j = 0; j < d; ++j)
          if (j != k) {
            BigComplex diff = z[k] - z[j];
            if (!diff.is_zero()) s += inv(diff);
          }
        BigComplex step = ratio / (BigComplex::real(BigReal(1, w)) - ratio * s);
        z[k] -= step;
        BigReal rel = abs(step) / (abs(z[k]) + BigReal(1, w));
        if (rel > maxstep) maxstep = rel;
      }
      if (maxstep < eps) break;
    }
  }

  // clusters at 10^(-P/2)
  BigReal ctol = ten_pow(-pol.digits / 2, w);
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      BigReal scale = std::max(BigReal(1, w), abs(z[i]));
      if (abs(z[i] - z[j]) < ctol * scale) parent[find(i)] = find(j);
    }
  std::map<std::size_t, std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < d; ++i) clusters[find(i)].push_back(i);

  std::vector<BigComplex> out;
  BigReal restol = ten_pow(-(pol.digits - pol.guard), w);
  for (auto& [root, members] : clusters) {
    std::size_t k = members.size();
    BigComplex x(w);
    for (std::size_t i : members) x += z[i];
    x = x / static_cast<long>(k);
    // the root is simple for p^(k-1)
    std::vector<BigComplex> q = c;
    for (std::size_t i = 1; i < k; ++i) q = derivative(q);
    BigComplex p(w), dp(w);
    for (int it = 0; it < 60; ++it) {
      horner(q, x, p, dp);
      if (p.is_zero() || dp.is_zero()) break;
      BigComplex step = p / dp;
      x -= step;
      if (abs(step) < pow(BigReal(2, w), -static_cast<long>(w - 8)) * (abs(x) + BigReal(1, w))) break;
    }
    BigReal res = rel_residual(c, x);
    if (!(res < restol) && !(rel_residual(q, x) < restol))
      throw ConvergenceError("poly_roots: residual " + res.str(5) + " at root " + x.str(15) + " (cluster size " +
                             std::to_string(k) + ")");
    for (std::size_t i = 0; i < k; ++i) out.push_back(x.with_prec(b));
  }
  std::sort(out.begin(), out.end(), [](const BigComplex& a, const BigComplex& b) {
    if (!(a.re == b.re)) return a.re < b.re;
    return a.im < b.im;
  });
  return out;
}

}  // namespace polylog
