#include "polylog/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace polylog {

namespace {

constexpr int kMaxResamples = 64;
constexpr mpfr_prec_t kExtraBits = 32;

nlohmann::json point_json(const std::map<VarId, BigComplex>& pt) {
  nlohmann::json j = nlohmann::json::object();
  for (auto& [v, z] : pt) j[var_name(v)] = z.str(25);
  return j;
}

// runs body(k) for k < n on up to jobs threads; the first exception is rethrown
template <class F>
void parallel_for(int n, int jobs, F body) {
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex mu;
  auto worker = [&] {
    for (int k; (k = next.fetch_add(1)) < n;) {
      try {
        body(k);
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
}

BigReal cl_proj(int m, const ProjectiveComplex& z, const PrecisionPolicy& pol) { return cl_m(m, z, pol); }

}  // namespace

BigComplex sample_annulus(Rng& rng, mpfr_prec_t bits) {
  for (;;) {
    double r = 0.2 * std::pow(25.0, rng.uniform());
    double a = 2 * M_PI * rng.uniform();
    double x = r * std::cos(a), y = r * std::sin(a);
    if (std::hypot(x - 1, y) < 0.1) continue;
    return BigComplex::from_double(x, y, bits);
  }
}

void NumericVerdict::record(const BigReal& value, nlohmann::json where) {
  ++points;
  BigReal a = abs(value);
  if (!worst || a > max_abs) {
    max_abs = a;
    where["value"] = value.str(12);
    worst = std::move(where);
  }
  if (!(a < tolerance)) pass = false;
}

nlohmann::json NumericVerdict::to_json() const {
  nlohmann::json j{{"status", pass ? "pass" : "fail"},
                   {"points", points},
                   {"resamples", resamples},
                   {"max_abs", max_abs.str(6)},
                   {"tolerance", tolerance.str(3)}};
  if (worst) j["worst"] = *worst;
  return j;
}

NumericVerdict verify_numeric_at(const EquationSpec& eq, const std::map<VarId, BigComplex>& point,
                                 const PrecisionPolicy& pol) {
  NumericVerdict v;
  v.tolerance = pol.tolerance();
  ComplexEvaluator ev(point, pol.bits() + kExtraBits);
  auto val = cl_eval(eq.weight, eq.sum, ev);
  if (!val) throw DomainError("verify_numeric_at: indeterminate argument at the given point");
  v.record(*val, {{"point", point_json(point)}});
  return v;
}

NumericVerdict verify_numeric(const EquationSpec& eq, int points, const PrecisionPolicy& pol, std::uint64_t seed,
                              int jobs) {
  if (points < 1) throw std::invalid_argument("verify_numeric: points must be positive");
  std::vector<VarId> vars = eq.sum.variables();
  std::sort(vars.begin(), vars.end(), name_less);
  const mpfr_prec_t wb = pol.bits() + kExtraBits;
  struct Sample {
    std::map<VarId, BigComplex> point;
    BigReal value{64};
    std::size_t resamples = 0;
  };
  std::vector<Sample> out(static_cast<std::size_t>(points));
  parallel_for(points, jobs, [&](int k) {
    Rng rng = Rng(seed).split(static_cast<std::uint64_t>(k));
    Sample& s = out[static_cast<std::size_t>(k)];
    for (int attempt = 0;; ++attempt) {
      if (attempt > kMaxResamples)
        throw DomainError("verify_numeric: persistent degeneracy for " + eq.name);
      s.point.clear();
      for (VarId x : vars) s.point.emplace(x, sample_annulus(rng, wb));
      ComplexEvaluator ev(s.point, wb);
      // every argument must be a finite point outside {0, 1}
      bool degenerate = false;
      for (auto& t : eq.sum.terms()) {
        if (t.arg.is_constant()) continue;
        auto r = ev.eval(t.arg);
        if (r.status != ComplexEvaluator::Value || r.value.infinite || r.value.value.is_zero()) {
          degenerate = true;
          break;
        }
      }
      std::optional<BigReal> val;
      if (!degenerate) val = cl_eval(eq.weight, eq.sum, ev);
      if (val) {
        s.value = *val;
        return;
      }
      ++s.resamples;
    }
  });
  NumericVerdict v;
  v.tolerance = pol.tolerance();
  for (int k = 0; k < points; ++k) {
    auto& s = out[static_cast<std::size_t>(k)];
    v.resamples += s.resamples;
    v.record(s.value, {{"sample", k}, {"point", point_json(s.point)}});
  }
  return v;
}

int rational_degree(const RatFunc& phi) {
  auto vs = phi.variables();
  if (vs.size() != 1) throw std::invalid_argument("rational_degree: expected a function of one variable");
  RatFunc r = phi.reduced();
  return static_cast<int>(std::max(r.num().degree(vs[0]), r.den().degree(vs[0])));
}

ProjectiveComplex apply_phi(const RatFunc& phi, const ProjectiveComplex& z, mpfr_prec_t bits) {
  auto vs = phi.variables();
  if (vs.size() != 1) throw std::invalid_argument("apply_phi: expected a function of one variable");
  RatFunc r = phi.reduced();
  VarId x = vs[0];
  if (z.infinite) {
    unsigned dn = r.num().degree(x), dd = r.den().degree(x);
    if (dn > dd) return ProjectiveComplex::infinity(bits);
    if (dn < dd) return ProjectiveComplex(BigComplex(bits));
    Rational ln = r.num().coefficients_in(x).rbegin()->second.constant_value();
    Rational ld = r.den().coefficients_in(x).rbegin()->second.constant_value();
    return ProjectiveComplex(BigComplex(ln / ld, 0, bits));
  }
  ComplexEvaluator ev({{x, z.value}}, bits);
  auto res = ev.eval(r);
  if (res.status == ComplexEvaluator::Indeterminate) throw DomainError("apply_phi: indeterminate");
  return res.value;
}

std::vector<ProjectiveComplex> preimages(const RatFunc& phi, const ProjectiveComplex& b, const PrecisionPolicy& pol) {
  auto vs = phi.variables();
  if (vs.size() != 1) throw std::invalid_argument("preimages: expected a function of one variable");
  RatFunc r = phi.reduced();
  VarId x = vs[0];
  const mpfr_prec_t w = pol.bits() + kExtraBits;
  const int deg = rational_degree(r);
  ComplexEvaluator ev({}, w);
  std::vector<BigComplex> c;
  if (b.infinite) {
    c = coefficients_at(r.den(), x, ev);
  } else {
    auto n = coefficients_at(r.num(), x, ev), d = coefficients_at(r.den(), x, ev);
    c.assign(std::max(n.size(), d.size()), BigComplex(w));
    for (std::size_t i = 0; i < n.size(); ++i) c[i] += n[i];
    BigComplex bw = b.value.with_prec(w);
    for (std::size_t i = 0; i < d.size(); ++i) c[i] -= d[i] * bw;
  }
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  std::vector<ProjectiveComplex> out;
  if (c.size() >= 2)
    for (auto& z : poly_roots(c, pol)) out.emplace_back(z.with_prec(w));
  int finite = c.empty() ? 0 : static_cast<int>(c.size()) - 1;
  for (int i = finite; i < deg; ++i) out.push_back(ProjectiveComplex::infinity(w));
  return out;
}

NumericVerdict verify_dilog_general(const RatFunc& phi, const ProjectiveComplex& alpha, const ProjectiveComplex& b,
                                    const ProjectiveComplex& c, const ProjectiveComplex& d,
                                    const PrecisionPolicy& pol) {
  const mpfr_prec_t w = pol.bits() + kExtraBits;
  int deg = rational_degree(phi);
  auto pb = preimages(phi, b, pol), pc = preimages(phi, c, pol), pd = preimages(phi, d, pol);
  BigReal lhs(0, w);
  for (auto& be : pb)
    for (auto& ga : pc)
      for (auto& de : pd) lhs += cl_proj(2, cross_ratio(alpha, be, ga, de), pol);
  ProjectiveComplex A = apply_phi(phi, alpha, w);
  BigReal rhs = cl_proj(2, cross_ratio(A, b, c, d), pol) * static_cast<long>(deg);
  NumericVerdict v;
  v.tolerance = pol.tolerance();
  v.record(lhs - rhs, {{"phi", to_string(phi)}, {"alpha", alpha.str(20)}, {"B", b.str(20)}, {"C", c.str(20)},
                       {"D", d.str(20)}});
  return v;
}

NumericVerdict verify_trilog_theorem(const RatFunc& phi, const std::array<ProjectiveComplex, 2>& a,
                                     const std::array<ProjectiveComplex, 2>& b,
                                     const std::array<ProjectiveComplex, 2>& c,
                                     const std::array<ProjectiveComplex, 2>& d, const PrecisionPolicy& pol) {
  const mpfr_prec_t w = pol.bits() + kExtraBits;
  long deg = rational_degree(phi);
  std::array<std::vector<ProjectiveComplex>, 2> pa, pb, pc, pd;
  for (int i = 0; i < 2; ++i) {
    pa[i] = preimages(phi, a[i], pol);
    pb[i] = preimages(phi, b[i], pol);
    pc[i] = preimages(phi, c[i], pol);
    pd[i] = preimages(phi, d[i], pol);
  }
  BigReal total(0, w);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          BigReal s(0, w);
          for (auto& al : pa[i])
            for (auto& be : pb[j])
              for (auto& ga : pc[k])
                for (auto& de : pd[l]) s += cl_proj(3, cross_ratio(al, be, ga, de), pol);
          s -= cl_proj(3, cross_ratio(a[i], b[j], c[k], d[l]), pol) * deg;
          if ((i + j + k + l) % 2) total -= s;
          else total += s;
        }
  NumericVerdict v;
  v.tolerance = pol.tolerance();
  v.record(total, {{"phi", to_string(phi)}});
  return v;
}

namespace {

BigReal wojtkowiak_lhs(const RatFunc& phi, const std::vector<ProjectiveComplex>& al,
                       const std::vector<ProjectiveComplex>& be, const std::vector<ProjectiveComplex>& ga,
                       const ProjectiveComplex& A, const ProjectiveComplex& B, const ProjectiveComplex& C,
                       const ProjectiveComplex& x, const PrecisionPolicy& pol) {
  const mpfr_prec_t w = pol.bits() + kExtraBits;
  BigReal s = cl_proj(3, cross_ratio(apply_phi(phi, x, w), C, B, A), pol);
  const std::size_t n = al.size();
  auto term = [&](const ProjectiveComplex& p, const ProjectiveComplex& q, const ProjectiveComplex& r) {
    return cl_proj(3, cross_ratio(x, p, q, r), pol);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        s -= term(ga[i], be[j], al[k]);
        s -= term(al[i], al[j], ga[k]);
        s -= term(be[i], be[j], ga[k]);
        s += term(al[i], al[j], be[k]);
        s += term(be[i], be[j], al[k]);
      }
  return s;
}

}  // namespace

NumericVerdict verify_wojtkowiak(const RatFunc& phi, const ProjectiveComplex& a, const ProjectiveComplex& b,
                                 const ProjectiveComplex& c, const BigComplex& x1, const BigComplex& x2,
                                 const PrecisionPolicy& pol) {
  auto al = preimages(phi, a, pol), be = preimages(phi, b, pol), ga = preimages(phi, c, pol);
  BigReal d = wojtkowiak_lhs(phi, al, be, ga, a, b, c, ProjectiveComplex(x1), pol) -
              wojtkowiak_lhs(phi, al, be, ga, a, b, c, ProjectiveComplex(x2), pol);
  NumericVerdict v;
  v.tolerance = pol.tolerance();
  v.record(d, {{"phi", to_string(phi)}, {"A", a.str(20)}, {"B", b.str(20)}, {"C", c.str(20)}, {"x1", x1.str(20)},
               {"x2", x2.str(20)}});
  return v;
}

NumericVerdict verify_fourlog_numeric(int n, int points, const PrecisionPolicy& pol, std::uint64_t seed,
                                      std::optional<Rational> xy_coeff, int jobs) {
  FourlogTemplate ft = fourlog(n, xy_coeff);
  const mpfr_prec_t w = pol.bits() + kExtraBits;
  std::vector<Rational> base = ft.phi_coefficients();
  struct Sample {
    BigComplex t{64}, u{64};
    BigReal value{64};
    std::size_t resamples = 0;
  };
  std::vector<Sample> out(static_cast<std::size_t>(points));
  parallel_for(points, jobs, [&](int k) {
    Rng rng = Rng(seed).split(static_cast<std::uint64_t>(k));
    Sample& s = out[static_cast<std::size_t>(k)];
    for (int attempt = 0;; ++attempt) {
      if (attempt > kMaxResamples) throw DomainError("verify_fourlog_numeric: persistent degeneracy");
      s.t = sample_annulus(rng, w);
      s.u = sample_annulus(rng, w);
      std::map<VarId, BigComplex> pt;
      for (int side = 0; side < 2; ++side) {
        std::vector<BigComplex> c;
        for (auto& q : base) c.push_back(BigComplex(q, 0, w));
        c[0] -= side ? s.u : s.t;
        auto roots = poly_roots(c, pol);
        const auto& names = side ? ft.y_roots : ft.x_roots;
        for (int i = 0; i < n; ++i) pt.emplace(var(names[static_cast<std::size_t>(i)]), roots[static_cast<std::size_t>(i)]);
      }
      ComplexEvaluator ev(pt, w);
      auto val = cl_eval(4, ft.spec.sum, ev);
      if (val) {
        s.value = *val;
        return;
      }
      ++s.resamples;
    }
  });
  NumericVerdict v;
  v.tolerance = pol.tolerance();
  for (int k = 0; k < points; ++k) {
    auto& s = out[static_cast<std::size_t>(k)];
    v.resamples += s.resamples;
    v.record(s.value, {{"sample", k}, {"n", n}, {"t", s.t.str(25)}, {"u", s.u.str(25)}});
  }
  return v;
}

}  // namespace polylog
