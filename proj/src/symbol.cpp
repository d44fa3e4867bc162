#include "polylog/symbol.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace polylog {

PrimeVector& PrimeVector::add(const PrimeVector& o, const Rational& c) {
  for (auto& [k, v] : o.coords) {
    Rational& slot = coords[k];
    slot += c * v;
    if (slot == 0) coords.erase(k);
  }
  return *this;
}

std::string PrimeVector::str() const {
  std::string s = "{";
  for (auto& [k, v] : coords) {
    if (s.size() > 1) s += ", ";
    s += k + ":" + v.get_str();
  }
  return s + "}";
}

PrimeVector log_vector(const Rational& q) {
  if (q == 0) throw DomainError("log_vector of zero");
  PrimeVector v;
  for (auto& [p, e] : factor_rational(q).factors) v.coords[p.get_str()] = Rational(e);
  return v;
}

DualFunctional DualFunctional::hashed(std::uint64_t seed, long height) {
  DualFunctional f;
  f.hashed_ = true;
  f.seed_ = seed;
  f.height_ = height;
  return f;
}

Rational DualFunctional::value(const std::string& name) const {
  if (hashed_) {
    std::uint64_t h = mix64(seed_ ^ fnv1a(name));
    return Rational(static_cast<long>(h % static_cast<std::uint64_t>(2 * height_ + 1)) - height_);
  }
  auto it = values_.find(name);
  return it == values_.end() ? Rational(0) : it->second;
}

Rational DualFunctional::operator()(const PrimeVector& v) const {
  Rational acc = 0;
  for (auto& [k, c] : v.coords) acc += c * value(k);
  return acc;
}

nlohmann::json DualFunctional::to_json() const {
  if (hashed_) return {{"seed", seed_}, {"height", height_}};
  nlohmann::json j = nlohmann::json::object();
  for (auto& [k, v] : values_) j[k] = v.get_str();
  return j;
}

namespace {

Rational power(const Rational& a, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= a;
  return r;
}

void require_constant_arg(const SumTerm& t, Rational& x) {
  if (!t.arg.num().is_constant() || !t.arg.den().is_constant())
    throw DomainError("beta_pairing: non-constant argument " + to_string(t.arg));
  x = t.arg.is_zero() ? Rational(0) : t.arg.constant_value();
  if (x == 0 || x == 1) throw DomainError("beta_pairing: argument " + x.get_str() + " has no symbol");
}

}  // namespace

Rational beta_pairing(const FormalSum& s, int m, const DualFunctional& theta, const DualFunctional& phi,
                      const DualFunctional& psi) {
  if (m < 2) throw std::invalid_argument("beta_pairing: weight must be at least 2");
  Rational acc = 0;
  for (auto& t : s.terms()) {
    Rational x;
    require_constant_arg(t, x);
    PrimeVector u = log_vector(x), v = log_vector(1 - x);
    acc += t.coeff * power(theta(u), m - 2) * (phi(u) * psi(v) - phi(v) * psi(u));
  }
  return acc;
}

std::map<SymbolKey, Rational> beta_tensor(const FormalSum& s, int m) {
  if (m < 2 || m > 4) throw std::invalid_argument("beta_tensor: full expansion only for 2 <= m <= 4");
  std::map<SymbolKey, Rational> out;
  auto bump = [&](SymbolKey k, const Rational& c) {
    Rational& slot = out[k];
    slot += c;
    if (slot == 0) out.erase(k);
  };
  for (auto& t : s.terms()) {
    Rational x;
    require_constant_arg(t, x);
    PrimeVector u = log_vector(x), v = log_vector(1 - x);
    std::vector<std::pair<std::vector<std::string>, Rational>> sym{{{}, t.coeff}};
    for (int i = 0; i < m - 2; ++i) {
      std::vector<std::pair<std::vector<std::string>, Rational>> next;
      for (auto& [idx, c] : sym)
        for (auto& [p, e] : u.coords) {
          auto j = idx;
          j.push_back(p);
          std::sort(j.begin(), j.end());
          next.push_back({j, c * e});
        }
      sym = std::move(next);
    }
    for (auto& [idx, c] : sym)
      for (auto& [a, ea] : u.coords)
        for (auto& [b, eb] : v.coords) {
          if (a == b) continue;
          if (a < b)
            bump({idx, {a, b}}, c * ea * eb);
          else
            bump({idx, {b, a}}, -c * ea * eb);
        }
  }
  return out;
}

std::uint64_t functional_seed(std::uint64_t seed, int r, int k, int which) {
  std::uint64_t h = mix64(seed ^ 0x6b43a9b5f1e2d3c7ULL);
  h = mix64(h ^ static_cast<std::uint64_t>(r));
  h = mix64(h ^ static_cast<std::uint64_t>(k));
  return mix64(h ^ static_cast<std::uint64_t>(which));
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json j{{"status", pass ? "pass" : "fail"},
                   {"trials", trials},
                   {"functionals", functionals},
                   {"height", height},
                   {"seed", seed},
                   {"resamples", resamples}};
  if (witness) {
    nlohmann::json pt = nlohmann::json::object();
    for (auto& [k, v] : witness->point) pt[k] = v.get_str();
    j["witness"] = {{"trial", witness->trial},
                    {"functional", witness->functional},
                    {"point", pt},
                    {"theta_seed", witness->theta_seed},
                    {"phi_seed", witness->phi_seed},
                    {"psi_seed", witness->psi_seed},
                    {"value", witness->value.get_str()}};
  }
  return j;
}

namespace {

struct TrialResult {
  std::optional<Witness> witness;
  std::size_t resamples = 0;
};

using SparseLog = std::vector<std::pair<std::size_t, long>>;

Rational pair_with(const std::vector<Rational>& f, const SparseLog& v) {
  Rational acc = 0;
  for (auto& [i, e] : v) acc += f[i] * e;
  return acc;
}

TrialResult run_trial(const FormalSum& s, int m, const KernelOptions& opt, const std::vector<VarId>& vars, int r) {
  TrialResult res;
  RationalSampler sampler(opt.height, mix64(opt.seed ^ mix64(static_cast<std::uint64_t>(r) + 1)));
  std::map<VarId, Rational> point;
  Specialization sp;
  for (int attempt = 0;; ++attempt) {
    if (attempt > opt.max_resamples)
      throw SpecializationError("kernel_test: no non-degenerate specialization after " +
                                std::to_string(opt.max_resamples) + " resamples");
    for (VarId v : vars) point[v] = sampler.next();
    sp = specialize(s, point, false);
    if (!sp.degenerate) break;
    ++res.resamples;
  }
  std::vector<std::pair<Rational, Rational>> terms;  // coeff, x
  LogEncoder enc;
  for (auto& t : sp.sum.terms()) {
    Rational x = t.arg.is_zero() ? Rational(0) : t.arg.constant_value();
    if (x == 0 || x == 1) continue;
    terms.push_back({t.coeff, x});
    enc.add(x);
    enc.add(1 - x);
  }
  enc.finalize();
  std::vector<std::pair<SparseLog, SparseLog>> logs;
  for (auto& [c, x] : terms) logs.push_back({enc.encode(x), enc.encode(1 - x)});
  std::size_t nb = enc.base().size();
  for (int k = 0; k < opt.functionals; ++k) {
    std::uint64_t sd[3];
    std::vector<Rational> fv[3];
    for (int w = 0; w < 3; ++w) {
      sd[w] = functional_seed(opt.seed, r, k, w);
      DualFunctional f = DualFunctional::hashed(sd[w], opt.height);
      fv[w].reserve(nb);
      for (std::size_t i = 0; i < nb; ++i) fv[w].push_back(f.value(enc.name(i)));
    }
    Rational total = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      auto& [u, v] = logs[i];
      Rational th = power(pair_with(fv[0], u), m - 2);
      if (th == 0) continue;
      total += terms[i].first * th * (pair_with(fv[1], u) * pair_with(fv[2], v) - pair_with(fv[1], v) * pair_with(fv[2], u));
    }
    if (total != 0) {
      Witness w;
      w.trial = r;
      w.functional = k;
      for (auto& [v, q] : point) w.point[var_name(v)] = q;
      w.theta_seed = sd[0];
      w.phi_seed = sd[1];
      w.psi_seed = sd[2];
      w.value = total;
      res.witness = w;
      return res;
    }
  }
  return res;
}

}  // namespace

Verdict kernel_test(const FormalSum& s, int m, const KernelOptions& opt) {
  if (m < 2) throw std::invalid_argument("kernel_test: weight must be at least 2");
  if (opt.trials < 1 || opt.functionals < 1) throw std::invalid_argument("kernel_test: trials and functionals >= 1");
  std::vector<VarId> vars = s.variables();
  std::sort(vars.begin(), vars.end(), name_less);

  std::vector<TrialResult> results(static_cast<std::size_t>(opt.trials));
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (int r; (r = next.fetch_add(1)) < opt.trials;) {
      try {
        results[static_cast<std::size_t>(r)] = run_trial(s, m, opt, vars, r);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  int jobs = std::max(1, std::min(opt.jobs, opt.trials));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);

  Verdict v;
  v.trials = opt.trials;
  v.functionals = opt.functionals;
  v.height = opt.height;
  v.seed = opt.seed;
  v.pass = true;
  for (auto& r : results) {
    v.resamples += r.resamples;
    if (r.witness && v.pass) {
      v.pass = false;
      v.witness = r.witness;
    }
  }
  return v;
}

}  // namespace polylog
