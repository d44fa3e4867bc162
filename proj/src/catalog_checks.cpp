#include "polylog/catalog.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace polylog {

namespace {

RatFunc v(const std::string& name) { return RatFunc::variable(name); }

class ClassSet {
 public:
  // true if new
  bool insert(const RatFunc& x) {
    std::uint64_t k = inversion_class_key(x);
    auto [lo, hi] = idx_.equal_range(k);
    for (auto it = lo; it != hi; ++it)
      if (equivalent_up_to_inversion(reps_[it->second], x)) return false;
    idx_.emplace(k, reps_.size());
    reps_.push_back(x);
    return true;
  }
  bool contains(const RatFunc& x) const {
    auto [lo, hi] = idx_.equal_range(inversion_class_key(x));
    for (auto it = lo; it != hi; ++it)
      if (equivalent_up_to_inversion(reps_[it->second], x)) return true;
    return false;
  }
  const std::vector<RatFunc>& reps() const { return reps_; }

 private:
  std::vector<RatFunc> reps_;
  std::unordered_multimap<std::uint64_t, std::size_t> idx_;
};

nlohmann::json strs(const std::vector<RatFunc>& fs, std::size_t cap = 8) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < fs.size() && i < cap; ++i) j.push_back(to_string(fs[i]));
  return j;
}

std::vector<RatFunc> missing(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) {
  ClassSet sb;
  for (auto& x : b) sb.insert(x);
  std::vector<RatFunc> out;
  for (auto& x : a)
    if (!sb.contains(x)) out.push_back(x);
  return out;
}

RatFunc q_fn(const RatFunc& x, const RatFunc& y) { return (x - y) / (1 - x * y); }

// A_i, B_i in t1, t2, t3 with t4 = 1/(t1 t2 t3)
struct ABParam {
  std::vector<RatFunc> t, A, B;
  ABParam() {
    t = {v("t1"), v("t2"), v("t3")};
    t.push_back((t[0] * t[1] * t[2]).inv());
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      A.push_back((t[i] * t[3]).reduced());
      B.push_back(((1 - t[j].inv()) / (1 - t[i]) * (1 - t[k].inv()) / (1 - t[3])).reduced());
    }
  }
  Binding yz(bool y_is_a) const {
    Binding b;
    for (int i = 0; i < 3; ++i) {
      b[var("y" + std::to_string(i + 1))] = y_is_a ? A[i] : B[i];
      b[var("z" + std::to_string(i + 1))] = y_is_a ? B[i] : A[i];
    }
    return b;
  }
};

RatFunc triple_product() {
  RatFunc y1 = v("y1"), y2 = v("y2"), y3 = v("y3"), z1 = v("z1"), z2 = v("z2"), z3 = v("z3");
  return (y1 - z3) / (1 - y1 * z2) * (y2 - z1) / (1 - y2 * z3) * (y3 - z2) / (1 - y3 * z1);
}

std::vector<RatFunc> substituted_classes(const std::vector<RatFunc>& orb, const Binding& b) {
  ClassSet s;
  for (auto& x : orb) s.insert(substitute(x, b).reduced());
  return s.reps();
}

bool tuple_equal(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equivalent(a[i], b[i])) return false;
  return true;
}

bool t_free(const RatFunc& f, VarId t) { return !f.reduced().depends_on(t); }

}  // namespace

bool CheckReport::pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
}

CheckItem& CheckReport::add(std::string label, bool ok, nlohmann::json detail) {
  items.push_back({std::move(label), ok, std::move(detail)});
  return items.back();
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j{{"check", name}, {"status", pass() ? "pass" : "fail"}};
  nlohmann::json arr = nlohmann::json::array();
  for (auto& i : items) {
    nlohmann::json e{{"label", i.label}, {"status", i.pass ? "pass" : "fail"}};
    if (!i.detail.is_null()) e["detail"] = i.detail;
    arr.push_back(e);
  }
  j["items"] = arr;
  if (!info.empty()) j["info"] = info;
  return j;
}

std::vector<RatFunc> anharmonic_orbit(const RatFunc& x) {
  RatFunc ix = x.inv();
  return {x, ix, 1 - x, (1 - x).inv(), 1 - ix, x / (x - 1)};
}

std::vector<RatFunc> argument_classes(const FormalSum& s, bool nonconstant_only) {
  ClassSet c;
  for (auto& t : s.terms()) {
    if (nonconstant_only && t.arg.is_constant()) continue;
    c.insert(t.arg);
  }
  return c.reps();
}

bool same_classes(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) {
  return missing(a, b).empty() && missing(b, a).empty();
}

std::vector<Automorphism> group_G() {
  std::vector<VarId> vs{var("a1"), var("a2"), var("a3")};
  RatFunc a1 = v("a1"), a2 = v("a2"), a3 = v("a3");
  RatFunc b1 = 1 - a1 + a1 * a3, b3 = 1 - a3 + a3 * a2;
  Automorphism pi1(vs, {a1, a2, (-(b1 / (a1 * b3))).reduced()});
  Automorphism pi2(vs, {a1.inv(), a3.inv(), a2.inv()});
  Automorphism shift(vs, {a2, a3, a1});
  return group_closure({pi1, pi2, shift});
}

std::vector<Automorphism> group_Gprime() {
  std::vector<VarId> vs;
  for (auto n : {"y1", "y2", "y3", "z1", "z2", "z3"}) vs.push_back(var(n));
  RatFunc y1 = v("y1"), y2 = v("y2"), y3 = v("y3"), z1 = v("z1"), z2 = v("z2"), z3 = v("z3");
  Automorphism g(vs, {y1.inv(), z2, z3, z1, y2, y3});
  Automorphism h(vs, {y2, y3, y1, z2, z3, z1});
  return group_closure({g, h});
}

CheckReport check_group_orders() {
  CheckReport r{"group-orders"};
  auto G = group_G();
  r.add("|G| = 192", G.size() == 192, G.size());
  auto Gp = group_Gprime();
  r.add("|G'| = 96", Gp.size() == 96, Gp.size());
  // G permutes the 22 argument classes of the 22-term relation
  auto cls = argument_classes(goncharov22().sum);
  bool stable = true;
  for (auto& g : G) {
    std::vector<RatFunc> img;
    for (auto& x : cls) img.push_back(g.apply(x));
    if (!same_classes(img, cls)) {
      stable = false;
      break;
    }
  }
  r.add("G preserves the 22 argument classes", stable);
  return r;
}

CheckReport check_orbit_sizes() {
  CheckReport r{"orbit-sizes"};
  auto Gp = group_Gprime();
  RatFunc y1 = v("y1"), trip = triple_product();
  auto o1 = orbit(y1, Gp, false), o2 = orbit(trip, Gp, false);
  r.add("|G' y1| = 12", o1.size() == 12, o1.size());
  auto o1i = orbit(y1, Gp, true), o2i = orbit(trip, Gp, true);
  r.add("|G' y1| up to inversion = 6", o1i.size() == 6, o1i.size());
  r.add("|G' T| = 32", o2.size() == 32, o2.size());
  r.info["|G' T| up to inversion"] = o2i.size();
  ABParam p;
  auto s1 = substituted_classes(o1, p.yz(true)), s2 = substituted_classes(o2, p.yz(true));
  r.add("y = A, z = B: 6 classes from y1", s1.size() == 6, s1.size());
  r.add("y = A, z = B: 16 classes from T", s2.size() == 16, s2.size());
  return r;
}

CheckReport check_sym_vs_goncharov22() {
  CheckReport r{"sym-vs-goncharov22"};
  RatFunc a1 = v("a1"), a2 = v("a2"), a3 = v("a3");
  RatFunc b1 = 1 - a1 + a1 * a3, b2 = 1 - a2 + a2 * a1;
  RatFunc t1 = a1.inv(), t2 = a1 * a3 / b1, t3 = b1 / (b2 * a3);
  r.add("t4 = beta2", equivalent((t1 * t2 * t3).inv(), b2));
  FormalSum sym = goncharov22_sym_sum(t1, t2, t3);
  FormalSum g = goncharov22().sum;
  auto cs = argument_classes(sym), cg = argument_classes(g);
  r.add("22 classes in the symmetric form", cs.size() == 22, cs.size());
  r.add("22 classes in the 22-term relation", cg.size() == 22, cg.size());
  auto m1 = missing(cs, cg), m2 = missing(cg, cs);
  r.add("argument classes coincide", m1.empty() && m2.empty(),
        nlohmann::json{{"only_symmetric", strs(m1)}, {"only_original", strs(m2)}});
  FormalSum diff = merge_inversions(sym - g, 3);
  r.info["coefficient_difference_terms"] = diff.size();
  return r;
}

CheckReport check_Gprime_correspondence() {
  CheckReport r{"gprime-correspondence"};
  auto Gp = group_Gprime();
  ABParam p;
  auto o1 = orbit(v("y1"), Gp, false), o2 = orbit(triple_product(), Gp, false);
  auto s1 = substituted_classes(o1, p.yz(true)), s2 = substituted_classes(o2, p.yz(true));
  r.add("6 classes from y1", s1.size() == 6, s1.size());
  r.add("16 classes from T", s2.size() == 16, s2.size());
  std::vector<RatFunc> uni = s1;
  uni.insert(uni.end(), s2.begin(), s2.end());
  auto target = argument_classes(goncharov22_sym_sum(p.t[0], p.t[1], p.t[2]));
  auto m1 = missing(uni, target), m2 = missing(target, uni);
  r.add("16 + 6 classes = symmetric 22-term classes", m1.empty() && m2.empty() && target.size() == 22,
        nlohmann::json{{"unmatched_orbit", strs(m1)}, {"unmatched_relation", strs(m2)}});

  // iota-induced map on t
  auto iota = [](const RatFunc& x, const RatFunc& y) { return (1 - x) / (1 - y.inv()); };
  const auto& t = p.t;
  std::vector<VarId> tv{var("t1"), var("t2"), var("t3")};
  Automorphism io(tv, {iota(t[3], t[0]).reduced(), iota(t[2], t[1]).reduced(), iota(t[1], t[2]).reduced()});
  RatFunc t4img = io.apply(t[3]);
  r.add("iota respects t1 t2 t3 t4 = 1", equivalent(t4img, iota(t[0], t[3])));
  Automorphism shift(tv, {t[1], t[2], t[0]});
  auto act = [&](const Automorphism& a, const std::vector<RatFunc>& xs) {
    std::vector<RatFunc> out;
    for (auto& x : xs) out.push_back(a.apply(x));
    return out;
  };
  // g: (y1,y2,y3,z1,z2,z3) -> (1/y1, z2, z3, z1, y2, y3); h: cyclic
  auto g_like = [&](const std::vector<RatFunc>& y, const std::vector<RatFunc>& z) {
    std::vector<RatFunc> in{y[0], y[1], y[2], z[0], z[1], z[2]};
    std::vector<RatFunc> want{y[0].inv(), z[1], z[2], z[0], y[1], y[2]};
    return tuple_equal(act(io, in), want);
  };
  bool g_ba = g_like(p.B, p.A), g_ab = g_like(p.A, p.B);
  r.add("iota acts like g", g_ba || g_ab, nlohmann::json{{"(B,A)", g_ba}, {"(A,B)", g_ab}});
  r.info["iota_assignment"] = g_ba ? "(y,z) = (B,A)" : (g_ab ? "(y,z) = (A,B)" : "none");
  std::vector<RatFunc> in{p.A[0], p.A[1], p.A[2], p.B[0], p.B[1], p.B[2]};
  std::vector<RatFunc> want{p.A[1], p.A[2], p.A[0], p.B[1], p.B[2], p.B[0]};
  r.add("cyclic shift of t acts like h", tuple_equal(act(shift, in), want));
  return r;
}

CheckReport check_q_equations() {
  CheckReport r{"q-equations"};
  ABParam p;
  const auto &A = p.A, &B = p.B;
  auto at = [](const std::vector<RatFunc>& x, int i) -> const RatFunc& { return x[((i % 3) + 3) % 3]; };
  for (int i = 0; i < 3; ++i) {
    std::string n = std::to_string(i + 1);
    r.add("B" + n + "^-1 = q(B" + std::to_string((i + 2) % 3 + 1) + ",B" + std::to_string((i + 1) % 3 + 1) +
              ")/q(A..)",
          equivalent(at(B, i).inv(), q_fn(at(B, i - 1), at(B, i + 1)) / q_fn(at(A, i + 1), at(A, i - 1))));
  }
  for (int i = 0; i < 3; ++i) {
    std::string n = std::to_string(i + 1);
    r.add("A" + n + "^-1 = q(A,1/B) q(A,1/B)",
          equivalent(at(A, i).inv(), q_fn(at(A, i + 1), at(B, i - 1).inv()) * q_fn(at(A, i - 1), at(B, i + 1).inv())));
  }
  // third family: as printed it fails, it holds with B_i and B_(i+1) exchanged
  auto sq_ratio = [](const RatFunc& x, const RatFunc& y) { return y * (1 - x) * (1 - x) / (x * (1 - y) * (1 - y)); };
  nlohmann::json printed = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) {
    const RatFunc &a0 = at(A, i), &a1 = at(A, i + 1), &b0 = at(B, i), &b1 = at(B, i + 1);
    printed.push_back(equivalent(sq_ratio(a0, a1), sq_ratio(b0, b1)));
    r.add("A(i+1)(1-Ai)^2/(Ai(1-A(i+1))^2) = Bi(1-B(i+1))^2/(B(i+1)(1-Bi)^2), i=" + std::to_string(i + 1),
          equivalent(sq_ratio(a0, a1), sq_ratio(b1, b0)));
  }
  r.info["third_family_as_printed"] = printed;

  // square-root description, checked on squares
  auto Gp = group_Gprime();
  auto o1 = substituted_classes(orbit(v("y1"), Gp, false), p.yz(true));
  auto o2 = substituted_classes(orbit(triple_product(), Gp, false), p.yz(true));
  std::vector<RatFunc> sq16, sq2;
  for (auto& x : o2) sq2.push_back(x * x);
  for (int e = 0; e < 8; ++e) {
    int s[3] = {(e & 1) ? -1 : 1, (e & 2) ? -1 : 1, (e & 4) ? -1 : 1};
    if (s[0] * s[1] * s[2] == -1) sq16.push_back(A[0].pow(s[0]) * A[1].pow(s[1]) * A[2].pow(s[2]));
    if (s[0] * s[1] * s[2] == 1)
      for (int i = 0; i < 3; ++i) sq16.push_back(at(A, i).pow(s[0]) * at(B, i + 1).pow(s[1]) * at(B, i + 2).pow(s[2]));
  }
  r.add("16 products squared = orbit arguments squared", sq16.size() == 16 && same_classes(sq16, sq2),
        nlohmann::json{{"unmatched", strs(missing(sq16, sq2))}});
  std::vector<RatFunc> ab{A[0], A[1], A[2], B[0], B[1], B[2]};
  r.add("{alpha_i^2, beta_i^2} = {A_i, B_i} = orbit of y1", same_classes(ab, o1));
  return r;
}

CheckReport check_22_to_34_substitution(bool perturb) {
  CheckReport r{perturb ? "sub-22-to-34-perturbed" : "sub-22-to-34"};
  RatFunc a = v("a"), b = v("b"), c = v("c"), t = v("t");
  auto cr = [](const RatFunc& p, const RatFunc& q, const RatFunc& x, const RatFunc& y) {
    return ((p - x) * (q - y) / ((p - y) * (q - x))).reduced();
  };
  RatFunc zero(0);
  RatFunc t1 = cr(t, zero, c.inv(), perturb ? b : a), t2 = cr(t, zero, b, c.inv()), t3 = cr(t, zero, a, a * b * c);
  RatFunc t4 = (t1 * t2 * t3).inv();
  r.add("t1 t2 t3 t4 = 1", equivalent(t1 * t2 * t3 * t4, RatFunc(1)));
  FormalSum sub = goncharov22_sym_sum(t1, t2, t3);
  FormalSum f = f17_sum(a, b, c, t);
  VarId tv = var("t");
  int best_sign = 0;
  std::size_t best_free = 0;
  std::vector<RatFunc> fewest_dep;
  bool first = true;
  for (int sign : {1, -1}) {
    FormalSum rem = merge_inversions(sub - f.scale(sign), 3);
    std::vector<RatFunc> dep;
    std::size_t nfree = 0;
    for (auto& term : rem.terms()) {
      if (term.arg.is_constant()) continue;
      if (t_free(term.arg, tv))
        ++nfree;
      else
        dep.push_back(term.arg);
    }
    r.info[sign > 0 ? "sign_plus" : "sign_minus"] = {{"t_dependent", dep.size()}, {"t_free", nfree}};
    if (dep.empty() && best_sign == 0) {
      best_sign = sign;
      best_free = nfree;
    }
    if (first || dep.size() < fewest_dep.size()) fewest_dep = dep;
    first = false;
  }
  r.add("remainder is t-free", best_sign != 0, nlohmann::json{{"t_dependent", strs(fewest_dep)}});
  r.add("5 non-constant t-free terms remain", best_sign != 0 && best_free == 5, best_free);
  r.info["sign"] = best_sign;
  return r;
}

FormalSum wojtkowiak_lhs_34(const std::string& an, const std::string& bn, const std::string& cn,
                            const std::string& xn) {
  RatFunc a = v(an), b = v(bn), c = v(cn), x = v(xn);
  using PV = ProjectiveValue;
  std::vector<PV> al{PV(c.inv()), PV(a * b * c)}, be{PV(a), PV(b)}, ga{PV(0), PV::infinity()};
  RatFunc phi = (x - a) * (x - b) / ((x - c.inv()) * (x - a * b * c));
  FormalSum s;
  auto add = [&](int sign, const PV& p, const PV& q, const PV& u, const PV& w) {
    PV cr = cross_ratio(p, q, u, w);
    if (cr.infinite || cr.value.is_zero()) return;  // CL vanishes at 0 and infinity
    s.add(sign, cr.value.reduced());
  };
  add(1, PV(phi), PV(1), PV(0), PV::infinity());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        add(-1, PV(x), ga[i], be[j], al[k]);
        if (i != j) {
          add(-1, PV(x), al[i], al[j], ga[k]);
          add(-1, PV(x), be[i], be[j], ga[k]);
          add(1, PV(x), al[i], al[j], be[k]);
          add(1, PV(x), be[i], be[j], al[k]);
        }
      }
  return s;
}

CheckReport check_34_from_wojtkowiak(const KernelOptions& kopt, const PrecisionPolicy& pol) {
  CheckReport r{"wojt-34-match"};
  RatFunc a = v("a"), b = v("b"), c = v("c"), x = v("x");
  RatFunc phi = (x - a) * (x - b) / ((x - c.inv()) * (x - a * b * c));
  VarId xv = var("x");
  auto at = [&](const RatFunc& p) { return substitute(phi, Binding{{xv, p}}); };
  auto den_at = [&](const RatFunc& p) { return substitute(RatFunc(phi.den(), MultiPoly(1)), Binding{{xv, p}}); };
  bool poles = den_at(c.inv()).is_zero() && den_at(a * b * c).is_zero();
  r.add("preimages of inf: 1/c, abc", poles);
  r.add("preimages of 0: a, b", at(a).is_zero() && at(b).is_zero());
  // phi(inf) = ratio of leading coefficients in x
  auto lead_x = [&](const MultiPoly& m) { return m.coefficients_in(xv).rbegin()->second; };
  bool inf_to_one = phi.num().degree(xv) == phi.den().degree(xv) && lead_x(phi.num()) == lead_x(phi.den());
  r.add("preimages of 1: 0, inf", equivalent(at(RatFunc(0)), RatFunc(1)) && inf_to_one);

  FormalSum w = wojtkowiak_lhs_34("a", "b", "c", "x");
  FormalSum f = f17_sum(a, b, c, x);
  auto wc = argument_classes(w);
  std::size_t matched = 0;
  std::vector<RatFunc> unmatched;
  for (auto& term : f.terms()) {
    bool hit = false;
    for (auto& form : anharmonic_orbit(term.arg)) {
      for (auto& y : wc)
        if (equivalent_up_to_inversion(form, y)) {
          hit = true;
          break;
        }
      if (hit) break;
    }
    if (hit)
      ++matched;
    else
      unmatched.push_back(term.arg);
  }
  r.add("all 17 argument classes matched", matched == 17 && f.size() == 17,
        nlohmann::json{{"matched", matched}, {"unmatched", strs(unmatched)}});

  EquationSpec d;
  d.name = "wojt-plus-f17";
  d.weight = 3;
  d.variables = {"a", "b", "c", "x"};
  d.sum = w + f;
  Verdict kv = kernel_test(d.sum, 3, kopt);
  r.add("LHS + f(a,b,c,x) in ker beta_3", kv.pass, kv.to_json());
  NumericVerdict nv = verify_numeric(d, 4, pol, kopt.seed, kopt.jobs);
  r.add("LHS + f(a,b,c,x) vanishes numerically", nv.pass, nv.to_json());
  return r;
}

CheckReport check_gamma21_identity(const KernelOptions& kopt, const PrecisionPolicy& pol) {
  CheckReport r{"gamma21"};
  EquationSpec lhs = gamma21_symmetrized(), rhs = gamma21_rhs();
  auto rc = argument_classes(rhs.sum);
  r.add("21 non-constant classes on the right", rc.size() == 21, rc.size());
  FormalSum rm = merge_inversions(rhs.sum, 3);
  bool coeff_ok = true;
  nlohmann::json coeffs = nlohmann::json::array();
  for (auto& t : rm.terms()) {
    if (t.arg.is_constant()) continue;
    Rational c = abs(t.coeff);
    coeffs.push_back(t.coeff.get_str());
    if (c != 1 && c != 2) coeff_ok = false;
  }
  r.add("coefficients in {+-1, +-2}", coeff_ok, coeffs);

  EquationSpec d = lhs;
  d.name = "gamma21-difference";
  d.sum = lhs.sum - rhs.sum;
  FormalSum dm = merge_inversions(d.sum, 3);
  bool exact = dm.empty();
  Verdict kv = kernel_test(d.sum, 3, kopt);
  NumericVerdict nv = verify_numeric(d, 4, pol, kopt.seed, kopt.jobs);
  nlohmann::json levels{{"exact", exact}, {"kernel", kv.pass}, {"numeric", nv.pass}};
  r.info["difference_classes"] = dm.size();
  r.info["kernel"] = kv.to_json();
  r.info["numeric"] = nv.to_json();
  r.info["level"] = exact ? "exact" : kv.pass ? "kernel" : nv.pass ? "numeric" : "none";
  r.add("symmetrized Gamma equals the displayed form (some level)", exact || kv.pass || nv.pass, levels);
  return r;
}

CheckReport check_xi7_term_count() {
  CheckReport r{"xi7-term-count"};
  auto n = argument_classes(xi7_explicit().sum).size();
  r.add("274 arguments up to inversion", n == 274, n);
  r.info["count"] = n;
  return r;
}

CheckReport check_xi7_weights() {
  CheckReport r{"xi7-weights"};
  bool balance = true, by_part = true;
  nlohmann::json bad = nlohmann::json::array();
  for (auto& b : xi7_blocks()) {
    Rational w1 = weight_wt(b.key.a, b.key.b), w2 = weight_wt(b.key.c, b.key.d);
    if (w1 != w2) {
      balance = false;
      bad.push_back({b.key.a, b.key.b, b.key.c, b.key.d});
    }
    if (w1 != b.part) by_part = false;
  }
  r.add("wt(a,b) = wt(c,d) for every block", balance, bad);
  r.add("blocks of part i have weight i", by_part);
  return r;
}

CheckReport check_xi7_multiplicities() {
  CheckReport r{"xi7-multiplicities"};
  RatFunc t = v("t"), u = v("u");
  bool all = true;
  nlohmann::json rows = nlohmann::json::array();
  for (auto& b : xi7_blocks()) {
    // expand without merging: 18 arguments
    std::vector<RatFunc> args;
    for (const BlockKey& p : {b.key, BlockKey{b.key.c, b.key.d, b.key.a, b.key.b}}) {
      RatFunc fa = xi7_f(0, t).pow(p.a), fc = xi7_f(0, u).pow(p.c);
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          args.push_back(fa * xi7_f(i, t).pow(p.b - p.a) / (fc * xi7_f(j, u).pow(p.d - p.c)));
    }
    std::vector<RatFunc> reps;
    std::vector<long> counts;
    for (auto& x : args) {
      bool found = false;
      for (std::size_t k = 0; k < reps.size() && !found; ++k)
        if (equivalent_up_to_inversion(reps[k], x)) {
          ++counts[k];
          found = true;
        }
      if (!found) {
        reps.push_back(x);
        counts.push_back(1);
      }
    }
    long want = b.first.get_den().get_si();
    bool ok = std::all_of(counts.begin(), counts.end(), [&](long c) { return c == want; });
    all = all && ok;
    rows.push_back({{"block", {b.key.a, b.key.b, b.key.c, b.key.d}}, {"expected", want}, {"counts", counts}});
  }
  r.add("multiplicity equals the denominator of the first factor", all, rows);
  return r;
}

CheckReport check_xi7_explicit_vs_symmetric() {
  CheckReport r{"xi7-explicit-vs-symmetric"};
  FormalSum e = xi7_explicit().sum;
  FormalSum s = xi7_symmetric().sum;
  FormalSum d = merge_inversions(e.scale(60) - s, 7);
  r.add("60 xi7 = symmetric form", d.empty(), nlohmann::json{{"difference_classes", d.size()}});
  r.info["symmetric_classes"] = argument_classes(s).size();

  // the sign convention that makes the forms proportional, and the factor
  FormalSum me = merge_inversions(e, 7);
  FormalSum sm = merge_inversions(xi7_symmetric("t", "u", PhiSign::Majority).sum, 7);
  std::optional<Rational> factor;
  for (auto& term : sm.terms()) {
    Rational ce = me.coefficient_of(term.arg);
    if (ce == 0) ce = me.coefficient_of(term.arg.inv());
    if (ce != 0) {
      factor = ce / term.coeff;
      break;
    }
  }
  bool prop = factor && merge_inversions(e - sm.scale(*factor), 7).empty();
  r.info["majority_sign_factor"] = prop ? nlohmann::json(factor->get_str()) : nlohmann::json(nullptr);
  return r;
}

}  // namespace polylog
