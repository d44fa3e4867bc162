#include "polylog/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polylog {

namespace {

RatFunc v(const std::string& name) { return RatFunc::variable(name); }

FormalSum reduced_args(const FormalSum& s) {
  FormalSum r;
  for (auto& t : s.terms()) r.add(t.coeff, t.arg.reduced());
  return r;
}

EquationSpec make(std::string name, int weight, std::vector<std::string> vars, FormalSum sum,
                  std::vector<std::string> constraints, std::string source, bool reduce = true) {
  EquationSpec e;
  e.name = std::move(name);
  e.weight = weight;
  e.variables = std::move(vars);
  e.sum = reduce ? reduced_args(sum) : std::move(sum);
  e.constraints = std::move(constraints);
  e.source = std::move(source);
  return e;
}

}  // namespace

nlohmann::json EquationSpec::to_json() const {
  return {{"name", name},       {"weight", weight}, {"variables", variables},
          {"constraints", constraints}, {"source", source}, {"terms", polylog::to_json(sum)}};
}

EquationSpec equation_from_json(const nlohmann::json& j) {
  EquationSpec e;
  e.name = j.at("name").get<std::string>();
  e.weight = j.at("weight").get<int>();
  e.variables = j.at("variables").get<std::vector<std::string>>();
  e.constraints = j.value("constraints", std::vector<std::string>{});
  e.source = j.value("source", std::string());
  e.sum = formal_sum_from_json(j.at("terms"));
  return e;
}

FormalSum five_term_sum(const RatFunc& x, const RatFunc& y) {
  FormalSum s;
  s.add(1, x * y);
  s.add(-1, x);
  s.add(-1, y);
  s.add(-1, (1 - x) / (1 - y.inv()));
  s.add(-1, (1 - y) / (1 - x.inv()));
  return s;
}

FormalSum three_term_sum(const RatFunc& x) {
  FormalSum s;
  s.add(1, x);
  s.add(1, (1 - x).inv());
  s.add(1, 1 - x.inv());
  s.add(-1, RatFunc(1));
  return s;
}

FormalSum goncharov22_sum(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3) {
  const RatFunc a[3] = {a1, a2, a3};
  auto A = [&](int i) -> const RatFunc& { return a[((i % 3) + 3) % 3]; };
  auto B = [&](int i) { return 1 - A(i) + A(i) * A(i - 1); };
  FormalSum s;
  for (int i = 0; i < 3; ++i) {
    s.add(1, A(i).inv());
    s.add(1, B(i));
    s.add(1, A(i) * A(i - 1) / B(i));
    s.add(1, B(i) / (B(i + 1) * A(i + 2)));
    s.add(1, -(B(i) * A(i + 1) / B(i + 1)));
  }
  s.add(1, -(a1 * a2 * a3).inv());
  for (int i = 0; i < 3; ++i) {
    s.add(-1, B(i) / A(i - 1));
    s.add(-1, B(i) / (B(i + 1) * A(i) * A(i - 1)));
    s.add(-1, RatFunc(1));
  }
  return s;
}

FormalSum goncharov22_sym_sum(const RatFunc& t1, const RatFunc& t2, const RatFunc& t3) {
  const RatFunc t[4] = {t1, t2, t3, (t1 * t2 * t3).inv()};
  FormalSum s;
  for (int i = 0; i < 4; ++i) s.add(1, t[i]);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) s.add(1, (1 - t[i]) / (1 - t[j].inv()));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) s.add(Rational(-1, 4), t[i] * t[j]);
  int p[4] = {0, 1, 2, 3};
  do {
    auto [i, j, k, l] = p;
    s.add(Rational(-1, 8), (1 - t[i]) * (1 - t[j]) / ((1 - t[k].inv()) * (1 - t[l].inv())));
  } while (std::next_permutation(p, p + 4));
  s.add(-3, RatFunc(1));
  return s;
}

FormalSum f17_sum(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& t) {
  const RatFunc abc = a * b * c;
  const RatFunc ct1 = 1 - c * t;
  FormalSum s;
  s.add(1, ct1 * a / (a - t));
  s.add(1, ct1 * b / (b - t));
  s.add(1, ct1 / (c * (a - t)));
  s.add(1, ct1 / (c * (b - t)));
  s.add(1, (abc - t) / ((a - t) * b * c));
  s.add(1, (abc - t) / ((b - t) * a * c));
  s.add(1, (abc - t) / (a - t));
  s.add(1, (abc - t) / (b - t));
  s.add(1, (a - t) * b * (a * c - 1) / ((b - t) * a * (b * c - 1)));
  s.add(1, (t - a) * (1 - b * c) / ((t - b) * (1 - a * c)));
  s.add(1, (t * c - 1) * b * (a * c - 1) / ((abc - t) * (b * c - 1)));
  s.add(1, (t * c - 1) * a * (b * c - 1) / ((abc - t) * (a * c - 1)));
  s.add(-1, ct1 * abc / (abc - t));
  s.add(-1, ct1 / ((abc - t) * c));
  s.add(-1, (t - a) / (t - b));
  s.add(-1, b * (a - t) / (a * (b - t)));
  s.add(-1, (b - t) * (a - t) * c / ((abc - t) * ct1));
  return s;
}

FormalSum gamma21_sum(const RatFunc& x, const RatFunc& y, const RatFunc& z) {
  return goncharov22_sum((1 - x).inv(), (1 - x) / (1 - x * y), 1 - z) +
         goncharov22_sum(1 - x.inv(), (1 - x * y) / (y * (1 - x)), (1 - z.inv()).inv());
}

FormalSum gamma21_rhs_sum(const RatFunc& x1, const RatFunc& x2, const RatFunc& z1) {
  const RatFunc z2 = (x1 * x2 * z1).inv();
  auto j = [](const RatFunc& t, const RatFunc& u) { return (1 - u.inv()) / (1 - t); };
  const RatFunc X[2] = {x1, x2}, Z[2] = {z1, z2};
  const RatFunc jz = j(z1, z2);
  FormalSum s;
  s.add(-2, x1 * x2);
  s.add(-2, RatFunc(1));
  for (int i = 0; i < 2; ++i) {
    const RatFunc& xi = X[i];
    const RatFunc jx = j(xi, X[1 - i]);
    s.add(2, xi);
    s.add(2, jx);
    s.add(2, Z[i]);
    s.add(2, j(Z[i], Z[1 - i]));
    s.add(-2, xi * jz);
    s.add(-2, jx * jz);
    s.add(-2, xi * z1);
    s.add(-2, jx * z1);
  }
  for (int i = 0; i < 2; ++i) {
    const RatFunc& xi = X[i];
    const RatFunc jx = j(xi, X[1 - i]);
    s.add(1, xi * z1 * jx * jz);
    s.add(1, jx * jz / (xi * z1));
  }
  return s;
}

EquationSpec five_term(const std::string& x, const std::string& y) {
  return make("five-term", 2, {x, y}, five_term_sum(v(x), v(y)), {x + "," + y + " not in {0,1}"},
              "Abel/Spence five-term relation");
}

EquationSpec three_term(const std::string& x) {
  return make("three-term", 3, {x}, three_term_sum(v(x)), {x + " not in {0,1}"}, "trilogarithm three-term relation");
}

EquationSpec goncharov22(const std::string& a1, const std::string& a2, const std::string& a3) {
  return make("goncharov22", 3, {a1, a2, a3}, goncharov22_sum(v(a1), v(a2), v(a3)),
              {"beta_i = 1 - alpha_i + alpha_i alpha_(i-1)", "no argument in {0,1,inf} identically"},
              "Goncharov 22-term relation");
}

EquationSpec goncharov22_sym(const std::string& t1, const std::string& t2, const std::string& t3) {
  return make("goncharov22-sym", 3, {t1, t2, t3}, goncharov22_sym_sum(v(t1), v(t2), v(t3)),
              {"t4 = 1/(" + t1 + " " + t2 + " " + t3 + ")"}, "symmetric four-variable form of the 22-term relation");
}

EquationSpec f17(const std::string& a, const std::string& b, const std::string& c, const std::string& t) {
  return make("f17", 3, {a, b, c, t}, f17_sum(v(a), v(b), v(c), v(t)), {}, "17 generic terms of the 34-term relation");
}

EquationSpec relation34(const std::string& a, const std::string& b, const std::string& c, const std::string& t,
                        const std::string& u) {
  return make("relation34", 3, {a, b, c, t, u},
              f17_sum(v(a), v(b), v(c), v(t)) - f17_sum(v(a), v(b), v(c), v(u)), {},
              "34-term relation f(a,b,c,t) - f(a,b,c,u)");
}

EquationSpec gamma21(const std::string& x, const std::string& y, const std::string& z) {
  return make("gamma21", 3, {x, y, z}, gamma21_sum(v(x), v(y), v(z)), {},
              "sum of two 22-term relations in three variables");
}

EquationSpec gamma21_symmetrized(const std::string& x1, const std::string& x2, const std::string& z1) {
  return make("gamma21-sym", 3, {x1, x2, z1},
              gamma21_sum(v(x1), v(x2), v(z1)) + gamma21_sum(v(x2), v(x1), v(z1)), {},
              "Gamma(x1,x2,z1) + Gamma(x2,x1,z1)");
}

EquationSpec gamma21_rhs(const std::string& x1, const std::string& x2, const std::string& z1) {
  return make("gamma21-rhs", 3, {x1, x2, z1}, gamma21_rhs_sum(v(x1), v(x2), v(z1)),
              {"z2 = 1/(x1 x2 z1)", "j(t,u) = (1 - 1/u)/(1 - t)"},
              "closed 21-term form of the symmetrized Gamma");
}

std::vector<Rational> FourlogTemplate::phi_coefficients() const {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  c[static_cast<std::size_t>(n)] = 1;
  c[static_cast<std::size_t>(n) - 1] -= 1;
  return c;
}

FourlogTemplate fourlog(int n, std::optional<Rational> xy_coeff) {
  if (n < 2) throw std::invalid_argument("fourlog: n must be at least 2");
  FourlogTemplate ft;
  ft.n = n;
  std::vector<RatFunc> X, Y;
  for (int i = 1; i <= n; ++i) {
    ft.x_roots.push_back("x_" + std::to_string(i));
    ft.y_roots.push_back("y_" + std::to_string(i));
    X.push_back(v(ft.x_roots.back()));
    Y.push_back(v(ft.y_roots.back()));
  }
  const long nn = n, n1 = n - 1;
  RatFunc px(1), py(1);
  for (int i = 0; i < n; ++i) {
    px = px * X[static_cast<std::size_t>(i)];
    py = py * Y[static_cast<std::size_t>(i)];
  }
  FormalSum s;
  s.add(xy_coeff ? *xy_coeff : Rational(nn * (nn - 2)), px / py);
  for (auto& x : X)
    for (auto& y : Y) {
      s.add(Rational(-n1 * n1), (1 - x.inv()) / (1 - y.inv()));
      s.add(Rational(nn * nn), (1 - x) / (1 - y));
      s.add(Rational(-nn * nn * n1 * n1), x / y);
    }
  for (int i = 0; i < n; ++i) {
    s.add(Rational(nn * n1 * n1), 1 - X[static_cast<std::size_t>(i)].inv());
    s.add(Rational(-nn * n1 * n1), 1 - Y[static_cast<std::size_t>(i)].inv());
  }
  std::vector<std::string> vars = ft.x_roots;
  vars.insert(vars.end(), ft.y_roots.begin(), ft.y_roots.end());
  ft.spec = make("fourlog-n" + std::to_string(n), 4, vars, std::move(s),
                 {"x_i roots of x^(n-1)(x-1) = t", "y_j roots of y^(n-1)(y-1) = u"},
                 "four-logarithm family, n = " + std::to_string(n));
  return ft;
}

// --- seven-logarithm ---

const std::vector<Xi7Block>& xi7_blocks() {
  static const std::vector<Xi7Block> blocks = [] {
    auto Q = [](long p, long q = 1) { return Rational(p, q); };
    std::vector<Xi7Block> b = {
        {Q(-1, 18), Q(609, 4), {-1, -1, -1, -1}, 3}, {Q(-1, 3), Q(35), {-1, -1, -2, 1}, 3},
        {Q(1, 3), Q(105, 8), {-1, -1, 3, -5}, 3},    {Q(-1, 3), Q(21), {-1, -1, -1, 4}, 3},
        {Q(-1, 3), Q(15), {-1, -1, -2, 5}, 3},       {Q(1, 3), Q(15), {-1, -1, 3, -4}, 3},

        {Q(1, 2), Q(700), {1, 0, 1, 0}, 2},          {Q(1, 2), Q(175, 4), {1, -3, 1, -3}, 2},
        {Q(1, 2), Q(28), {-2, 3, -2, 3}, 2},         {Q(-1), Q(35), {1, -3, -2, 3}, 2},
        {Q(-1), Q(140), {-2, 3, 1, 0}, 2},           {Q(1), Q(175), {1, 0, 1, -3}, 2},

        {Q(1, 2), Q(700), {1, -2, -1, 2}, 1},        {Q(1), Q(3150), {0, 1, 1, -1}, 1},
        {Q(1, 2), Q(1575), {-1, 1, 1, -1}, 1},       {Q(-1), Q(2100), {1, -2, 0, -1}, 1},
        {Q(1, 2), Q(6300), {0, 1, 0, -1}, 1},        {Q(-1), Q(1050), {-1, 2, -1, 1}, 1},
        {Q(-1, 2), Q(700), {-1, 2, -1, 2}, 1},       {Q(-1, 2), Q(1575), {-1, 1, -1, 1}, 1},
        {Q(-1, 2), Q(6300), {0, 1, 0, 1}, 1},        {Q(1), Q(1050), {-1, 2, 1, -1}, 1},
        {Q(1), Q(2100), {0, -1, -1, 2}, 1},          {Q(-1), Q(3150), {1, -1, 0, -1}, 1},
    };
    return b;
  }();
  return blocks;
}

RatFunc xi7_f(int i, const RatFunc& z) {
  const RatFunc d = 1 - z + z * z;
  switch (i) {
    case 0: return -(z * z * (1 - z) * (1 - z)) / (d * d * d);  // -f1 f2 f3
    case 1: return -z / d;
    case 2: return (z - 1) / d;
    case 3: return z * (1 - z) / d;
  }
  throw std::invalid_argument("xi7_f: index must be 0..3");
}

namespace {

// f(z)^a f_i(z)^(b-a), i = 1..3
std::vector<RatFunc> block_side(long a, long b, const RatFunc& z) {
  RatFunc fa = xi7_f(0, z).pow(a);
  std::vector<RatFunc> out;
  for (int i = 1; i <= 3; ++i) out.push_back((fa * xi7_f(i, z).pow(b - a)).reduced());
  return out;
}

}  // namespace

FormalSum xi7_block0(const BlockKey& k, const RatFunc& t, const RatFunc& u) {
  auto num = block_side(k.a, k.b, t);
  auto den = block_side(k.c, k.d, u);
  FormalSum s;
  for (auto& p : num)
    for (auto& q : den) s.add(1, p / q);
  return s;
}

FormalSum xi7_block(const BlockKey& k, const RatFunc& t, const RatFunc& u) {
  return xi7_block0(k, t, u) + xi7_block0({k.c, k.d, k.a, k.b}, t, u);
}

IntVec3 theta(const IntVec3& x) { return {x[0], -x[1] - x[2], x[1] - x[0]}; }

RatFunc phi_alpha(const IntVec3& alpha, const RatFunc& z, PhiSign sign) {
  RatFunc r = xi7_f(1, z).pow(alpha[0]) * xi7_f(2, z).pow(alpha[1]) * xi7_f(3, z).pow(alpha[2]);
  long e = alpha[0];
  if (sign == PhiSign::Majority) e = (alpha[0] == alpha[2]) ? alpha[0] : alpha[1];
  r = r.reduced();
  return (e % 2 != 0) ? -r : r;
}

Rational omega(const IntVec3& alpha) {
  if (alpha[0] == alpha[2]) throw DomainError("omega: alpha_1 = alpha_3");
  return make_rational(1, alpha[0] - alpha[2]);
}

std::vector<IntVec3> s3_orbit(const IntVec3& x) {
  IntVec3 p = x;
  std::sort(p.begin(), p.end());
  std::vector<IntVec3> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

AkSets a_k_sets() {
  AkSets s;
  auto build = [](long k) {
    std::vector<IntVec3> out;
    for (auto& p : s3_orbit({k, -1, 1 - k})) out.push_back(theta(p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  s.a1 = build(1);
  s.a2 = build(2);
  s.a3 = build(3);
  s.delta = {-1, -1, -1};
  return s;
}

Rational weight_wt(long a, long b) { return make_rational(std::labs(a) + std::labs(a + b) + std::labs(2 * a + b), 2); }

EquationSpec xi7_explicit(const std::string& t, const std::string& u) {
  FormalSum s;
  for (auto& b : xi7_blocks()) s += xi7_block(b.key, v(t), v(u)).scale(b.coeff());
  return make("xi7-explicit", 7, {t, u}, std::move(s), {"f_j(t), f_j(u) not in {0,inf}"},
              "two-variable 7-logarithm equation, block table", false);
}

EquationSpec xi7_symmetric(const std::string& tn, const std::string& un, PhiSign sign) {
  const RatFunc t = v(tn), u = v(un);
  AkSets A = a_k_sets();
  std::map<std::pair<IntVec3, int>, RatFunc> memo;  // (alpha, side) -> phi_alpha
  auto phi = [&](const IntVec3& a, int side) -> const RatFunc& {
    auto it = memo.find({a, side});
    if (it == memo.end()) it = memo.emplace(std::make_pair(a, side), phi_alpha(a, side ? u : t, sign)).first;
    return it->second;
  };
  FormalSum s;
  s.add(Rational(-29, 20), phi(A.delta, 0) / phi(A.delta, 1));
  for (auto& al : A.a3) {
    if (al == A.delta) continue;
    for (auto& sa : s3_orbit(al)) {
      s.add(omega(al), phi(sa, 0) / phi(A.delta, 1));
      s.add(omega(al), phi(A.delta, 0) / phi(sa, 1));
    }
  }
  auto pairs = [&](const std::vector<IntVec3>& set, const Rational& c) {
    for (auto& al : set)
      for (auto& be : set) {
        Rational w = c * omega(al) * omega(be);
        for (auto& sa : s3_orbit(al))
          for (auto& sb : s3_orbit(be)) s.add(w, phi(sa, 0) / phi(sb, 1));
      }
  };
  pairs(A.a2, Rational(20, 3));
  pairs(A.a1, Rational(-30));
  return make(sign == PhiSign::Literal ? "xi7-symmetric" : "xi7-symmetric-majority", 7, {tn, un}, std::move(s),
              {"f_j(t), f_j(u) not in {0,inf}"}, "symmetric form of the 7-logarithm equation (60 xi7)", false);
}

// --- registry ---

std::vector<std::string> catalog_names() {
  return {"five-term",   "three-term",  "goncharov22", "goncharov22-sym", "relation34",   "gamma21",
          "gamma21-sym", "gamma21-rhs", "fourlog-n2",  "fourlog-n3",      "fourlog-n4",   "fourlog-n5",
          "xi7-explicit", "xi7-symmetric"};
}

EquationSpec catalog_lookup(const std::string& name) {
  if (name == "five-term") return five_term();
  if (name == "three-term") return three_term();
  if (name == "goncharov22") return goncharov22();
  if (name == "goncharov22-sym") return goncharov22_sym();
  if (name == "f17") return f17();
  if (name == "relation34") return relation34();
  if (name == "gamma21") return gamma21();
  if (name == "gamma21-sym") return gamma21_symmetrized();
  if (name == "gamma21-rhs") return gamma21_rhs();
  if (name == "xi7-explicit") return xi7_explicit();
  if (name == "xi7-symmetric") return xi7_symmetric();
  if (name == "xi7-symmetric-majority") return xi7_symmetric("t", "u", PhiSign::Majority);
  if (name.rfind("fourlog-n", 0) == 0) {
    try {
      std::size_t pos = 0;
      int n = std::stoi(name.substr(9), &pos);
      if (pos == name.size() - 9 && n >= 2 && n <= 12) return fourlog(n).spec;
    } catch (const std::logic_error&) {
    }
  }
  throw std::out_of_range("unknown equation: " + name);
}

}  // namespace polylog
