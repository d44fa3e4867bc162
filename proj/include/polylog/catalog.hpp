#pragma once

#include "polylog/numeric.hpp"
#include "polylog/symbol.hpp"

#include <json.hpp>

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polylog {

struct EquationSpec {
  std::string name;
  int weight = 0;
  std::vector<std::string> variables;
  FormalSum sum;
  std::vector<std::string> constraints;
  std::string source;

  nlohmann::json to_json() const;
};

EquationSpec equation_from_json(const nlohmann::json& j);

// Building blocks on arbitrary arguments.
FormalSum five_term_sum(const RatFunc& x, const RatFunc& y);
FormalSum three_term_sum(const RatFunc& x);
FormalSum goncharov22_sum(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3);
// t4 = 1/(t1 t2 t3)
FormalSum goncharov22_sym_sum(const RatFunc& t1, const RatFunc& t2, const RatFunc& t3);
FormalSum f17_sum(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& t);
FormalSum gamma21_sum(const RatFunc& x, const RatFunc& y, const RatFunc& z);
FormalSum gamma21_rhs_sum(const RatFunc& x1, const RatFunc& x2, const RatFunc& z1);

EquationSpec five_term(const std::string& x = "x", const std::string& y = "y");
EquationSpec three_term(const std::string& x = "x");
EquationSpec goncharov22(const std::string& a1 = "a1", const std::string& a2 = "a2", const std::string& a3 = "a3");
EquationSpec goncharov22_sym(const std::string& t1 = "t1", const std::string& t2 = "t2", const std::string& t3 = "t3");
// not a functional equation on its own
EquationSpec f17(const std::string& a = "a", const std::string& b = "b", const std::string& c = "c",
                 const std::string& t = "t");
EquationSpec relation34(const std::string& a = "a", const std::string& b = "b", const std::string& c = "c",
                        const std::string& t = "t", const std::string& u = "u");
EquationSpec gamma21(const std::string& x = "x", const std::string& y = "y", const std::string& z = "z");
// Gamma(x1,x2,z1) + Gamma(x2,x1,z1)
EquationSpec gamma21_symmetrized(const std::string& x1 = "x1", const std::string& x2 = "x2",
                                 const std::string& z1 = "z1");
// the displayed closed form of the symmetrization
EquationSpec gamma21_rhs(const std::string& x1 = "x1", const std::string& x2 = "x2", const std::string& z1 = "z1");

// Four-log template over root placeholders x_1..x_n, y_1..y_n, which are bound
// to the roots of x^(n-1)(x-1) = t and = u.
struct FourlogTemplate {
  int n = 0;
  EquationSpec spec;
  std::vector<std::string> x_roots, y_roots;
  // ascending coefficients of x^(n-1)(x-1) - value
  std::vector<Rational> phi_coefficients() const;
};
FourlogTemplate fourlog(int n, std::optional<Rational> xy_coeff = std::nullopt);

// --- the 7-logarithm equation ---

using IntVec3 = std::array<long, 3>;
struct BlockKey {
  long a, b, c, d;
};
struct Xi7Block {
  Rational first;   // leading factor; its denominator is the multiplicity
  Rational second;
  BlockKey key;
  int part;  // 1, 2, 3
  Rational coeff() const { return first * second; }
};
const std::vector<Xi7Block>& xi7_blocks();

// f1 = -z/D, f2 = (z-1)/D, f3 = z(1-z)/D, f = -f1 f2 f3 = -z^2 (1-z)^2 / D^3,
// D = 1 - z + z^2
RatFunc xi7_f(int i, const RatFunc& z);  // i = 0 gives f
// {a,b;c,d}_0(t,u)
FormalSum xi7_block0(const BlockKey& k, const RatFunc& t, const RatFunc& u);
// {a,b;c,d}_0(t,u) + {c,d;a,b}_0(t,u)
FormalSum xi7_block(const BlockKey& k, const RatFunc& t, const RatFunc& u);

IntVec3 theta(const IntVec3& v);
enum class PhiSign {
  Literal,   // (-f1)^a1 f2^a2 f3^a3
  Majority,  // (-1)^m f1^a1 f2^a2 f3^a3, m the entry occurring most often
};
RatFunc phi_alpha(const IntVec3& alpha, const RatFunc& z, PhiSign sign = PhiSign::Literal);
Rational omega(const IntVec3& alpha);
struct AkSets {
  std::vector<IntVec3> a1, a2, a3;
  IntVec3 delta;
};
AkSets a_k_sets();
std::vector<IntVec3> s3_orbit(const IntVec3& v);  // distinct permutations
Rational weight_wt(long a, long b);

EquationSpec xi7_explicit(const std::string& t = "t", const std::string& u = "u");
// the right-hand side of "60 xi7 = sum xi^(i)"
EquationSpec xi7_symmetric(const std::string& t = "t", const std::string& u = "u", PhiSign sign = PhiSign::Literal);

// --- registry ---

std::vector<std::string> catalog_names();
EquationSpec catalog_lookup(const std::string& name);  // throws std::out_of_range

// --- structural checks ---

struct CheckItem {
  std::string label;
  bool pass = false;
  nlohmann::json detail;
};

struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  std::string name;
  std::vector<CheckItem> items;
  nlohmann::json info = nlohmann::json::object();

  bool pass() const;
  CheckItem& add(std::string label, bool ok, nlohmann::json detail = nullptr);
  nlohmann::json to_json() const;
};

// [x] ~ [1/x] ~ [1-x] ~ [1/(1-x)] ~ [1-1/x] ~ [x/(x-1)]
std::vector<RatFunc> anharmonic_orbit(const RatFunc& x);

// (non-constant) argument classes up to inversion
std::vector<RatFunc> argument_classes(const FormalSum& s, bool nonconstant_only = true);
bool same_classes(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b);

std::vector<Automorphism> group_G();
std::vector<Automorphism> group_Gprime();
CheckReport check_group_orders();
CheckReport check_orbit_sizes();
CheckReport check_sym_vs_goncharov22();
CheckReport check_Gprime_correspondence();
CheckReport check_q_equations();
CheckReport check_22_to_34_substitution(bool perturb = false);
CheckReport check_34_from_wojtkowiak(const KernelOptions& kopt = {}, const PrecisionPolicy& pol = {});
CheckReport check_gamma21_identity(const KernelOptions& kopt = {}, const PrecisionPolicy& pol = {});
CheckReport check_xi7_term_count();
CheckReport check_xi7_weights();
CheckReport check_xi7_multiplicities();
CheckReport check_xi7_explicit_vs_symmetric();

// --- numerical verification ---

// uniform on the annulus 0.2 < |z| < 5 (log radius), rejecting |z - 1| < 0.1
BigComplex sample_annulus(Rng& rng, mpfr_prec_t bits);

struct NumericVerdict {
  bool pass = true;
  int points = 0;
  std::size_t resamples = 0;
  BigReal max_abs{64};
  BigReal tolerance{64};
  std::optional<nlohmann::json> worst;  // sample with the largest |value|
  nlohmann::json to_json() const;
  void record(const BigReal& value, nlohmann::json where);
};

NumericVerdict verify_numeric(const EquationSpec& eq, int points, const PrecisionPolicy& pol, std::uint64_t seed,
                              int jobs = 1);
NumericVerdict verify_numeric_at(const EquationSpec& eq, const std::map<VarId, BigComplex>& point,
                                 const PrecisionPolicy& pol);

// preimages of a point of P^1 under phi (one variable), with multiplicity;
// infinity appears when deg(num - B den) < deg(phi)
std::vector<ProjectiveComplex> preimages(const RatFunc& phi, const ProjectiveComplex& b, const PrecisionPolicy& pol);
ProjectiveComplex apply_phi(const RatFunc& phi, const ProjectiveComplex& z, mpfr_prec_t bits);
int rational_degree(const RatFunc& phi);

// sum over preimages of CL2(cr(alpha,beta,gamma,delta)) - deg(phi) CL2(cr(A,B,C,D))
NumericVerdict verify_dilog_general(const RatFunc& phi, const ProjectiveComplex& alpha, const ProjectiveComplex& b,
                                    const ProjectiveComplex& c, const ProjectiveComplex& d,
                                    const PrecisionPolicy& pol);
NumericVerdict verify_trilog_theorem(const RatFunc& phi, const std::array<ProjectiveComplex, 2>& a,
                                     const std::array<ProjectiveComplex, 2>& b,
                                     const std::array<ProjectiveComplex, 2>& c,
                                     const std::array<ProjectiveComplex, 2>& d, const PrecisionPolicy& pol);
// left-hand side at x1 minus left-hand side at x2
NumericVerdict verify_wojtkowiak(const RatFunc& phi, const ProjectiveComplex& a, const ProjectiveComplex& b,
                                 const ProjectiveComplex& c, const BigComplex& x1, const BigComplex& x2,
                                 const PrecisionPolicy& pol);
NumericVerdict verify_fourlog_numeric(int n, int points, const PrecisionPolicy& pol, std::uint64_t seed,
                                      std::optional<Rational> xy_coeff = std::nullopt, int jobs = 1);

// left-hand side of the Wojtkowiak equation as a formal sum in x for
// phi(x) = (x-a)(x-b)/((x-1/c)(x-abc)), (A,B,C) = (inf,0,1)
FormalSum wojtkowiak_lhs_34(const std::string& a = "a", const std::string& b = "b", const std::string& c = "c",
                            const std::string& x = "x");

}  // namespace polylog
