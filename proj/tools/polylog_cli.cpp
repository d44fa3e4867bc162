// polylog: catalog inspection, verification and evaluation of polylogarithm
// functional equations.
//
// exit codes: 0 all requested checks pass, 1 a check failed, 2 usage error,
// 3 internal error

#include "polylog/proof_algebra.hpp"
#include "polylog/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace polylog;
using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint64_t default_seed() {
  if (const char* s = std::getenv("POLYLOG_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0') return v;
    throw UsageError("POLYLOG_SEED must be a non-negative integer");
  }
  return 0;
}

// "a", "bi", "a+bi", "a-bi", "i", "-i", "inf"
ProjectiveComplex parse_complex(std::string s, mpfr_prec_t bits) {
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw UsageError("empty complex literal");
  if (s == "inf") return ProjectiveComplex::infinity(bits);
  auto real = [&](const std::string& t) {
    if (t.empty() || t == "+") return BigReal(1, bits);
    if (t == "-") return BigReal(-1, bits);
    std::size_t pos = 0;
    (void)std::stod(t, &pos);  // grammar check only
    if (pos != t.size()) throw UsageError("bad number '" + t + "'");
    return BigReal::from_string(t, bits);
  };
  try {
    if (s.back() != 'i') return ProjectiveComplex(BigComplex(real(s), BigReal(bits)));
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        split = k;
        break;
      }
    if (split == std::string::npos) return ProjectiveComplex(BigComplex(BigReal(bits), real(body)));
    return ProjectiveComplex(BigComplex(real(body.substr(0, split)), real(body.substr(split))));
  } catch (const std::logic_error&) {
    throw UsageError("bad complex literal '" + s + "' (expected a+bi)");
  }
}

json policy_json(const PrecisionPolicy& p) {
  return {{"digits", p.digits}, {"guard", p.guard}, {"slack", p.slack}, {"tolerance_exp", p.tolerance_exponent()}};
}

json envelope(const std::string& command, std::uint64_t seed) {
  return {{"schema", kReportSchema}, {"version", kToolVersion}, {"command", command}, {"seed", seed}};
}

void emit(const json& j, bool as_json, const std::string& human) {
  if (as_json) std::cout << j.dump(2) << "\n";
  else std::cout << human;
}

std::string status(bool ok) { return ok ? "pass" : "fail"; }

EquationSpec load_equation(const std::string& name, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    return equation_from_json(json::parse(in));
  }
  try {
    return catalog_lookup(name);
  } catch (const std::out_of_range&) {
    throw UsageError("unknown equation '" + name + "' (see `polylog list`)");
  }
}

std::string human_sum(const FormalSum& s) {
  std::ostringstream os;
  for (auto& t : s.canonical()) os << "  " << t.coeff.get_str() << "  [" << to_string(t.arg) << "]\n";
  return os.str();
}

std::string human_check(const CheckReport& r) {
  std::ostringstream os;
  os << r.name << ": " << status(r.pass()) << "\n";
  for (auto& it : r.items) {
    os << "  " << (it.pass ? "ok   " : "FAIL ") << it.label;
    if (it.detail.is_number()) os << "  (" << it.detail.dump() << ")";
    os << "\n";
  }
  for (auto& [k, v] : r.info.items()) os << "  info " << k << " = " << v.dump() << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polylog: functional equations of polylogarithms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  bool as_json = false;
  std::uint64_t seed = 0;
  int jobs = 1, digits = 50, slack = 15;

  auto common = [&](CLI::App* sc, bool seeded) {
    sc->add_flag("--json", as_json, "JSON output");
    if (seeded) {
      sc->add_option("--seed", seed, "random seed (default $POLYLOG_SEED or 0)");
      sc->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
    }
  };

  auto* list = app.add_subcommand("list", "list catalog equations");
  common(list, false);

  std::string eq_name, eq_file;
  auto* show = app.add_subcommand("show", "print an equation");
  show->add_option("equation", eq_name, "catalog name")->required();
  common(show, false);

  std::string mode = "both";
  int points = 20, trials = 8, functionals = 4;
  long height = 40;
  auto* verify = app.add_subcommand("verify", "symbolic and/or numerical verification");
  auto* eq_opt = verify->add_option("--equation", eq_name, "catalog name");
  verify->add_option("--file", eq_file, "equation JSON (as written by export)")->excludes(eq_opt);
  verify->add_option("--mode", mode, "symbolic|numeric|both")
      ->check(CLI::IsMember({"symbolic", "numeric", "both"}));
  verify->add_option("--points", points, "numeric sample points")->check(CLI::Range(1, 100000));
  verify->add_option("--trials", trials, "specializations R")->check(CLI::Range(1, 100000));
  verify->add_option("--functionals", functionals, "functionals K per specialization")->check(CLI::Range(1, 100000));
  verify->add_option("--height", height, "height of specializations and functionals")->check(CLI::Range(2L, 1000000L));
  verify->add_option("--precision", digits, "decimal digits P")->check(CLI::Range(20, 2000));
  verify->add_option("--slack", slack, "tolerance is 10^(-P+slack)")->check(CLI::Range(0, 2000));
  common(verify, true);

  int m = 2;
  std::string zs;
  auto* ecl = app.add_subcommand("eval-cl", "evaluate the one-valued polylogarithm CL_m");
  auto* eli = app.add_subcommand("eval-li", "evaluate Li_m (principal branch)");
  for (auto* sc : {ecl, eli}) {
    sc->add_option("--m", m, "weight")->required()->check(CLI::Range(1, 64));
    sc->add_option("--z", zs, "argument, a+bi")->required();
    sc->add_option("--precision", digits, "decimal digits")->check(CLI::Range(10, 5000));
    common(sc, false);
  }

  std::vector<std::string> coeff_strs;
  auto* roots = app.add_subcommand("roots", "all complex roots of c0 + c1 x + ... + cd x^d");
  roots->add_option("--coeffs", coeff_strs, "ascending coefficients, a+bi each")->required()->delimiter(',');
  roots->add_option("--precision", digits, "decimal digits")->check(CLI::Range(20, 2000));
  common(roots, false);

  std::string check_name;
  auto* check = app.add_subcommand("check", "run a structural check");
  check->add_option("--name", check_name, "check name (see --list)");
  bool list_checks = false;
  check->add_flag("--list", list_checks, "list check names");
  common(check, true);

  bool all = false, timing = false;
  std::vector<int> only;
  auto* report = app.add_subcommand("report", "acceptance suite");
  report->add_flag("--all", all, "run every criterion");
  report->add_option("--only", only, "criterion ids")->delimiter(',')->check(CLI::Range(1, kCriterionCount));
  report->add_flag("--timing", timing, "include timings in JSON");
  common(report, true);

  std::string out_path;
  auto* exp = app.add_subcommand("export", "write catalog equations as JSON");
  exp->add_option("--name", eq_name, "single equation (default: all)");
  auto* out_opt = exp->add_option("--out", out_path, "output file (default: stdout)");
  std::string out_dir;
  bool check_dir = false;
  exp->add_option("--dir", out_dir, "one <name>.json per equation in this directory")->excludes(out_opt);
  exp->add_flag("--check", check_dir, "with --dir: compare instead of writing; exit 1 on any difference");

  try {
    seed = default_seed();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::string cmd;
    for (int i = 1; i < argc; ++i) cmd += (i > 1 ? " " : "") + std::string(argv[i]);

    if (*list) {
      json j = envelope(cmd, seed);
      std::ostringstream os;
      for (auto& n : catalog_names()) {
        EquationSpec e = catalog_lookup(n);
        j["equations"].push_back({{"name", n}, {"weight", e.weight}, {"terms", e.sum.size()}});
        os << n << "  weight " << e.weight << "  " << e.sum.size() << " terms\n";
      }
      emit(j, as_json, os.str());
      return 0;
    }

    if (*show) {
      EquationSpec e = load_equation(eq_name, "");
      json j = envelope(cmd, seed);
      j["equation"] = e.to_json();
      std::ostringstream os;
      os << e.name << "  (weight " << e.weight << ", " << e.sum.size() << " terms, "
         << count_distinct_up_to_inversion(e.sum) << " classes up to inversion)\n";
      os << "variables:";
      for (auto& v : e.variables) os << " " << v;
      os << "\n";
      for (auto& c : e.constraints) os << "constraint: " << c << "\n";
      if (!e.source.empty()) os << "source: " << e.source << "\n";
      os << human_sum(e.sum);
      emit(j, as_json, os.str());
      return 0;
    }

    if (*verify) {
      if (eq_name.empty() && eq_file.empty()) throw UsageError("verify needs --equation or --file");
      EquationSpec e = load_equation(eq_name, eq_file);
      PrecisionPolicy pol;
      try {
        pol = PrecisionPolicy(digits, 10, slack);
      } catch (const std::exception& ex) {
        throw UsageError(ex.what());
      }
      json j = envelope(cmd, seed);
      j["equation"] = e.name;
      j["precision"] = policy_json(pol);
      std::ostringstream os;
      bool ok = true;
      const bool fourlog_eq = e.name.rfind("fourlog-n", 0) == 0;
      if (mode != "numeric") {
        if (fourlog_eq) {
          // the arguments live on roots of x^(n-1)(x-1) = t; the symbolic side is the formal log space
          int n = std::stoi(e.name.substr(9));
          if (n > kProofCap) throw UsageError("symbolic four-log check is available for n <= 6");
          ProofReport a = verify_identities(n), b = verify_claim_and_theorem(n);
          bool pass = a.all_pass() && b.all_pass();
          j["symbolic"] = {{"status", status(pass)}, {"identities", a.to_json()}, {"claim", b.to_json()}};
          os << "symbolic  " << status(pass) << "  (formal log space, n = " << n << ")\n";
          ok = ok && pass;
        } else {
          KernelOptions ko;
          ko.trials = trials;
          ko.functionals = functionals;
          ko.height = height;
          ko.seed = seed;
          ko.jobs = jobs;
          Verdict v = kernel_test(e.sum, e.weight, ko);
          j["symbolic"] = v.to_json();
          os << "symbolic  " << status(v.pass) << "  (R=" << trials << ", K=" << functionals << ", H=" << height
             << ", seed=" << seed << ")\n";
          if (v.witness) os << "  witness: " << v.to_json()["witness"].dump() << "\n";
          ok = ok && v.pass;
        }
      }
      if (mode != "symbolic") {
        NumericVerdict v = fourlog_eq ? verify_fourlog_numeric(std::stoi(e.name.substr(9)), points, pol, seed,
                                                               std::nullopt, jobs)
                                      : verify_numeric(e, points, pol, seed, jobs);
        j["numeric"] = v.to_json();
        os << "numeric   " << status(v.pass) << "  max |CL_" << e.weight << "| = " << v.max_abs.str(6) << " vs "
           << v.tolerance.str(3) << " over " << v.points << " points\n";
        ok = ok && v.pass;
      }
      j["status"] = status(ok);
      emit(j, as_json, os.str());
      return ok ? 0 : 1;
    }

    if (*ecl || *eli) {
      PrecisionPolicy pol(std::max(digits, 30), 10, 15);
      if (digits < 30) pol = PrecisionPolicy(digits, 2, 2);
      ProjectiveComplex z = parse_complex(zs, pol.bits() + 32);
      json j = envelope(cmd, 0);
      j["m"] = m;
      j["z"] = z.str(digits);
      j["precision"] = digits;
      std::string val;
      if (*ecl) {
        if (m < 2) throw UsageError("CL_m needs m >= 2");
        val = cl_m(m, z, pol).str(digits);
        j["cl"] = val;
      } else {
        if (z.infinite) throw UsageError("Li_m is not defined at infinity");
        val = li_m(m, z.value, pol).str(digits);
        j["li"] = val;
      }
      emit(j, as_json, val + "\n");
      return 0;
    }

    if (*roots) {
      PrecisionPolicy pol(digits, 10, 15);
      std::vector<BigComplex> c;
      for (auto& s : coeff_strs) {
        ProjectiveComplex p = parse_complex(s, pol.bits() + 32);
        if (p.infinite) throw UsageError("coefficients must be finite");
        c.push_back(p.value);
      }
      while (!c.empty() && c.back().is_zero()) c.pop_back();
      if (c.size() < 2) throw UsageError("need a polynomial of degree >= 1");
      json j = envelope(cmd, 0);
      std::ostringstream os;
      for (auto& r : poly_roots(c, pol)) {
        j["roots"].push_back(r.str(digits));
        os << r.str(digits) << "\n";
      }
      emit(j, as_json, os.str());
      return 0;
    }

    if (*check) {
      if (list_checks) {
        for (auto& n : check_names()) std::cout << n << "\n";
        return 0;
      }
      if (check_name.empty()) throw UsageError("check needs --name");
      SuiteOptions so{seed, jobs, {}};
      CheckReport r;
      try {
        r = run_check(check_name, so);
      } catch (const std::out_of_range&) {
        throw UsageError("unknown check '" + check_name + "' (see check --list)");
      }
      json j = envelope(cmd, seed);
      j["check"] = r.to_json();
      std::string human = human_check(r);
      if (check_name == "xi7-term-count") human = std::to_string(r.info.value("count", 0)) + "\n" + human;
      emit(j, as_json, human);
      return r.pass() ? 0 : 1;
    }

    if (*report) {
      if (!all && only.empty()) throw UsageError("report needs --all or --only");
      SuiteOptions so{seed, jobs, all ? std::vector<int>{} : only};
      json j = envelope(cmd, seed);
      j["criteria"] = json::array();
      bool ok = true;
      run_acceptance(so, [&](const CriterionResult& r) {
        bool xf = expected_failures().count(r.id) > 0;
        json row = r.to_json(timing);
        row["expected"] = xf ? "fail" : "pass";
        j["criteria"].push_back(row);
        ok = ok && r.pass;
        if (!as_json) {
          std::printf("criterion %2d  %s  %s%s\n", r.id, r.pass ? "pass" : "FAIL", r.title.c_str(),
                      xf ? "  (expected to fail)" : "");
          std::fflush(stdout);
        }
      });
      j["status"] = status(ok);
      if (as_json) std::cout << j.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    if (*exp) {
      std::vector<std::string> names = eq_name.empty() ? catalog_names() : std::vector<std::string>{eq_name};
      if (!out_dir.empty()) {
        namespace fs = std::filesystem;
        if (!check_dir) fs::create_directories(out_dir);
        int stale = 0;
        for (auto& n : names) {
          std::string text = load_equation(n, "").to_json().dump(2) + "\n";
          fs::path f = fs::path(out_dir) / (n + ".json");
          if (check_dir) {
            std::ifstream in(f);
            std::stringstream have;
            have << in.rdbuf();
            if (!in || have.str() != text) {
              std::cout << "stale: " << f.string() << "\n";
              ++stale;
            }
          } else {
            std::ofstream(f) << text;
          }
        }
        return stale ? 1 : 0;
      }
      if (check_dir) throw UsageError("--check needs --dir");
      json j = envelope("export", 0);
      j["equations"] = json::array();
      for (auto& n : names) j["equations"].push_back(load_equation(n, "").to_json());
      if (!eq_name.empty()) j = j["equations"][0];
      if (out_path.empty()) std::cout << j.dump(2) << "\n";
      else std::ofstream(out_path) << j.dump(2) << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
