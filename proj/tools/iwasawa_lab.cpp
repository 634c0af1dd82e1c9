#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iwlab/report.hpp"

using namespace iwlab;

namespace {

enum Exit { kOk = 0, kReject = 2, kIndeterminate = 3, kUsage = 4 };

struct RunConfig {
  std::string field = "Q";
  long p = 3;
  long N = 8;
  bool json = false;
  unsigned seed = 1;
};

long default_precision() {
  const char* env = std::getenv("IWASAWA_LAB_PRECISION");
  if (!env || !*env) return 8;
  try {
    std::size_t used = 0;
    long n = std::stol(env, &used);
    if (used != std::string(env).size() || n < 1) throw std::invalid_argument("bad");
    return n;
  } catch (const std::exception&) {
    throw UsageError("IWASAWA_LAB_PRECISION must be a positive integer");
  }
}

struct Outcome {
  Json result;
  int code = kOk;
};

void print_text(const Json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    std::cout << indent << it.key() << ": ";
    if (v.is_string())
      std::cout << v.get<std::string>() << "\n";
    else if (v.is_object()) {
      std::cout << "\n";
      print_text(v, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      std::cout << "\n";
      for (const auto& e : v) {
        std::cout << indent << "  -";
        std::string sep = " ";
        for (auto jt = e.begin(); jt != e.end(); ++jt) {
          std::cout << sep << jt.key() << "=" << (jt.value().is_string() ? jt.value().get<std::string>() : jt.value().dump());
          sep = ", ";
        }
        std::cout << "\n";
      }
    } else {
      std::cout << v.dump() << "\n";
    }
  }
}

int emit(const RunConfig& cfg, const std::string& command, const Outcome& out) {
  if (cfg.json) {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["exit_code"] = out.code;
    doc["result"] = out.result;
    std::cout << doc.dump(2) << "\n";
  } else {
    print_text(out.result);
  }
  return out.code;
}

int emit_error(const RunConfig& cfg, const std::string& command, int code, const std::string& msg) {
  if (cfg.json) {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["exit_code"] = code;
    doc["error"] = msg;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
  return code;
}

int verdict_code(Verdict v) { return v == Verdict::yes ? kOk : v == Verdict::no ? kReject : kIndeterminate; }

// --------------------------------------------------------------- selftest

Outcome selftest(const RunConfig& cfg) {
  Json checks = Json::array();
  bool all = true;
  auto check = [&](const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    std::string err;
    try {
      ok = f();
    } catch (const std::exception& e) {
      err = e.what();
    }
    Json c{{"check", name}, {"pass", ok}};
    if (!err.empty()) c["error"] = err;
    checks.push_back(c);
    all = all && ok;
  };
  auto Qf = QuadraticField::rational();
  auto q = [&](const QuadraticField& K, const char* s) { return parse_prime(K, s); };
  check("log<2>/log(4) = 5 mod 9", [&] {
    return frobenius_image(GaloisGroupG(Qf, 3, 2), q(Qf, "2")).degree.lift() == 5;
  });
  check("a1(2,5) = 4 mod 9", [&] { return mq_generator(Qf, 3, q(Qf, "2"), q(Qf, "5"), 3).a1.lift() == 4; });
  check("Cl(63)(3) = Z/3 x Z/3", [&] {
    return RayClassGroup(Qf, Ideal::rational(0, 63), 3).group().invariants() == std::vector<Integer>{3, 3};
  });
  check("h(Q(sqrt 79)) = 3", [&] { return QuadraticField(Integer(79)).class_group().order() == 3; });
  check("even criterion (Q, 3, 7)", [&] { return even_criterion(Qf, 3, q(Qf, "7"), 2).pass == Verdict::yes; });
  check("Leopoldt defect Q(sqrt 2), p = 5", [&] {
    auto r = leopoldt_defect(QuadraticField(Integer(2)), 5, cfg.N);
    return r.delta == 0 && r.certified;
  });
  check("m_Q = 9 for Q(sqrt 29), p = 3", [&] {
    QuadraticField K(Integer(29));
    return mq_order(K, 3, q(K, "2"), q(K, "(5; 4; 1)"), 3).m_Q == 9;
  });
  check("alpha round trip with random rescalings", [&] {
    QuadraticField K(Integer(29));
    auto q1 = q(K, "2"), q2 = q(K, "(5; 4; 1)");
    auto c = construct_alpha(K, 3, q1, q2, 3);
    if (c.status != Verdict::yes || c.a_exponent != 2) return false;
    std::mt19937 rng(cfg.seed);
    for (int i = 0; i < 5; ++i) {
      long s = static_cast<long>(rng() % 3);
      Integer k = pow(Integer(3), static_cast<unsigned long>(s)) * (3 * static_cast<long>(rng() % 20) + 1);
      auto r = verify_alpha(c.alpha.pow(PAdicNumber(3, k, 12)), K, 3, q1, q2, 3);
      if (r.status != Verdict::yes || r.a_exponent != 2 + s) return false;
    }
    return true;
  });
  check("Greenberg-Wiles Q_p(1) fixture", [&] { return greenberg_wiles(0, 1, {{0, 0}, {0, 0}}) == -1; });
  return {Json{{"seed", cfg.seed}, {"checks", checks}, {"pass", all}}, all ? kOk : kReject};
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string command;
  try {
    cfg.N = default_precision();
  } catch (const UsageError& e) {
    return emit_error(cfg, "", kUsage, e.what());
  }

  CLI::App app{"Finite-precision Iwasawa theory over Q and real quadratic fields"};
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "emit one JSON document");

  auto common = [&](CLI::App* sub, bool with_p, bool with_prec) {
    sub->add_option("--field", cfg.field, "Q or Q(sqrt{d})")->capture_default_str();
    if (with_p) sub->add_option("--p", cfg.p, "odd prime p")->capture_default_str();
    if (with_prec) sub->add_option("--prec", cfg.N, "p-adic precision N")->capture_default_str();
    sub->add_flag("--json", cfg.json, "emit one JSON document");
  };

  std::string ell, q1, q2, modulus = "1";
  std::vector<std::string> qs, extra_primes, basis, exponents, locals;
  long h0v = 0, h0vd = 0, dmax = 50;
  std::vector<long> primes{3, 5, 7};

  auto* factor_cmd = app.add_subcommand("factor", "splitting of a rational prime");
  common(factor_cmd, false, false);
  factor_cmd->add_option("--ell", ell, "rational prime")->required();

  auto* cl_cmd = app.add_subcommand("classgroup", "class group");
  common(cl_cmd, false, false);

  auto* unit_cmd = app.add_subcommand("unit", "fundamental unit");
  common(unit_cmd, false, false);

  auto* ray_cmd = app.add_subcommand("rayclass", "p-part of a ray class group");
  common(ray_cmd, true, false);
  ray_cmd->add_option("--modulus", modulus, "rational integer part of the modulus")->capture_default_str();
  ray_cmd->add_option("--prime", extra_primes, "prime ideals multiplied into the modulus");

  auto* frob_cmd = app.add_subcommand("frobenius", "G_N, Frobenius classes and degrees");
  common(frob_cmd, true, true);
  frob_cmd->add_option("--q", qs, "prime ideals");

  auto* mq_cmd = app.add_subcommand("mq", "degree-zero Frobenius module and m_Q");
  common(mq_cmd, true, true);
  mq_cmd->add_option("--q1", q1)->required();
  mq_cmd->add_option("--q2", q2)->required();

  auto* alpha_cmd = app.add_subcommand("alpha", "construct or verify the Kummer element alpha");
  common(alpha_cmd, true, true);
  alpha_cmd->add_option("--q1", q1)->required();
  alpha_cmd->add_option("--q2", q2)->required();
  alpha_cmd->add_option("--basis", basis, "S-units of a given alpha (verify mode)");
  alpha_cmd->add_option("--exponents", exponents, "integer exponents, one per basis element");

  auto* leo_cmd = app.add_subcommand("leopoldt", "Leopoldt defect");
  common(leo_cmd, true, true);

  auto* even_cmd = app.add_subcommand("even-check", "inertia order against e(q)");
  common(even_cmd, true, true);
  even_cmd->add_option("--q", q1)->required();

  auto* gw_cmd = app.add_subcommand("gw", "Greenberg-Wiles right-hand side");
  gw_cmd->add_option("--h0v", h0v)->required();
  gw_cmd->add_option("--h0vd", h0vd)->required();
  gw_cmd->add_option("--local", locals, "dim_L,h0 per place");
  gw_cmd->add_flag("--json", cfg.json, "emit one JSON document");

  auto* scan_cmd = app.add_subcommand("scan", "Leopoldt defect scan over real quadratic fields");
  scan_cmd->add_option("--dmax", dmax)->capture_default_str();
  scan_cmd->add_option("--primes", primes)->delimiter(',')->capture_default_str();
  scan_cmd->add_option("--prec", cfg.N)->capture_default_str();
  scan_cmd->add_flag("--json", cfg.json, "emit one JSON document");

  auto* self_cmd = app.add_subcommand("selftest", "quick fixture battery");
  self_cmd->add_option("--seed", cfg.seed)->capture_default_str();
  self_cmd->add_option("--prec", cfg.N)->capture_default_str();
  self_cmd->add_flag("--json", cfg.json, "emit one JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.N < 1) throw UsageError("precision must be at least 1");
    Outcome out;
    if (command == "gw") {
      std::vector<LocalTerm> terms;
      for (const auto& s : locals) {
        auto comma = s.find(',');
        if (comma == std::string::npos) throw UsageError("--local expects dim_L,h0");
        terms.push_back({std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))});
      }
      out.result = Json{{"h0_V", h0v}, {"h0_Vdual", h0vd}, {"value", greenberg_wiles(h0v, h0vd, terms)}};
      return emit(cfg, command, out);
    }
    if (command == "scan") {
      auto s = defect_never_one_scan(dmax, primes, cfg.N);
      out.result = scan_json(s);
      out.code = s.violations ? kReject : s.indeterminate ? kIndeterminate : kOk;
      return emit(cfg, command, out);
    }
    if (command == "selftest") return emit(cfg, command, selftest(cfg));

    QuadraticField K = QuadraticField::parse(cfg.field);
    if (command == "factor") {
      Integer l(ell);
      out.result = splitting_json(K, l, factor_rational_prime(K, l));
    } else if (command == "classgroup") {
      out.result = class_group_json(K);
    } else if (command == "unit") {
      if (K.is_rational()) throw UsageError("Q has no fundamental unit");
      out.result = unit_json(K);
    } else if (command == "rayclass") {
      Ideal m = Ideal::rational(K.disc(), Integer(modulus));
      for (const auto& s : extra_primes) m = m * parse_prime(K, s).ideal;
      out.result = ray_class_json(RayClassGroup(K, m, cfg.p));
    } else if (command == "frobenius") {
      GaloisGroupG G(K, cfg.p, cfg.N);
      std::vector<PrimeIdeal> ps;
      for (const auto& s : qs) ps.push_back(parse_prime(K, s));
      out.result = galois_json(G, ps);
      out.result["stable"] = is_stable(G);
    } else if (command == "mq") {
      auto r = mq_order(K, cfg.p, parse_prime(K, q1), parse_prime(K, q2), cfg.N);
      out.result = mq_json(K, r);
      out.code = r.stable ? kOk : kIndeterminate;
    } else if (command == "alpha") {
      auto P1 = parse_prime(K, q1), P2 = parse_prime(K, q2);
      KummerCertificate c;
      if (basis.empty()) {
        c = construct_alpha(K, cfg.p, P1, P2, cfg.N);
      } else {
        if (basis.size() != exponents.size()) throw UsageError("--basis and --exponents differ in length");
        SUnitProduct a;
        a.p = cfg.p;
        for (std::size_t i = 0; i < basis.size(); ++i) {
          a.basis.push_back(parse_element(K, basis[i]));
          a.labels.push_back(basis[i]);
          a.exponents.emplace_back(cfg.p, Integer(exponents[i]), cfg.N + 4);
        }
        c = verify_alpha(a, K, cfg.p, P1, P2, cfg.N);
      }
      out.result = certificate_json(c);
      out.code = verdict_code(c.status);
    } else if (command == "leopoldt") {
      auto r = leopoldt_defect(K, cfg.p, cfg.N);
      out.result = leopoldt_json(K, cfg.p, r);
      out.code = r.certified ? kOk : kIndeterminate;
    } else if (command == "even-check") {
      auto q = parse_prime(K, q1);
      auto r = even_criterion(K, cfg.p, q, cfg.N);
      out.result = even_json(K, cfg.p, q, r);
      out.code = verdict_code(r.pass);
    }
    return emit(cfg, command, out);
  } catch (const PrecisionError& e) {
    return emit_error(cfg, command, kIndeterminate, e.what());
  } catch (const UsageError& e) {
    return emit_error(cfg, command, kUsage, e.what());
  } catch (const UnsupportedError& e) {
    return emit_error(cfg, command, kUsage, e.what());
  } catch (const std::invalid_argument& e) {
    return emit_error(cfg, command, kUsage, e.what());
  } catch (const std::exception& e) {
    return emit_error(cfg, command, 1, e.what());
  }
}
