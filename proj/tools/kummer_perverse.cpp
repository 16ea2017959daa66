// kummer-perverse: perverse series, decomposition tables, and theorem checks
// for Hilbert schemes and generalized Kummer varieties of fibered group
// surfaces.
//
//   kummer-perverse series <surface|hilbert|kummer|kummer-quotient> [options]
//   kummer-perverse check  <multiplicativity|strong-splitting|duality|
//                           diagonal|ring-axioms|frobenius> [options]
//   kummer-perverse partitions [options]
//
// Exit status: 0 all assertions passed, 1 violations found, 2 usage or
// feasibility refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kummer/decomp.hpp"

using namespace kummer;

namespace {

struct RunConfig {
  std::string target;
  std::string case_name = "abelian";
  int n = 1;
  std::string mode = "exhaustive";
  long long samples = 10000;
  std::uint64_t seed = 20240801;
  std::string format = "text";
  int jobs = 0;
  std::optional<int> torsion_rank;
  std::vector<long long> torsion_factors;
  std::string output;
};

int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

int refuse(const std::string& msg) {
  std::cerr << "refusing: " << msg << "\n";
  return 2;
}

std::optional<long long> env_max_n() {
  const char* v = std::getenv("KP_MAX_N");
  if (!v || !*v) return std::nullopt;
  return std::atoll(v);
}

SurfaceModel build_model(const RunConfig& cfg) {
  auto c = SurfaceModel::parse_case(cfg.case_name);
  if (!c) throw std::invalid_argument("unknown surface case '" + cfg.case_name + "'");
  SurfaceConfig sc;
  sc.surface_case = *c;
  sc.torsion_rank = cfg.torsion_rank;
  sc.torsion_factors = cfg.torsion_factors;
  return SurfaceModel::make(sc);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw std::runtime_error("cannot open output file " + cfg.output);
  out << text;
}

std::string render_series(const RunConfig& cfg, const PerversePolynomial& pp) {
  std::ostringstream os;
  auto betti = pp.betti();
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["series"] = cfg.target;
    j["case"] = cfg.case_name;
    j["n"] = cfg.n;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [k, c] : pp.terms())
      j["terms"].push_back({{"d", k.first}, {"p", k.second}, {"c", c.str()}});
    j["betti"] = nlohmann::ordered_json::array();
    for (const auto& b : betti) j["betti"].push_back(b.str());
    j["total"] = pp.total().str();
    os << j.dump(2) << "\n";
    return os.str();
  }
  if (cfg.format == "csv") {
    os << "d,p,c\n";
    for (const auto& [k, c] : pp.terms())
      os << k.first << "," << k.second << "," << c << "\n";
    os << "betti";
    for (const auto& b : betti) os << "," << b;
    os << "\n";
    return os.str();
  }
  int maxd = pp.max_degree(), maxp = pp.max_perversity();
  if (cfg.format == "latex") {
    os << "\\begin{tabular}{c|";
    for (int p = 0; p <= maxp; ++p) os << "c";
    os << "|c}\n$\\dim$";
    os << " & $P_0$";
    for (int p = 1; p <= maxp; ++p) os << " & $\\mathrm{Gr}^P_" << p << "$";
    os << " & $t=1$ \\\\\n\\hline\n";
    for (int d = 0; d <= maxd; ++d) {
      os << "$H^" << d << "$";
      for (int p = 0; p <= maxp; ++p) {
        BigInt c = pp.at(d, p);
        os << " & " << (c == 0 ? std::string("") : c.str());
      }
      os << " & " << betti[d] << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
  }
  // text
  os << "series: " << cfg.target << "  case: " << cfg.case_name << "  n: " << cfg.n << "\n";
  std::vector<size_t> width(maxp + 1, 1);
  for (int p = 0; p <= maxp; ++p)
    for (int d = 0; d <= maxd; ++d) width[p] = std::max(width[p], pp.at(d, p).str().size());
  os << " d |";
  for (int p = 0; p <= maxp; ++p) {
    std::string h = "p=" + std::to_string(p);
    width[p] = std::max(width[p], h.size());
    os << " " << std::string(width[p] - h.size(), ' ') << h;
  }
  os << " | t=1\n";
  for (int d = 0; d <= maxd; ++d) {
    os << (d < 10 ? " " : "") << d << " |";
    for (int p = 0; p <= maxp; ++p) {
      std::string cell = pp.at(d, p) == 0 ? "." : pp.at(d, p).str();
      os << " " << std::string(width[p] - cell.size(), ' ') << cell;
    }
    os << " | " << betti[d] << "\n";
  }
  os << "total: " << pp.total() << "\n";
  return os.str();
}

int cmd_series(const RunConfig& cfg) {
  long long bound = env_max_n().value_or(12);
  if (cfg.n < 1) return fail_usage("--n must be >= 1");
  if (cfg.n > bound)
    return refuse("series n=" + std::to_string(cfg.n) + " exceeds the feasibility bound (" +
                  std::to_string(bound) + "); set KP_MAX_N to raise it");
  SurfaceModel model = build_model(cfg);
  PerversePolynomial pp;
  if (cfg.target == "surface")
    pp = model.cohomology_pp();
  else if (cfg.target == "hilbert")
    pp = hilbert_pp(model, cfg.n);
  else if (cfg.target == "kummer")
    pp = kummer_pp(model, cfg.n);
  else if (cfg.target == "kummer-quotient")
    pp = kummer_quotient_pp(model, cfg.n);
  else
    return fail_usage("unknown series '" + cfg.target +
                      "' (expected surface|hilbert|kummer|kummer-quotient)");
  emit(cfg, render_series(cfg, pp));
  return 0;
}

int cmd_check(const RunConfig& cfg) {
  CheckOptions opts;
  opts.jobs = cfg.jobs;
  opts.seed = cfg.seed;
  opts.samples = cfg.samples;
  CheckMode mode;
  if (cfg.mode == "exhaustive")
    mode = CheckMode::Exhaustive;
  else if (cfg.mode == "sampled")
    mode = CheckMode::Sampled;
  else
    return fail_usage("unknown mode '" + cfg.mode + "' (expected exhaustive|sampled)");
  if (cfg.n < 1) return fail_usage("--n must be >= 1");

  long long bound;
  if (cfg.target == "multiplicativity" || cfg.target == "strong-splitting") {
    bound = mode == CheckMode::Exhaustive ? 3 : 4;
  } else if (cfg.target == "ring-axioms") {
    bound = 3;
  } else if (cfg.target == "duality" || cfg.target == "diagonal") {
    bound = 4;
  } else if (cfg.target == "frobenius") {
    bound = 6;
  } else {
    return fail_usage("unknown check '" + cfg.target +
                      "' (expected multiplicativity|strong-splitting|duality|diagonal|"
                      "ring-axioms|frobenius)");
  }
  if (auto env = env_max_n()) bound = *env;
  if (cfg.n > bound)
    return refuse("check " + cfg.target + " at n=" + std::to_string(cfg.n) +
                  " exceeds the feasibility bound (" + std::to_string(bound) +
                  "); set KP_MAX_N to raise it");
  if (cfg.n > 6 && cfg.target != "frobenius")
    return refuse("the orbifold model is capped at n=6");

  // every checker relies on the Frobenius/duality structure of the compact case
  SurfaceModel model = build_model(cfg);
  if (!model.compact())
    return refuse("check " + cfg.target + " needs the compact abelian model (got " +
                  model.name() + ")");

  CheckReport rep;
  if (cfg.target == "multiplicativity")
    rep = check_multiplicativity(model, cfg.n, mode, opts);
  else if (cfg.target == "strong-splitting")
    rep = check_strong_splitting(model, cfg.n, mode, opts);
  else if (cfg.target == "duality")
    rep = check_duality(cfg.n, opts);
  else if (cfg.target == "diagonal")
    rep = check_diagonal(cfg.n, opts);
  else if (cfg.target == "ring-axioms")
    rep = check_ring_axioms(model, cfg.n, opts);
  else
    rep = check_frobenius(model);

  emit(cfg, rep.json() + "\n");
  std::cerr << "check " << cfg.target << ": " << (rep.passed() ? "PASS" : "FAIL") << " (pairs="
            << rep.pairs_checked << ", violations=" << rep.violations.size() << ", "
            << rep.elapsed_ms << " ms)\n";
  return rep.passed() ? 0 : 1;
}

int cmd_partitions(const RunConfig& cfg) {
  long long bound = env_max_n().value_or(20);
  if (cfg.n < 1) return fail_usage("--n must be >= 1");
  if (cfg.n > bound || cfg.n > 20)
    return refuse("partitions n=" + std::to_string(cfg.n) + " exceeds the bound (" +
                  std::to_string(std::min(bound, 20LL)) + ")");
  SurfaceModel model = build_model(cfg);
  auto parts = enumerate_partitions(cfg.n);
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& nu : parts)
      rows.push_back({{"nu", nu.str()},
                      {"length", nu.length()},
                      {"gcd", nu.gcd()},
                      {"torsion", model.torsion_count(nu.gcd())},
                      {"class_size", conjugacy_class_size(nu)}});
    nlohmann::ordered_json j;
    j["n"] = cfg.n;
    j["case"] = cfg.case_name;
    j["partitions"] = rows;
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "nu,length,gcd,torsion,class_size\n";
    for (const auto& nu : parts)
      os << "\"" << nu.str() << "\"," << nu.length() << "," << nu.gcd() << ","
         << model.torsion_count(nu.gcd()) << "," << conjugacy_class_size(nu) << "\n";
  } else {
    os << "partitions: n=" << cfg.n << "  case: " << cfg.case_name << "\n";
    os << "nu                length  gcd  |A[gcd]|    class_size\n";
    for (const auto& nu : parts) {
      std::string s = nu.str();
      os << s << std::string(s.size() < 18 ? 18 - s.size() : 1, ' ');
      std::string l = std::to_string(nu.length());
      os << l << std::string(8 - l.size(), ' ');
      std::string g = std::to_string(nu.gcd());
      os << g << std::string(5 - g.size(), ' ');
      std::string t = std::to_string(model.torsion_count(nu.gcd()));
      os << t << std::string(t.size() < 12 ? 12 - t.size() : 1, ' ');
      os << conjugacy_class_size(nu) << "\n";
    }
  }
  emit(cfg, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perverse filtrations of Hilbert schemes and generalized Kummer varieties "
               "of fibered group surfaces"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool with_check_opts) {
    sub->add_option("--case", cfg.case_name,
                    "surface case: abelian|e-times-line|e-times-torus-quotient");
    sub->add_option("--n", cfg.n, "number of points n");
    sub->add_option("--format", cfg.format, "output format: text|json|csv|latex")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    sub->add_option("--torsion-rank", cfg.torsion_rank, "override the torsion rank");
    sub->add_option("--torsion-factors", cfg.torsion_factors,
                    "invariant factors of the torsion subgroup (0 = divisible)")
        ->delimiter(',');
    sub->add_option("--output", cfg.output, "write the result to a file instead of stdout");
    if (with_check_opts) {
      sub->add_option("--mode", cfg.mode, "exhaustive|sampled");
      sub->add_option("--samples", cfg.samples, "sampled-mode pair count");
      sub->add_option("--seed", cfg.seed, "sampled-mode RNG seed");
      sub->add_option("--jobs", cfg.jobs, "worker threads (0 = hardware)");
    }
  };

  CLI::App* series = app.add_subcommand("series", "print a perverse Poincare series");
  series->add_option("kind", cfg.target, "surface|hilbert|kummer|kummer-quotient")->required();
  add_common(series, false);

  CLI::App* check = app.add_subcommand("check", "run a theorem checker, JSON report to stdout");
  check
      ->add_option("kind", cfg.target,
                   "multiplicativity|strong-splitting|duality|diagonal|ring-axioms|frobenius")
      ->required();
  add_common(check, true);

  CLI::App* partitions = app.add_subcommand("partitions", "partition table for n");
  add_common(partitions, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (series->parsed()) return cmd_series(cfg);
    if (check->parsed()) return cmd_check(cfg);
    return cmd_partitions(cfg);
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }
}
