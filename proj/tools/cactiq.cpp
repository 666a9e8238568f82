// Command-line front end: enumeration, family construction, exact and
// numeric spectra, and claim verification with JSONL reports.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cactiq/enumerate.hpp"
#include "cactiq/families.hpp"
#include "cactiq/graph6.hpp"
#include "cactiq/spectra.hpp"
#include "cactiq/verify.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kClaimFailure = 1;
constexpr int kUsageError = 2;

int emit_reports(const std::vector<cactiq::VerificationReport>& reports, const std::string& out_path) {
  if (out_path.empty()) {
    cactiq::write_jsonl(std::cout, reports);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open " + out_path + " for writing");
    cactiq::write_jsonl(out, reports);
  }
  for (const auto& r : reports) {
    if (!r.pass) return kClaimFailure;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signless Laplacian spectral radius toolkit for cacti"};
  app.require_subcommand(1);
  int result = kPass;

  auto* enumerate = app.add_subcommand("enumerate", "List non-isomorphic cacti as graph6 lines");
  int en_n = 0;
  std::optional<int> en_m, en_k;
  std::string en_format = "graph6";
  enumerate->add_option("--n", en_n, "Number of vertices")->required();
  enumerate->add_option("--matching", en_m, "Exact matching number");
  enumerate->add_option("--pendants", en_k, "Exact number of pendant vertices");
  enumerate->add_option("--format", en_format)->check(CLI::IsMember({"graph6", "count"}));
  enumerate->callback([&] {
    const auto graphs = cactiq::enumerate_cacti(en_n, {en_m, en_k});
    if (en_format == "count") {
      std::cout << graphs.size() << '\n';
    } else {
      for (const auto& g : graphs) std::cout << cactiq::to_graph6(g) << '\n';
    }
  });

  auto* family = app.add_subcommand("family", "Build H_s^k or L_s^k");
  std::string fam_name;
  int fam_s = 0, fam_k = 0;
  std::string fam_emit = "graph6";
  family->add_option("--family", fam_name)->required()->check(CLI::IsMember({"H", "L"}));
  family->add_option("--s", fam_s)->required();
  family->add_option("--k", fam_k)->required();
  family->add_option("--emit", fam_emit)->check(CLI::IsMember({"graph6", "charpoly"}));
  family->callback([&] {
    const cactiq::Graph g = fam_name == "H" ? cactiq::build_H(fam_s, fam_k) : cactiq::build_L(fam_s, fam_k);
    if (fam_emit == "graph6") {
      std::cout << cactiq::to_graph6(g) << '\n';
    } else {
      std::cout << cactiq::to_json(cactiq::char_poly(g)).dump() << '\n';
    }
  });

  auto* charpoly = app.add_subcommand("charpoly", "Exact det(xI - Q), ascending coefficients");
  std::string cp_graph;
  charpoly->add_option("--graph6", cp_graph)->required();
  charpoly->callback([&] {
    const auto p = cactiq::char_poly(cactiq::from_graph6(cp_graph));
    std::cout << cactiq::to_json(p).dump() << '\n';
  });

  auto* radius = app.add_subcommand("radius", "Largest eigenvalue of Q and its Perron vector");
  std::string rad_graph;
  double rad_tol = 1e-9;
  radius->add_option("--graph6", rad_graph)->required();
  radius->add_option("--tol", rad_tol, "Residual tolerance");
  radius->callback([&] {
    try {
      const auto r = cactiq::spectral_radius(cactiq::from_graph6(rad_graph), rad_tol);
      nlohmann::json j{{"radius", r.radius},
                       {"residual", r.residual},
                       {"iterations", r.iterations},
                       {"perron", std::vector<double>(r.perron.data(), r.perron.data() + r.perron.size())}};
      std::cout << j.dump() << '\n';
    } catch (const cactiq::ConvergenceError& e) {
      std::cerr << "error: " << e.what() << " (best residual " << e.best_residual() << ")\n";
      result = kClaimFailure;
    }
  });

  auto* verify = app.add_subcommand("verify", "Check a claim and write a JSONL report");
  std::string v_claim, v_out;
  int v_n = 0, v_trials = 200;
  std::optional<int> v_m, v_k;
  std::uint64_t v_seed = 42;
  verify->add_option("--claim", v_claim)->required();
  verify->add_option("--n", v_n)->required();
  verify->add_option("--m", v_m);
  verify->add_option("--k", v_k);
  verify->add_option("--seed", v_seed);
  verify->add_option("--trials", v_trials);
  verify->add_option("--out", v_out, "Write the report here instead of stdout");
  verify->callback([&] {
    const cactiq::Claim claim = cactiq::parse_claim(v_claim);
    cactiq::VerificationReport report;
    if (claim == cactiq::Claim::Formulas) {
      report = cactiq::verify_formulas(v_n);
    } else if (claim == cactiq::Claim::Monotonicity) {
      report = cactiq::verify_monotonicity(v_trials, v_seed);
    } else {
      report = cactiq::verify_extremal(claim, v_n, v_m, v_k);
    }
    result = emit_reports({report}, v_out);
  });

  auto* formulas = app.add_subcommand("check-formulas", "Closed-form polynomials against determinants");
  int f_max = 24;
  formulas->add_option("--max-n", f_max)->required();
  formulas->callback([&] { result = emit_reports({cactiq::verify_formulas(f_max)}, ""); });

  std::cout << std::setprecision(std::numeric_limits<double>::max_digits10);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return result;
}
