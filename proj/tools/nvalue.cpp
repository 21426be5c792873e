// nvalue: reproduce the p_n tables, Newton polytopes, coefficient scans and
// numeric axiom sweeps from the command line.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "nvalue/conjectures.hpp"
#include "nvalue/construct.hpp"
#include "nvalue/mvgroup.hpp"
#include "nvalue/newton.hpp"
#include "nvalue/polynomial_io.hpp"
#include "nvalue/symdecomp.hpp"

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

unsigned thread_budget() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NVALUE_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) threads = std::min<unsigned>(threads, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring NVALUE_THREADS=" << env << '\n';
    }
  }
  return threads;
}

std::string vertex_text(const nvalue::ExponentVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}


const CLI::Validator kAtLeastOne(
    [](std::string& s) -> std::string {
      long long v = 0;
      if (!CLI::detail::lexical_cast(s, v) || v < 1) return "must be an integer >= 1, got " + s;
      return {};
    },
    "INT>=1");

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplication polynomials of the n-valued group on C"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output;
  app.add_option("-o,--output", output, "Write to this file instead of stdout");

  unsigned pn_n = 1;
  std::string basis = "raw", pn_format = "text";
  bool factored = false;
  auto* pn = app.add_subcommand("pn", "Print p_n in the monomial or e-basis");
  pn->add_option("--n", pn_n, "Order n")->required()->check(kAtLeastOne);
  pn->add_option("--basis", basis, "raw | e")->check(CLI::IsMember({"raw", "e"}));
  pn->add_option("--format", pn_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  pn->add_flag("--factored", factored, "Show e-basis coefficients as prime-power products");

  unsigned newton_n = 1;
  std::string newton_format = "text";
  auto* newton = app.add_subcommand("newton", "Newton polytope of p_n");
  newton->add_option("--n", newton_n, "Order n")->required()->check(kAtLeastOne);
  newton->add_option("--format", newton_format, "text | json | svg")
      ->check(CLI::IsMember({"text", "json", "svg"}));

  std::string kind = "prime-power", scan_format = "text";
  unsigned max_n = 2;
  auto* scan = app.add_subcommand("scan", "Coefficient scans over n <= max-n");
  scan->add_option("--kind", kind, "prime-power | even-nonzero | factors")
      ->required()
      ->check(CLI::IsMember({"prime-power", "even-nonzero", "factors"}));
  scan->add_option("--max-n", max_n, "Largest order scanned")->required()->check(CLI::Range(2u, 1000u));
  scan->add_option("--format", scan_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  unsigned ax_n = 1, samples = 100;
  double tol = 1e-7;
  std::uint64_t seed = 0;
  std::string ax_format = "text";
  auto* axioms = app.add_subcommand("axioms", "Numeric unit/inverse/associativity/roots sweep");
  axioms->add_option("--n", ax_n, "Order n")->required()->check(kAtLeastOne);
  axioms->add_option("--samples", samples, "Number of random samples")->check(kAtLeastOne);
  axioms->add_option("--tol", tol, "Scale-aware comparison tolerance")->check(CLI::NonNegativeNumber);
  axioms->add_option("--seed", seed, "RNG seed");
  axioms->add_option("--format", ax_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  std::ostringstream out;
  int status = 0;
  try {
    if (*pn) {
      const auto p = nvalue::build_pn(pn_n);
      if (basis == "raw") {
        out << (pn_format == "json" ? nvalue::to_json(p).dump(2) : nvalue::to_text(p)) << '\n';
      } else {
        const auto g = nvalue::decompose(p);
        out << (pn_format == "json" ? nvalue::to_json(g).dump(2) : nvalue::to_text(g, factored)) << '\n';
      }
    } else if (*newton) {
      const auto p = nvalue::build_pn(newton_n);
      const auto poly = nvalue::newton_polytope(p);
      const bool simplex = nvalue::is_k_simplex(poly, {newton_n, 2});
      if (!simplex) status = kCheckFailed;
      if (newton_format == "svg") {
        out << nvalue::render_svg(p);
      } else if (newton_format == "json") {
        auto j = nvalue::to_json(poly);
        j["simplex"] = simplex;
        out << j.dump(2) << '\n';
      } else {
        out << "degree: " << *poly.degree << "\nvertices:";
        for (const auto& v : poly.vertices) out << ' ' << vertex_text(v);
        out << "\nsimplex: " << (simplex ? "true" : "false") << '\n';
      }
    } else if (*scan) {
      const auto k = nvalue::parse_scan_kind(kind);
      const auto reports = nvalue::run_scans(k, nvalue::eligible_orders(k, max_n), thread_budget());
      nlohmann::json all = nlohmann::json::array();
      for (const auto& r : reports) {
        if (r.overall == nvalue::Overall::Fail) {
          status = kCheckFailed;
          std::cerr << "potential counterexample: " << nvalue::to_string(r.kind) << " fails at n = " << r.n << '\n';
        }
        if (scan_format == "json") all.push_back(nvalue::to_json(r));
        else out << nvalue::to_text(r);
      }
      if (scan_format == "json") out << all.dump(2) << '\n';
    } else if (*axioms) {
      const auto r = nvalue::run_axioms(ax_n, samples, tol, seed);
      if (!r.all_passed()) status = kCheckFailed;
      if (ax_format == "json") {
        nlohmann::json j{{"n", r.n},
                         {"samples", r.samples},
                         {"tol", tol},
                         {"seed", seed},
                         {"unit", r.unit_pass},
                         {"inverse", r.inverse_pass},
                         {"associativity", r.associativity_pass},
                         {"roots", r.roots_pass},
                         {"root_finding_failures", r.root_failures},
                         {"passed", r.all_passed()}};
        out << j.dump(2) << '\n';
      } else {
        out << "n = " << r.n << ", samples = " << r.samples << ", tol = " << tol << ", seed = " << seed << '\n'
            << "unit: " << r.unit_pass << '/' << r.samples << '\n'
            << "inverse: " << r.inverse_pass << '/' << r.samples << '\n'
            << "associativity: " << r.associativity_pass << '/' << r.samples << '\n'
            << "roots: " << r.roots_pass << '/' << r.samples;
        if (r.root_failures > 0) out << " (" << r.root_failures << " root-finding failures)";
        out << '\n';
      }
    }
  } catch (const nvalue::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }

  if (output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << output << '\n';
      return kUsage;
    }
    file << out.str();
  }
  return status;
}
