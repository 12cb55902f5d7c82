// signpat: command-line front end for the sign pattern library.
//
// Exit codes: 0 success/pass, 1 usage error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "signpat/adjacency.hpp"
#include "signpat/census.hpp"
#include "signpat/error.hpp"
#include "signpat/realize.hpp"
#include "signpat/report.hpp"

namespace {

using namespace signpat;

constexpr int kUsageError = 1;
constexpr int kVerificationFailure = 2;

std::string roots_line(const RootSet& roots) {
  std::string out;
  for (const auto& r : roots.roots()) {
    if (!out.empty()) out += ' ';
    out += r.get_str();
  }
  return out;
}

std::string hits_line(const std::vector<ConfigHit>& hits) {
  std::string out;
  for (const auto& h : hits) {
    if (!out.empty()) out += ' ';
    out += to_char(h.kind);
    out += '@' + std::to_string(h.position);
  }
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign patterns, canonical orders of moduli and witness search"};
  app.require_subcommand(1);

  std::string pattern_text;
  std::string order_text;
  std::uint64_t budget = 100000;
  std::uint64_t seed = 42;
  int max_d = 0;
  std::string path;
  std::string ratio_text = "4";
  bool strict = false;
  bool as_json = false;

  auto* classify = app.add_subcommand("classify", "canonical|noncanonical and A-D hits");
  classify->add_option("pattern", pattern_text, "e.g. ++-- or +,-,-,+")->required();
  classify->add_flag("--strict", strict, "exit 1 when the pattern is not canonical");

  auto* order = app.add_subcommand("order", "canonical order of moduli");
  order->add_option("pattern", pattern_text)->required();

  auto* realize = app.add_subcommand("realize", "roots realizing the canonical order");
  realize->add_option("pattern", pattern_text)->required();
  realize->add_option("--ratio", ratio_text, "initial modulus ratio (> 1)");
  realize->add_flag("--json", as_json);

  auto* witness = app.add_subcommand("witness", "search roots for a pattern and order");
  witness->add_option("pattern", pattern_text)->required();
  witness->add_option("order", order_text, "e.g. N<N<P or NNP")->required();
  witness->add_option("--budget", budget)->check(CLI::PositiveNumber);
  witness->add_option("--seed", seed);
  witness->add_flag("--json", as_json);

  auto* orders = app.add_subcommand("orders", "all orders found to realize a pattern");
  orders->add_option("pattern", pattern_text)->required();
  orders->add_option("--budget", budget)->check(CLI::PositiveNumber);
  orders->add_option("--seed", seed);

  auto* rigid = app.add_subcommand("rigid", "is an order realized by a single pattern");
  rigid->add_option("order", order_text)->required();

  auto* census_cmd = app.add_subcommand("census", "canonical counts for d = 0..D");
  census_cmd->add_option("--max-d", max_d)->required()->check(CLI::Range(0, kCensusCeiling));
  census_cmd->add_option("--csv", path, "write CSV here instead of stdout");

  auto* theorem = app.add_subcommand("verify-theorem",
                                     "witness search against canonicity, d = 2..D");
  theorem->add_option("--max-d", max_d)->required()->check(CLI::Range(2, 12));
  theorem->add_option("--budget", budget)->check(CLI::PositiveNumber);
  theorem->add_option("--seed", seed);
  theorem->add_option("--json", path, "write the full per-pattern report here");

  auto* proposition = app.add_subcommand("verify-proposition",
                                         "exhaustive lift check, d = 3..D");
  proposition->add_option("--max-d", max_d)->required()->check(CLI::Range(3, 30));
  proposition->add_option("--dump", path, "write every lift report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*classify) {
      const SignPattern p = parse_pattern(pattern_text);
      const auto hits = find_configurations(p);
      std::cout << (hits.empty() ? "canonical" : "noncanonical");
      if (!hits.empty()) std::cout << ' ' << hits_line(hits);
      std::cout << '\n';
      return strict && !hits.empty() ? 1 : 0;
    }
    if (*order) {
      std::cout << canonical_order(parse_pattern(pattern_text)).str() << '\n';
      return 0;
    }
    if (*realize) {
      const SignPattern p = parse_pattern(pattern_text);
      const RootSet roots = realize_canonical(p, parse_rational(ratio_text));
      if (as_json) {
        nlohmann::json j = {{"pattern", p.str()},
                            {"order", p.degree() ? canonical_order(p).str() : ""},
                            {"witness", to_json(roots)}};
        std::cout << j.dump() << '\n';
      } else {
        std::cout << roots_line(roots) << '\n';
      }
      return 0;
    }
    if (*witness) {
      const WitnessRequest request{parse_pattern(pattern_text), parse_order(order_text),
                                   budget, seed};
      const WitnessOutcome found = search_witness(request);
      if (as_json) {
        nlohmann::json j = {{"pattern", request.pattern.str()},
                            {"order", request.order.str()},
                            {"samples_used", found.samples_used},
                            {"witness", found.witness ? to_json(*found.witness)
                                                      : nlohmann::json(nullptr)}};
        std::cout << j.dump() << '\n';
      } else if (found.witness) {
        std::cout << roots_line(*found.witness) << '\n';
      } else {
        std::cout << "none within budget\n";
      }
      return 0;
    }
    if (*orders) {
      std::cout << to_json(realizable_orders(parse_pattern(pattern_text), budget, seed)).dump(2)
                << '\n';
      return 0;
    }
    if (*rigid) {
      const RigidVerdict v = classify_rigid(parse_order(order_text));
      if (v.rigid) {
        std::cout << "rigid " << v.pattern->str() << '\n';
      } else {
        std::cout << "not rigid\n";
      }
      return 0;
    }
    if (*census_cmd) {
      std::vector<CensusRow> rows;
      for (int d = 0; d <= max_d; ++d) rows.push_back(census(d));
      if (path.empty()) {
        write_census_csv(std::cout, rows);
      } else {
        auto out = open_output(path);
        write_census_csv(out, rows);
      }
      return 0;
    }
    if (*theorem) {
      bool all_passed = true;
      nlohmann::json dump = nlohmann::json::array();
      for (int d = 2; d <= max_d; ++d) {
        const TheoremReport report = verify_theorem_small(d, budget, seed);
        std::size_t canonical = 0;
        for (const auto& o : report.outcomes) {
          canonical += o.canonical;
          if (!o.passed) {
            std::cout << "  FAIL d=" << d << ' ' << o.pattern.str()
                      << (o.canonical ? " (canonical, non-canonical order witnessed)"
                                      : " (non-canonical, no witness within budget)")
                      << '\n';
          }
        }
        std::cout << "d=" << d << ' ' << (report.passed() ? "pass" : "FAIL") << " ("
                  << report.outcomes.size() << " patterns, " << canonical << " canonical)\n";
        all_passed = all_passed && report.passed();
        if (!path.empty()) dump.push_back(to_json(report));
      }
      if (!path.empty()) open_output(path) << dump.dump(2) << '\n';
      std::cout << (all_passed ? "PASS" : "FAIL") << '\n';
      return all_passed ? 0 : kVerificationFailure;
    }
    if (*proposition) {
      bool all_passed = true;
      nlohmann::json dump = nlohmann::json::array();
      std::size_t sources = 0;
      std::size_t members = 0;
      for (int d = 3; d <= max_d; ++d) {
        const auto reports = verify_proposition(d);
        for (const auto& r : reports) {
          members += r.t.size();
          if (!r.holds()) {
            all_passed = false;
            std::cout << "  violation d=" << d << " source " << r.source.str() << '\n';
          }
          if (!path.empty()) dump.push_back(to_json(r));
        }
        sources += reports.size();
      }
      if (!path.empty()) open_output(path) << dump.dump() << '\n';
      std::cout << (all_passed ? "PASS" : "FAIL") << " d=3.." << max_d << ' ' << sources
                << " sources, " << members << " members of T checked\n";
      return all_passed ? 0 : kVerificationFailure;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
