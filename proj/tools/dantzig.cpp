// dantzig: build, check and compare initial-segment polytopes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "dantzig/cli.hpp"

namespace cli = dantzig::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and checking of grlex/grevlex initial-segment polytopes"};
  app.require_subcommand(1);

  std::string family = "grlex", theta, format = "json";
  std::vector<std::string> suites{"all"};
  std::size_t expansion_max_n = 0;
  std::uint64_t point_cap = dantzig::default_point_cap;
  bool timings = false;
  std::string out_path;

  auto* construct = app.add_subcommand("construct", "Print the inequality system, vertices or graph");
  construct->add_option("--family", family, "grlex or grevlex")->capture_default_str();
  construct->add_option("--theta", theta, "comma-separated exponent vector, e.g. 2,3,2")->required();
  construct->add_option("--format", format, "ine, ext, dot or json")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run check suites and print a JSON report");
  verify->add_option("--family", family, "grlex or grevlex")->capture_default_str();
  verify->add_option("--theta", theta, "comma-separated exponent vector")->required();
  verify->add_option("--suites", suites, "vertices,facets,incidence,dantzig,graph,expansion,oracle or all")
      ->delimiter(',');
  verify->add_option("--expansion-max-n", expansion_max_n, "largest graph for exhaustive expansion (default 22)");
  verify->add_option("--point-cap", point_cap, "largest lattice point count the oracle will enumerate")
      ->capture_default_str();
  verify->add_flag("--timings", timings, "include per-suite wall time");

  std::vector<std::string> families, thetas;
  auto* compare = app.add_subcommand("compare", "Compare the face lattices of two instances");
  compare->add_option("--family", families, "family of each instance (give twice)")->expected(1)->take_all();
  compare->add_option("--theta", thetas, "theta of each instance (give twice)")->required()->expected(1)->take_all();

  auto* graph = app.add_subcommand("graph", "Graph invariants as JSON, or the graph as DOT");
  graph->add_option("--family", family, "grlex or grevlex")->capture_default_str();
  graph->add_option("--theta", theta, "comma-separated exponent vector")->required();
  graph->add_option("--format", format, "json or dot")->capture_default_str();
  graph->add_option("--expansion-max-n", expansion_max_n, "largest graph for exhaustive expansion (default 22)");

  for (auto* sub : {construct, verify, compare, graph})
    sub->add_option("--out", out_path, "write output to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return cli::kInputError;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  try {
    if (*construct) {
      return cli::cmd_construct({cli::parse_family(family), cli::parse_theta(theta), format}, out);
    }
    if (*verify) {
      cli::VerifyOptions o;
      o.family = cli::parse_family(family);
      o.theta = cli::parse_theta(theta);
      o.suites = suites;
      o.expansion_max_n = expansion_max_n;
      o.point_cap = point_cap;
      o.timings = timings;
      return cli::cmd_verify(o, out);
    }
    if (*compare) {
      if (thetas.size() != 2) throw cli::InputError("compare needs exactly two --theta values");
      if (families.empty()) families = {"grlex", "grlex"};
      if (families.size() == 1) families.push_back(families.front());
      if (families.size() != 2) throw cli::InputError("compare takes at most two --family values");
      cli::CompareOptions o;
      o.family_a = cli::parse_family(families[0]);
      o.family_b = cli::parse_family(families[1]);
      o.theta_a = cli::parse_theta(thetas[0]);
      o.theta_b = cli::parse_theta(thetas[1]);
      return cli::cmd_compare(o, out);
    }
    if (*graph) {
      return cli::cmd_graph({cli::parse_family(family), cli::parse_theta(theta), format, expansion_max_n}, out);
    }
  } catch (const cli::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return cli::kFail;
  }
  return cli::kInputError;
}
