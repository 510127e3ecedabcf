#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "vconn/config.hpp"
#include "vconn/graph.hpp"

using namespace vconn;

int main(int argc, char** argv) {
  CLI::App app{"Vertex connectivity toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  int jobs = 0;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--jobs", jobs, "Worker threads (default 1)")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized constructions and sampling");

  cli::ComputeOptions co;
  int k = -1;
  auto* compute = app.add_subcommand("compute", "Compute a minimum vertex cut and print a JSON report");
  compute->add_option("graph", co.path, "Graph file")->required();
  compute->add_option("--algo", co.algo, "auto, unweighted, weighted, gabow, unbalanced or terminal")
      ->check(CLI::IsMember({"auto", "unweighted", "weighted", "gabow", "unbalanced", "terminal"}));
  compute->add_option("--k", k, "Connectivity threshold for gabow (default n - 1)")->check(CLI::NonNegativeNumber);
  compute->add_flag("--oracle", co.oracle, "Compare the value against the brute-force oracle");
  compute->add_flag("--no-timing", [&](std::int64_t) { co.timing = false; }, "Omit the wall time field");

  cli::VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Re-validate a report against its graph");
  verify->add_option("graph", vo.graph_path, "Graph file")->required();
  verify->add_option("report", vo.report_path, "JSON report")->required();
  verify->add_flag("--oracle", vo.oracle, "Also compare the value against the brute-force oracle");

  cli::CheckOptions ko;
  auto* check = app.add_subcommand("check-pr", "Verify a pseudorandom object and print a JSON certificate");
  check->add_option("object", ko.object, "crossing, selector, disperser or mixing")
      ->required()
      ->check(CLI::IsMember({"crossing", "selector", "disperser", "mixing"}));
  check->add_option("-n", ko.n, "Ground set size");
  check->add_option("-k", ko.k, "Set size parameter");
  check->add_option("-e,--eps", ko.eps, "Epsilon");
  check->add_option("-l", ko.l, "Crossing family: minimum |L|");
  check->add_option("-r", ko.r, "Crossing family: minimum |R|");
  check->add_option("-d", ko.d, "Degree (disperser, mixing)");
  check->add_option("--alpha", ko.alpha, "Check the symmetric crossing family with this alpha");
  check->add_option("--family", ko.family_path, "Check a family read from a file instead");

  cli::BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "Run a suite of instances and write a CSV table");
  bench->add_option("suite", bo.suite_path, "Suite file")->required();
  bench->add_option("out", bo.out_path, "CSV output path, - for stdout")->required();
  bench->add_option("--algo", bo.algo, "Algorithm for every row")
      ->check(CLI::IsMember({"auto", "unweighted", "weighted", "gabow", "unbalanced", "terminal"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kParse;
  }

  try {
    if (!config_path.empty()) config().load_file(config_path);
    if (jobs > 0) config().jobs = jobs;
    if (app.count("--seed")) config().seed = seed;
    if (k >= 0) co.k = k;
    if (*compute) return cli::cmd_compute(co, std::cout);
    if (*verify) return cli::cmd_verify(vo, std::cout);
    if (*check) return cli::cmd_check_pr(ko, std::cout);
    return cli::cmd_bench(bo, std::cerr);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return cli::kParse;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return cli::kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInvariant;
  }
}
