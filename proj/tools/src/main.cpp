#include <iostream>

#include <CLI11.hpp>

#include "stanley/error.hpp"
#include "stanley_cli/commands.hpp"

using namespace stanley;

int main(int argc, char** argv) {
  CLI::App app{"Stanley decompositions, Stanley depth and partitionability"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::Input input;
  std::string field = "q";
  std::optional<int> target;
  int threads = 1;
  std::uint64_t box_cap = kDefaultBoxCap;
  bool as_json = false;

  app.add_option("--fixture", input.fixture, "Embedded example (dunce-hat, cylinder, hachimori, hachimori-1, hachimori-2, gorenstein-M)");
  app.add_option("--complex", input.complex_path, "Complex file (text or JSON)");
  app.add_option("--ideal", input.ideal_path, "Monomial ideal file (text or JSON)");
  app.add_option("--field", field, "Coefficient field: q or p:<prime>");
  app.add_option("--target", target, "Lower bound for the Stanley depth search");
  app.add_option("--threads", threads, "Worker threads for the Cohen-Macaulay test")->check(CLI::PositiveNumber);
  app.add_option("--box-cap", box_cap, "Largest exponent box searched for filtrations");
  app.add_flag("--json", as_json, "Print the report as JSON");

  auto* analyze = app.add_subcommand("analyze", "Invariants, shellability, partitionability, sdepth");

  auto* verify = app.add_subcommand("verify", "Check a partition, decomposition, shelling or filtration");
  std::string kind, artifact;
  verify->add_option("kind", kind, "partition | decomposition | shelling | filtration")->required();
  verify->add_option("artifact", artifact, "Artifact file; defaults to the fixture's recorded one");

  auto* gor = app.add_subcommand("gorenstein", "Cyclic codimension-3 Gorenstein template");
  int m = 0;
  std::string subst;
  bool verify_shelling = false;
  gor->add_option("--m", m, "Template parameter")->required();
  gor->add_option("--subst", subst, "Regular sequence u_1,...,u_{2m+1} (list or file)");
  gor->add_flag("--verify-shelling", verify_shelling, "Check the exchange witness of every facet pair");

  auto* rnd = app.add_subcommand("random", "Seeded random instance");
  std::uint64_t seed = 0;
  int n = 0;
  std::string model;
  rnd->add_option("--seed", seed)->required();
  rnd->add_option("--n", n)->required();
  rnd->add_option("--model", model, "squarefree | ci | codim2-cm")->required();

  auto* clean = app.add_subcommand("clean", "Search for a clean filtration");
  app.add_subcommand("pretty-clean", "Search for a pretty clean filtration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  cli::Outcome out = cli::guarded([&]() -> cli::Outcome {
    cli::Options opts;
    opts.field = CoefficientField::parse(field);
    opts.target = target;
    opts.threads = threads;
    opts.box_cap = box_cap;
    if (*analyze) return cli::analyze(input, opts);
    if (*verify) return cli::verify(kind, input, artifact, opts);
    if (*gor) return cli::gorenstein(m, subst, verify_shelling, opts);
    if (*rnd) return cli::random_instance(seed, n, model);
    if (*clean) return cli::clean(input, false, opts);
    return cli::clean(input, true, opts);
  });

  if (out.report.contains("error") && out.exit_code == cli::kUsage) {
    std::cerr << "error: " << out.report["error"].get<std::string>() << "\n";
    if (as_json) std::cout << out.report.dump(2) << "\n";
    return out.exit_code;
  }
  if (as_json)
    std::cout << out.report.dump(2) << "\n";
  else
    std::cout << cli::render_text(out.report);
  return out.exit_code;
}
