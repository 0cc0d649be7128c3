#include <CLI11.hpp>

#include <iostream>

#include "driver.hpp"
#include "orbitlab/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "orbitlab: combinatorial orbit space models of isospectral "
      "staircase-matrix torus manifolds"};
  app.require_subcommand(1);
  // --h is taken by the Hessenberg function, so help is long-form only.
  app.set_help_flag("--help", "print help and exit");

  orbitlab::cli::AnalyzeOptions analyze_options;
  CLI::App* analyze =
      app.add_subcommand("analyze", "analyze one Hessenberg function");
  analyze->set_help_flag("--help", "print help and exit");
  analyze->add_option("--h", analyze_options.h_csv,
                      "Hessenberg function, e.g. 3,3,4,5,5")
      ->required();
  analyze->add_option("--lambda", analyze_options.lambda_csv,
                      "simple spectrum (integers or p/q); default 1,2,...,n");
  analyze
      ->add_option("--emit", analyze_options.emit,
                   "artifacts to write: report.txt, report.json, gkm.dot, "
                   "gkm.json, nerve.dot, polytope.csv")
      ->delimiter(',');
  analyze->add_option("--out", analyze_options.out_dir,
                      "output directory for artifacts (default: .)");

  orbitlab::cli::BatchOptions batch_options;
  CLI::App* batch = app.add_subcommand(
      "batch", "CSV table over all complexity-one profiles in an n range");
  batch->set_help_flag("--help", "print help and exit");
  batch->add_option("--n", batch_options.range, "range of n, e.g. 4..7")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help/version exit clean, bad flags exit 1
  }

  try {
    if (analyze->parsed())
      return orbitlab::cli::run_analyze(analyze_options, std::cout, std::cerr);
    return orbitlab::cli::run_batch(batch_options, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
