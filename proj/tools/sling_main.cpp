#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sling/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Projection-free saddle-point experiment runner"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "per-iteration progress on stderr");

  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "run a solver from a key=value config");
  run->add_option("config", config_path, "config file")->required();

  std::string trace_path;
  CLI::App* table =
      app.add_subcommand("bound-table", "compare a trace's gap column to its rate bound");
  table->add_option("trace", trace_path, "trace CSV file")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return sling::run_experiment(config_path, verbose, std::cerr);
  return sling::bound_table(trace_path, std::cout);
}
