// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  cdlab::cli::RunConfig config;
  CLI::App app{"cdlab: image sizes of product sets under linear maps over F_p"};
  app.add_option("--command", config.command, "Command to run")
      ->required()
      ->check(CLI::IsMember({"bound", "image", "mu", "tightness", "nss", "dilates", "sweep"}));
  app.add_option("--input", config.input_path, "Input JSON file");
  app.add_option("--output", config.output_path, "Output file (stdout when omitted)");
  app.add_option("--seed", config.seed, "Root seed");
  app.add_option("--budget", config.budget, "Enumeration cap (0 keeps defaults)");
  app.add_option("--parallelism", config.parallelism, "Worker threads")->check(CLI::Range(1U, 1024U));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cdlab::cli::kOk : cdlab::cli::kInputError;
  }
  std::string error;
  if (!cdlab::cli::apply_environment(config, &error)) {
    std::cerr << error << '\n';
    return cdlab::cli::kInputError;
  }
  return cdlab::cli::run(config, std::cout, std::cerr);
}
