#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "holonet/cli.hpp"
#include "holonet/errors.hpp"

int main(int argc, char** argv) {
  using namespace holonet;
  CLI::App app{"Holonomy of nets of operator algebras over posets"};
  app.require_subcommand(0, 1);

  std::string command;
  std::string input;
  cli::RunOptions options;
  std::string format = "json";
  double tolerance = 0.0;

  app.add_option("command", command, "pi1, holonomy, sections, rep-check, fredholm-verify, extend, index, ccs, "
                                     "shift-demo, sector-demo, spectral-verify, roundtrip")
      ->required();
  app.add_option("--input,-i", input, "input document (JSON)")->required();
  app.add_option("--seed", options.seed, "seed for sampled checks")->default_val(0);
  auto* tol = app.add_option("--tolerance", tolerance, "override the 1e-10 class of checks");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->default_val("json");
  app.add_flag("--timing", options.timing, "append wall-clock time to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (tol->count() > 0) {
    if (!(tolerance > 0.0)) {
      std::cerr << "error: --tolerance must be positive\n";
      return 2;
    }
    options.tolerance = tolerance;
  }
  options.format = format == "text" ? cli::Format::Text : cli::Format::Json;

  try {
    const cli::InputDocument doc = cli::parse_input_file(input);
    const cli::RunResult r = cli::run(command, doc, options);
    std::cout << r.output;
    return r.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
