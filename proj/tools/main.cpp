#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with abelian groups, lim¹ and Brauer-kernel invariants"};
  std::string schema_name;
  std::string subcommand;
  std::string payload;
  std::string input_path;
  std::string output_path;
  app.add_option("--schema", schema_name, "Print the JSON schema of a subcommand");
  app.add_option("subcommand", subcommand, "One of: snf group descriptor lim1 ml ext-rank1 "
                                           "classify-submodule valuation brauer report");
  app.add_option("payload", payload, "JSON payload (default: read --input or stdin)");
  app.add_option("-i,--input", input_path, "Read the payload from a file");
  app.add_option("-o,--output", output_path, "Write the result to a file");
  CLI11_PARSE(app, argc, argv);

  if (!schema_name.empty()) {
    auto text = bk::cli::schema(schema_name);
    if (!text) {
      std::cerr << "unknown subcommand '" << schema_name << "'\n";
      return 2;
    }
    std::cout << *text;
    return 0;
  }
  if (subcommand.empty()) {
    std::cerr << app.help();
    return 2;
  }
  if (payload.empty()) {
    std::ostringstream buffer;
    if (!input_path.empty()) {
      std::ifstream file(input_path);
      if (!file) {
        std::cerr << "cannot open " << input_path << "\n";
        return 2;
      }
      buffer << file.rdbuf();
    } else {
      buffer << std::cin.rdbuf();
    }
    payload = buffer.str();
  }

  auto outcome = bk::cli::run(subcommand, payload);
  if (output_path.empty()) {
    std::cout << outcome.output;
  } else {
    std::ofstream(output_path) << outcome.output;
  }
  return outcome.exit_code;
}
