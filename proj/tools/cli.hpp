#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bk::cli {

struct Outcome {
  int exit_code = 0;
  std::string output;  // one JSON document followed by a newline
};

/// Runs one subcommand on a JSON payload. Exit 0 on success, 1 on a domain
/// error, 2 on malformed input or an unknown subcommand.
Outcome run(const std::string& subcommand, const std::string& payload);

const std::vector<std::string>& subcommands();

/// Published JSON schema of a subcommand.
std::optional<std::string> schema(const std::string& subcommand);

}  // namespace bk::cli
