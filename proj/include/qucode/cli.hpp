#ifndef QUCODE_CLI_HPP
#define QUCODE_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qucode/error.hpp"

namespace qucode::cli {

enum class Command { Construct, Analyze, Represent, Verify, RegenPaperExamples };
enum class OutputFormat { Table, Json };

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_parse = 2,
  exit_cap = 3,
  exit_internal = 4,
};

struct RunConfig {
  Command command = Command::Construct;
  std::string group_spec;
  std::string subgroup_spec;
  std::string input_path;        // analyze/verify: code JSON written by construct
  std::string out_dir = "golden";  // regen-paper-examples
  OutputFormat output = OutputFormat::Table;
  Limits caps{};
  std::size_t center = 0;
  std::size_t order_multiple = 1;
  std::optional<std::uint64_t> q;
};

Command command_from_string(const std::string& s);  // throws std::invalid_argument
std::string to_string(Command c);

/// Runs one command. Diagnostics go to `err` as a single line; the return
/// value is one of the ExitCode values.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes the paper-example golden files into `dir` and returns their names.
std::vector<std::string> regen_paper_examples(const std::string& dir, const Limits& caps = {});

}  // namespace qucode::cli

#endif  // QUCODE_CLI_HPP
