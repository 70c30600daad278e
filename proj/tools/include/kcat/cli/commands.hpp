#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kcat/cli/document.hpp"
#include "kcat/cli/report.hpp"

namespace kcat::cli {

/// Unknown subcommand, bad flag value or block selection.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandArgs {
  std::string input;  // echoed only
  std::size_t level = 1;
  std::size_t truncate = 2;
  std::string ring = "z";
  std::string group = "cyclic:2";
  /// Restricts the command to these blocks; theorem-check takes a pair.
  std::vector<std::string> blocks;
};

const std::vector<std::string>& subcommands();

/// Canonical echo of the invocation: subcommand, the flags it reads, blocks.
std::string echo(const std::string& cmd, const CommandArgs& args);

/// Runs one subcommand over the document. Throws UsageError and
/// DocumentError; check failures are records, not exceptions.
Report run_command(const std::string& cmd, const CommandArgs& args, const Document& doc);

}  // namespace kcat::cli
