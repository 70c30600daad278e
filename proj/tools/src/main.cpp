#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "kcat/cli/commands.hpp"
#include "kcat/cli/document.hpp"

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kcat::cli::UsageError("cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

const std::map<std::string, std::string> kDescriptions{
    {"check-category", "Check identity, associativity and closure of category blocks"},
    {"check-exact", "Check exact structure axioms"},
    {"check-waldhausen", "Check Waldhausen axioms, converting exact blocks where possible"},
    {"s-construct", "Build the S-construction at --level and check it"},
    {"nerve", "Truncated nerve of a category with simplicial identities"},
    {"k0", "Grothendieck group of exact blocks"},
    {"cohomology", "Cohomology of complexes over --ring"},
    {"potential", "Closedness, exactness and potentials of cochains"},
    {"refine", "Barycentric refinement and its invariants"},
    {"theorem-check", "Compare invariants of two complexes"},
    {"gft-roundtrip", "Decompose and reconstruct fields over --group"},
    {"branes-classify", "Gauge group and string sectors of brane configurations"},
    {"twist-class", "Cohomology class of twist cochains"},
    {"pndp", "Virtual dimensions and point-like emergence"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kcat: finite exact, Waldhausen and simplicial computations"};
  app.require_subcommand(1);
  kcat::cli::CommandArgs args;
  std::string format = "human";
  for (const auto& name : kcat::cli::subcommands()) {
    auto* sub = app.add_subcommand(name, kDescriptions.at(name));
    sub->add_option("--input", args.input, "Document file ('-' or omitted for stdin)");
    sub->add_option("--level", args.level, "S-construction level")->check(CLI::Range(0, 3));
    sub->add_option("--truncate", args.truncate, "Nerve truncation")->check(CLI::Range(0, 6));
    sub->add_option("--ring", args.ring, "Coefficients: z or zmod:p");
    sub->add_option("--group", args.group, "GFT group: cyclic:N or circle:N");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("blocks", args.blocks, "Restrict to these blocks");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const auto doc = kcat::cli::parse_document(read_input(args.input));
    const auto report = kcat::cli::run_command(cmd, args, doc);
    std::cout << (format == "machine" ? report.machine() : report.human());
    return report.ok() ? 0 : kExitFailures;
  } catch (const std::exception& e) {
    std::cerr << "kcat: " << e.what() << "\n";
    return kExitUsage;
  }
}
