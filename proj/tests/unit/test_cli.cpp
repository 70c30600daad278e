#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "kcat/cli/commands.hpp"
#include "kcat/cli/document.hpp"

using namespace kcat::cli;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(KCAT_CORPUS_DIR))
    if (e.path().extension() == ".kdoc") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t error_line(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.line();
  }
  return 0;
}

const char* kF2 = R"(begin exact f2
ring zmod:2
object V0 rank 0
object V1 rank 1
object V2 rank 2
object V3 rank 3
sigma full
end
)";

const char* kCircleAndPoint = R"(begin complex circle
simplex 0 1
simplex 1 2
simplex 0 2
end
begin complex point
simplex 0
end
)";

}  // namespace

TEST_CASE("empty input parses to an empty document") {
  CHECK(parse_document("").blocks.empty());
  CHECK(parse_document("# only a comment\n\n").blocks.empty());
}

TEST_CASE("a category block with one object and its identity") {
  const auto doc = parse_document("begin category c\nobject A\nmorphism id_A A A\nend\n");
  REQUIRE(doc.blocks.size() == 1);
  CHECK(doc.blocks[0].kind == "category");
  const auto rep = run_command("check-category", {}, doc);
  CHECK(rep.ok());
  CHECK(rep.human().find("1 objects, 1 morphisms") != std::string::npos);
}

TEST_CASE("diagnostics name the offending line") {
  CHECK(error_line("begin category c\nobject A\nmorphism f A B\nend\n") == 3);
  CHECK(error_line("\nbegin widget w\nend\n") == 2);
  CHECK(error_line("begin category c\nend\nbegin complex c\nend\n") == 3);
  CHECK(error_line("begin branes b\nhost nowhere\nend\n") == 2);
  CHECK(error_line("begin category c\nobject A\n") == 1);
  CHECK(error_line("begin complex k\nsimplex 0 x\nend\n") == 2);
  CHECK(error_line("begin field f\nextent 2 2 1 1\nsite 0 0 0 0 value 1 region\nend\n") == 3);
  CHECK(error_line("begin exact e\nobject A rank 99\nend\n") == 2);
  CHECK(error_line("begin waldhausen w\nhost c\nend\nbegin category c\nobject A\nend\n") == 2);
  CHECK(error_line("stray\n") == 1);
}

TEST_CASE("corpus documents parse and round trip") {
  const auto files = corpus();
  REQUIRE(files.size() >= 5);
  for (const auto& f : files) {
    CAPTURE(f.string());
    const auto doc = parse_document(read_file(f));
    CHECK(!doc.blocks.empty());
    const auto text = serialize(doc);
    const auto again = parse_document(text);
    CHECK(again == doc);
    CHECK(serialize(again) == text);
  }
}

TEST_CASE("parsing and commands are total on mutated corpus text") {
  std::mt19937 rng(43);
  const auto files = corpus();
  std::vector<std::string> tokens{"begin", "end", "object", "morphism", "simplex", "-1", "0", "x", "#", "value",
                                  "region", "cyclic", "rank", "compose", "=", "999999999999", "zmod:4", "\n"};
  for (int trial = 0; trial < 400; ++trial) {
    auto text = read_file(files[rng() % files.size()]);
    const int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits; ++e) {
      const std::size_t pos = rng() % (text.size() + 1);
      switch (rng() % 3) {
        case 0:
          text.insert(pos, " " + tokens[rng() % tokens.size()] + " ");
          break;
        case 1:
          text.erase(pos, rng() % 12);
          break;
        default:
          if (!text.empty()) text[pos % text.size()] = static_cast<char>(32 + rng() % 95);
      }
    }
    try {
      const auto doc = parse_document(text);
      CHECK(parse_document(serialize(doc)) == doc);
      for (const auto& cmd : subcommands()) {
        try {
          run_command(cmd, {}, doc);
        } catch (const DocumentError&) {
        }
      }
    } catch (const DocumentError&) {
    }
  }
}

TEST_CASE("k0 of F2 spaces up to dimension 3") {
  const auto rep = run_command("k0", {}, parse_document(kF2));
  CHECK(rep.ok());
  CHECK(rep.human().find("free rank 1, no torsion") != std::string::npos);
}

TEST_CASE("theorem-check on circle vs point lists the H1 mismatch") {
  CommandArgs args;
  args.blocks = {"circle", "point"};
  const auto rep = run_command("theorem-check", args, parse_document(kCircleAndPoint));
  CHECK_FALSE(rep.ok());
  bool h1 = false;
  for (const auto& r : rep.records)
    if (r.check == "circle~point.H1") h1 = r.status == Status::Fail && r.witness == "Z vs 0";
  CHECK(h1);
}

TEST_CASE("usage errors") {
  const auto doc = parse_document(kCircleAndPoint);
  CHECK_THROWS_AS(run_command("frobnicate", {}, doc), UsageError);
  CommandArgs args;
  args.blocks = {"missing"};
  CHECK_THROWS_AS(run_command("cohomology", args, doc), UsageError);
  args.blocks = {};
  args.ring = "zmod:4";
  CHECK_THROWS_AS(run_command("cohomology", args, doc), UsageError);
  args.ring = "z";
  args.group = "torus:3";
  CHECK_THROWS_AS(run_command("gft-roundtrip", args, parse_document("begin field f\nextent 1 1 1 1\nend\n")),
                  UsageError);
}

TEST_CASE("build errors carry line numbers") {
  const auto doc = parse_document("begin exact e\nring zmod:2\nobject A rank 1\nmorphism f A A 1 1\nend\n");
  try {
    run_command("k0", {}, doc);
    FAIL("expected DocumentError");
  } catch (const DocumentError& e) {
    CHECK(e.line() == 4);
  }
  const auto bad = parse_document("begin complex k\nsimplex 0 1\ncochain 1 1 2\nend\n");
  CHECK_THROWS_AS(run_command("potential", {}, bad), DocumentError);
}

TEST_CASE("every subcommand is deterministic on the corpus") {
  for (const auto& f : corpus()) {
    const auto doc = parse_document(read_file(f));
    for (const auto& cmd : subcommands()) {
      CAPTURE(f.string());
      CAPTURE(cmd);
      const auto a = run_command(cmd, {}, doc);
      const auto b = run_command(cmd, {}, doc);
      CHECK(a.machine() == b.machine());
      CHECK(a.human() == b.human());
    }
  }
}

TEST_CASE("machine reports have one record per line") {
  const auto rep = run_command("cohomology", {}, parse_document(kCircleAndPoint));
  std::istringstream in(rep.machine());
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("command=cohomology", 0) == 0);
  std::size_t records = 0;
  while (std::getline(in, line)) {
    ++records;
    CHECK(line.rfind("check=", 0) == 0);
    CHECK(line.find("\tstatus=") != std::string::npos);
    CHECK(line.find("\twitness=") != std::string::npos);
  }
  CHECK(records == rep.records.size() + 1);
}
