#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kcat::cli {

/// Parse or build failure tied to a line of the input (0 when no line applies).
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

/// One `begin <kind> <name>` ... `end` block. Equality ignores line numbers.
struct Block {
  std::string kind;
  std::string name;
  std::size_t line = 0;
  std::vector<Line> body;

  /// Body lines whose first token is `keyword`.
  std::vector<const Line*> lines(const std::string& keyword) const;
  friend bool operator==(const Block& a, const Block& b);
};

struct Document {
  std::vector<Block> blocks;

  const Block* find(const std::string& name) const;
  std::vector<const Block*> of_kind(const std::string& kind) const;
  friend bool operator==(const Document& a, const Document& b) = default;
};

inline const std::vector<std::string> kBlockKinds{"category", "exact", "waldhausen", "complex",
                                                  "field",    "branes", "pndp"};

/// Parses and validates the line format: keywords and arities per block
/// kind, numeric fields, identifiers declared before use, unique block
/// names and resolvable references between blocks. Throws DocumentError.
Document parse_document(const std::string& text);

/// Canonical text: tokens separated by one space, blocks separated by a
/// blank line, comments dropped.
std::string serialize(const Document& doc);

}  // namespace kcat::cli
