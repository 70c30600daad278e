#include "kcat/cli/document.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <tuple>
#include <sstream>

namespace kcat::cli {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line.substr(0, line.find('#')));
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Bounds that keep every accepted document within memory before the
// library's own size checks run.
constexpr long long kMaxNatural = 1'000'000;
constexpr long long kMaxRank = 16;
constexpr long long kMaxExtent = 16;
constexpr long long kMaxDegree = 64;
constexpr std::size_t kMaxSimplexVertices = 12;

bool is_integer(const std::string& s) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  return r.ec == std::errc() && r.ptr == end;
}

bool is_natural(const std::string& s) { return is_integer(s) && s[0] != '-'; }

bool is_real(const std::string& s) {
  if (s.empty()) return false;
  try {
    std::size_t used = 0;
    std::stod(s, &used);
    return used == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

bool is_category_morphism(const std::set<std::string>& objects, const std::set<std::string>& morphisms,
                          const std::string& id) {
  return morphisms.count(id) || (id.rfind("id_", 0) == 0 && objects.count(id.substr(3)));
}

/// Objects and morphisms declared by a category block, identities included.
std::pair<std::set<std::string>, std::set<std::string>> category_names(const Block& b) {
  std::set<std::string> objects, morphisms;
  for (const auto& l : b.body) {
    if (l.tokens[0] == "object") objects.insert(l.tokens[1]);
    if (l.tokens[0] == "morphism") morphisms.insert(l.tokens[1]);
  }
  for (const auto& o : objects) morphisms.insert("id_" + o);
  return {objects, morphisms};
}

/// Per-block validation state.
class Checker {
 public:
  Checker(const Block& b, const Document& doc, const std::map<std::string, std::string>& kinds)
      : block_(b), doc_(doc), kinds_(kinds) {}

  void fail(const Line& l, const std::string& msg) const { throw DocumentError(l.number, msg); }

  void arity(const Line& l, std::size_t n) const {
    if (l.tokens.size() != n)
      fail(l, "'" + l.tokens[0] + "' expects " + std::to_string(n - 1) + " arguments, got " +
                  std::to_string(l.tokens.size() - 1));
  }
  void min_arity(const Line& l, std::size_t n) const {
    if (l.tokens.size() < n) fail(l, "'" + l.tokens[0] + "' expects at least " + std::to_string(n - 1) + " arguments");
  }
  void natural(const Line& l, std::size_t i, long long cap = kMaxNatural) const {
    if (!is_natural(l.tokens[i])) fail(l, "expected a non-negative integer, got '" + l.tokens[i] + "'");
    if (std::stoll(l.tokens[i]) > cap) fail(l, "value " + l.tokens[i] + " exceeds the limit " + std::to_string(cap));
  }
  void integer(const Line& l, std::size_t i) const {
    if (!is_integer(l.tokens[i])) fail(l, "expected an integer, got '" + l.tokens[i] + "'");
  }
  void keyword(const Line& l, std::size_t i, const std::string& word) const {
    if (i >= l.tokens.size() || l.tokens[i] != word) fail(l, "expected '" + word + "' at position " + std::to_string(i));
  }
  void block_ref(const Line& l, std::size_t i, const std::string& kind) const {
    const auto it = kinds_.find(l.tokens[i]);
    if (it == kinds_.end()) fail(l, "undefined block '" + l.tokens[i] + "' (blocks must be defined before use)");
    if (it->second != kind) fail(l, "block '" + l.tokens[i] + "' is a " + it->second + " block, expected " + kind);
  }
  void declare(const Line& l, std::set<std::string>& set, const std::string& id, const std::string& what) const {
    if (!set.insert(id).second) fail(l, "duplicate " + what + " '" + id + "'");
  }
  void known(const Line& l, const std::set<std::string>& set, const std::string& id, const std::string& what) const {
    if (!set.count(id)) fail(l, "undefined " + what + " '" + id + "'");
  }
  void unknown_keyword(const Line& l) const {
    fail(l, "unknown line '" + l.tokens[0] + "' in " + block_.kind + " block");
  }

  void run() {
    if (block_.kind == "category")
      category();
    else if (block_.kind == "exact")
      exact();
    else if (block_.kind == "waldhausen")
      waldhausen();
    else if (block_.kind == "complex")
      complex();
    else if (block_.kind == "field")
      field();
    else if (block_.kind == "branes")
      branes();
    else
      pndp();
  }

 private:
  void category() {
    std::set<std::string> objects, morphisms;
    for (const auto& l : block_.body) {
      const auto& t = l.tokens;
      if (t[0] == "object") {
        arity(l, 2);
        declare(l, objects, t[1], "object");
      } else if (t[0] == "morphism") {
        arity(l, 4);
        known(l, objects, t[2], "object");
        known(l, objects, t[3], "object");
        declare(l, morphisms, t[1], "morphism");
      } else if (t[0] == "compose") {
        arity(l, 5);
        keyword(l, 3, "=");
        for (std::size_t i : {1, 2, 4})
          if (!is_category_morphism(objects, morphisms, t[i])) fail(l, "undefined morphism '" + t[i] + "'");
      } else {
        unknown_keyword(l);
      }
    }
  }

  void exact() {
    std::set<std::string> objects, morphisms;
    bool product = false, other = false;
    for (const auto& l : block_.body) {
      const auto& t = l.tokens;
      if (t[0] == "product") {
        arity(l, 3);
        block_ref(l, 1, "exact");
        block_ref(l, 2, "exact");
        product = true;
        continue;
      }
      other = true;
      if (t[0] == "ring") {
        arity(l, 2);
        if (t[1] != "z" && t[1].rfind("zmod:", 0) != 0) fail(l, "ring must be z or zmod:p");
        if (t[1] != "z" && !is_natural(t[1].substr(5))) fail(l, "bad modulus in '" + t[1] + "'");
      } else if (t[0] == "object") {
        min_arity(l, 3);
        declare(l, objects, t[1], "object");
        if (t[2] == "rank") {
          arity(l, 4);
          natural(l, 3, kMaxRank);
        } else if (t[2] == "cyclic") {
          if (t.size() > 3 + kMaxRank) fail(l, "too many cyclic summands");
          for (std::size_t i = 3; i < t.size(); ++i) natural(l, i);
        } else {
          fail(l, "object needs 'rank <n>' or 'cyclic <orders...>'");
        }
      } else if (t[0] == "morphism") {
        min_arity(l, 4);
        known(l, objects, t[2], "object");
        known(l, objects, t[3], "object");
        declare(l, morphisms, t[1], "morphism");
        for (std::size_t i = 4; i < t.size(); ++i) integer(l, i);
      } else if (t[0] == "seq") {
        arity(l, 6);
        for (std::size_t i = 1; i <= 3; ++i) known(l, objects, t[i], "object");
        known(l, morphisms, t[4], "morphism");
        known(l, morphisms, t[5], "morphism");
      } else if (t[0] == "sigma") {
        arity(l, 2);
        if (t[1] != "full") fail(l, "only 'sigma full' is supported");
      } else {
        unknown_keyword(l);
      }
    }
    if (product && other) throw DocumentError(block_.line, "product block '" + block_.name + "' takes no other lines");
  }

  void waldhausen() {
    std::string host;
    std::set<std::string> objects, morphisms;
    for (const auto& l : block_.body) {
      const auto& t = l.tokens;
      if (t[0] == "from") {
        arity(l, 2);
        block_ref(l, 1, "exact");
      } else if (t[0] == "host") {
        arity(l, 2);
        block_ref(l, 1, "category");
        host = t[1];
        std::tie(objects, morphisms) = category_names(*doc_.find(host));
      } else if (t[0] == "zero") {
        arity(l, 2);
        if (host.empty()) fail(l, "'zero' needs a preceding 'host' line");
        known(l, objects, t[1], "object");
      } else if (t[0] == "cofibration" || t[0] == "weak") {
        min_arity(l, 2);
        if (host.empty()) fail(l, "'" + t[0] + "' needs a preceding 'host' line");
        for (std::size_t i = 1; i < t.size(); ++i) known(l, morphisms, t[i], "morphism");
      } else if (t[0] == "policy") {
        arity(l, 2);
        if (t[1] != "required" && t[1] != "declared") fail(l, "policy must be required or declared");
      } else {
        unknown_keyword(l);
      }
    }
    const bool from = !block_.lines("from").empty();
    if (from == !host.empty())
      throw DocumentError(block_.line, "waldhausen block '" + block_.name + "' needs exactly one of 'from' or 'host'");
    if (!host.empty() && block_.lines("zero").size() != 1)
      throw DocumentError(block_.line, "waldhausen block '" + block_.name + "' needs one 'zero' line");
  }

  void complex() {
    for (const auto& l : block_.body) {
      const auto& t = l.tokens;
      if (t[0] == "simplex") {
        min_arity(l, 2);
        if (t.size() > 1 + kMaxSimplexVertices) fail(l, "simplices have at most " + std::to_string(kMaxSimplexVertices) + " vertices");
        for (std::size_t i = 1; i < t.size(); ++i) natural(l, i);
      } else if (t[0] == "cochain") {
        min_arity(l, 2);
        natural(l, 1, kMaxDegree);
        for (std::size_t i = 2; i < t.size(); ++i) integer(l, i);
      } else {
        unknown_keyword(l);
      }
    }
  }

  void field() {
    bool extent = false;
    for (const auto& l : block_.body) {
      const auto& t = l.tokens;
      if (t[0] == "extent") {
        arity(l, 5);
        for (std::size_t i = 1; i <= 4; ++i) natural(l, i, kMaxExtent);
        if (extent) fail(l, "duplicate extent");
        extent = true;
      } else if (t[0] == "site") {
        if (!extent) fail(l, "'site' needs a preceding 'extent' line");
        if (t.size() != 7 && t.size() != 9) fail(l, "site expects 'x0 x1 x2 x3 value <v> [region <r>]'");
        for (std::size_t i = 1; i <= 4; ++i) natural(l, i);
        keyword(l, 5, "value");
        if (!is_real(t[6])) fail(l, "expected a number, got '" + t[6] + "'");
        if (t.size() == 9) {
          keyword(l, 7, "region");
          integer(l, 8);
        }
      } else {
        unknown_keyword(l);
      }
    }
    if (!extent) throw DocumentError(block_.line, "field block '" + block_.name + "' needs an extent");
  }

  void branes() {
    std::set<std::string> ids;
    std::vector<const Line*> strings;
    bool host = false;
    for (const auto& l : block_.body) {
      const auto& t = l.tokens;
      if (t[0] == "host") {
        arity(l, 2);
        block_ref(l, 1, "complex");
        host = true;
      } else if (t[0] == "brane") {
        arity(l, 6);
        keyword(l, 2, "stack");
        natural(l, 3);
        keyword(l, 4, "region");
        block_ref(l, 5, "complex");
        declare(l, ids, t[1], "brane");
      } else if (t[0] == "string") {
        arity(l, 3);
        strings.push_back(&l);
      } else {
        unknown_keyword(l);
      }
    }
    for (const auto* l : strings) {
      known(*l, ids, l->tokens[1], "brane");
      known(*l, ids, l->tokens[2], "brane");
    }
    if (!host) throw DocumentError(block_.line, "branes block '" + block_.name + "' needs a host");
  }

  void pndp() {
    std::set<std::string> ids;
    for (const auto& l : block_.body) {
      const auto& t = l.tokens;
      if (t[0] != "pndp") unknown_keyword(l);
      arity(l, 10);
      declare(l, ids, t[1], "spec");
      const char* keys[] = {"b1", "b2", "fiber", "rank"};
      for (std::size_t k = 0; k < 4; ++k) {
        keyword(l, 2 + 2 * k, keys[k]);
        natural(l, 3 + 2 * k);
      }
    }
  }

  const Block& block_;
  const Document& doc_;
  const std::map<std::string, std::string>& kinds_;
};

}  // namespace

DocumentError::DocumentError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

std::vector<const Line*> Block::lines(const std::string& keyword) const {
  std::vector<const Line*> out;
  for (const auto& l : body)
    if (!l.tokens.empty() && l.tokens[0] == keyword) out.push_back(&l);
  return out;
}

bool operator==(const Block& a, const Block& b) {
  if (a.kind != b.kind || a.name != b.name || a.body.size() != b.body.size()) return false;
  for (std::size_t i = 0; i < a.body.size(); ++i)
    if (a.body[i].tokens != b.body[i].tokens) return false;
  return true;
}

const Block* Document::find(const std::string& name) const {
  for (const auto& b : blocks)
    if (b.name == name) return &b;
  return nullptr;
}

std::vector<const Block*> Document::of_kind(const std::string& kind) const {
  std::vector<const Block*> out;
  for (const auto& b : blocks)
    if (b.kind == kind) out.push_back(&b);
  return out;
}

Document parse_document(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  Block* open = nullptr;
  while (std::getline(in, raw)) {
    ++number;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (!open) {
      if (tokens[0] != "begin") throw DocumentError(number, "expected 'begin <kind> <name>'");
      if (tokens.size() != 3) throw DocumentError(number, "'begin' expects a kind and a name");
      if (std::find(kBlockKinds.begin(), kBlockKinds.end(), tokens[1]) == kBlockKinds.end())
        throw DocumentError(number, "unknown block kind '" + tokens[1] + "'");
      if (doc.find(tokens[2])) throw DocumentError(number, "duplicate block name '" + tokens[2] + "'");
      doc.blocks.push_back({tokens[1], tokens[2], number, {}});
      open = &doc.blocks.back();
    } else if (tokens[0] == "end") {
      if (tokens.size() != 1) throw DocumentError(number, "'end' takes no arguments");
      open = nullptr;
    } else if (tokens[0] == "begin") {
      throw DocumentError(number, "block '" + open->name + "' is not closed before a new 'begin'");
    } else {
      open->body.push_back({number, std::move(tokens)});
    }
  }
  if (open) throw DocumentError(open->line, "block '" + open->name + "' has no 'end'");

  std::map<std::string, std::string> kinds;
  for (const auto& b : doc.blocks) {
    Checker(b, doc, kinds).run();
    kinds[b.name] = b.kind;
  }
  return doc;
}

std::string serialize(const Document& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    const auto& b = doc.blocks[i];
    if (i) out += "\n";
    out += "begin " + b.kind + " " + b.name + "\n";
    for (const auto& l : b.body) {
      for (std::size_t k = 0; k < l.tokens.size(); ++k) out += (k ? " " : "") + l.tokens[k];
      out += "\n";
    }
    out += "end\n";
  }
  return out;
}

}  // namespace kcat::cli
