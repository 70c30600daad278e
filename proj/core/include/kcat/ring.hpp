#pragma once

#include <string>
#include <string_view>

#include "kcat/matrix.hpp"

namespace kcat {

/// Coefficient ring tag: the integers, or the integers modulo a prime p.
struct Ring {
  enum class Kind { Integers, ModP };

  Kind kind = Kind::Integers;
  Int modulus = 0;  // p for ModP, 0 for Integers

  static Ring integers() { return {}; }
  /// Throws StructuralError unless p is prime.
  static Ring mod_p(Int p);
  /// Parses "z" or "zmod:p".
  static Ring parse(std::string_view text);

  bool is_integers() const { return kind == Kind::Integers; }
  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

}  // namespace kcat
