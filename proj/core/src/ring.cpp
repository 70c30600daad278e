#include "kcat/ring.hpp"

#include <charconv>

#include "kcat/error.hpp"

namespace kcat {

namespace {

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Ring Ring::mod_p(Int p) {
  if (!is_prime(p)) throw StructuralError("ring modulus " + std::to_string(p) + " is not prime");
  return {Kind::ModP, p};
}

Ring Ring::parse(std::string_view text) {
  if (text == "z" || text == "Z") return integers();
  constexpr std::string_view prefix = "zmod:";
  if (text.starts_with(prefix)) {
    Int p = 0;
    auto digits = text.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return mod_p(p);
  }
  throw StructuralError("unknown ring '" + std::string(text) + "' (expected z or zmod:p)");
}

std::string Ring::to_string() const {
  return is_integers() ? "z" : "zmod:" + std::to_string(modulus);
}

}  // namespace kcat
