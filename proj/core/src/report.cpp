#include "kcat/report.hpp"

#include <algorithm>

namespace kcat {

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) violations.push_back({prefix + v.law, v.witness});
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

bool ValidationReport::has_law(const std::string& law) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.law == law; });
}

}  // namespace kcat
