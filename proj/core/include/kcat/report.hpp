#pragma once

#include <string>
#include <vector>

namespace kcat {

struct Violation {
  std::string law;
  std::string witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Result of an axiom or property check. Empty `violations` means every
/// checked law holds; `notes` carry non-failing observations (skipped cases,
/// flags) that reports should still show.
struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
  void add(std::string law, std::string witness) { violations.push_back({std::move(law), std::move(witness)}); }
  void note(std::string text) { notes.push_back(std::move(text)); }
  /// Appends the other report's entries, prefixing law names.
  void merge(const ValidationReport& other, const std::string& prefix = {});
  bool has_law(const std::string& law) const;
};

}  // namespace kcat
