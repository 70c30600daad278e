#include "kcat/cli/report.hpp"

#include <algorithm>

namespace kcat::cli {

namespace {

std::string clean(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return s;
}

std::string summary(const Report& r) {
  return std::to_string(r.count(Status::Pass)) + " passed, " + std::to_string(r.count(Status::Fail)) + " failed, " +
         std::to_string(r.count(Status::Info)) + " info";
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    default:
      return "info";
  }
}

void Report::add(std::string check, Status status, std::string witness) {
  records.push_back({clean(std::move(check)), status, clean(std::move(witness))});
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [&](const Record& r) { return r.status == s; }));
}

std::string Report::human() const {
  std::size_t width = 0;
  for (const auto& r : records) width = std::max(width, r.check.size());
  std::string out = "kcat " + command + "\n";
  for (const auto& r : records) {
    const char* tag = r.status == Status::Pass ? "PASS" : r.status == Status::Fail ? "FAIL" : "    ";
    out += "  " + std::string(tag) + "  " + r.check + std::string(width - r.check.size(), ' ') + "  " + r.witness + "\n";
  }
  out += (ok() ? "OK: " : "FAILED: ") + summary(*this) + "\n";
  return out;
}

std::string Report::machine() const {
  std::string out = "command=" + clean(command) + "\n";
  for (const auto& r : records)
    out += "check=" + r.check + "\tstatus=" + status_name(r.status) + "\twitness=" + r.witness + "\n";
  out += "check=summary\tstatus=" + std::string(ok() ? "pass" : "fail") + "\twitness=" + summary(*this) + "\n";
  return out;
}

}  // namespace kcat::cli
