#pragma once

#include <string>
#include <vector>

namespace kcat::cli {

enum class Status { Pass, Fail, Info };

struct Record {
  std::string check;
  Status status = Status::Info;
  std::string witness;
};

/// Outcome of one command. Info records never affect the exit status.
struct Report {
  std::string command;
  std::vector<Record> records;

  void add(std::string check, Status status, std::string witness);
  void check(std::string name, bool ok, std::string witness) {
    add(std::move(name), ok ? Status::Pass : Status::Fail, std::move(witness));
  }
  void info(std::string name, std::string witness) { add(std::move(name), Status::Info, std::move(witness)); }

  std::size_t count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }

  /// Aligned table followed by a summary line.
  std::string human() const;
  /// `command=<echo>` then one `check=<name>\tstatus=<pass|fail|info>\twitness=<text>`
  /// line per record, then a `check=summary` record.
  std::string machine() const;
};

const char* status_name(Status s);

}  // namespace kcat::cli
