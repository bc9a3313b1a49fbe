// Structured verification records shared by the library suites and the CLI.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace deltafn {

enum class Status { Pass, Fail, Skipped, BudgetExceeded };
std::string to_string(Status s);

struct VerifyReport {
  std::string suite;
  std::string subject;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::Pass;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return status == Status::Pass; }
  /// Pass -> Fail when `ok` is false; other states are kept.
  void require(bool ok, const std::string& note = {});
};

inline constexpr const char* kReportSchema = "deltafn.report/1";

}  // namespace deltafn
