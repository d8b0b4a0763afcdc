#ifndef UMBRA_REPORT_HPP
#define UMBRA_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "umbra/oracles.hpp"

namespace umbra {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ReportFormat { JSON, CSV, PrettyText };

/// One evaluation/table/sample row.  A nonempty error means the value is
/// absent (CSV leaves the cell empty, JSON writes null).
struct EvalRow {
  std::vector<std::pair<std::string, std::string>> inputs;
  double value = 0.0;
  std::string branch;
  bool has_value = false;
  bool has_oracle = false;
  double oracle = 0.0;
  double abs_err = 0.0;
  std::string error;
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int total = 0;
};

/// Everything a run emits.  Serialized fields are byte-deterministic for a
/// fixed config and seed; wall_time_seconds is never serialized (it goes to
/// stderr) so reports hash stably.
struct ReportDocument {
  std::string tool_version = kToolVersion;
  std::vector<std::pair<std::string, std::string>> config_echo;
  std::vector<VerificationRecord> records;
  std::vector<EvalRow> rows;
  Summary summary;
  double wall_time_seconds = 0.0;
};

Summary summarize_records(const std::vector<VerificationRecord>& records);
Summary summarize_rows(const std::vector<EvalRow>& rows);

std::string to_json(const ReportDocument& doc);
std::string to_csv(const ReportDocument& doc);
std::string to_text(const ReportDocument& doc);

std::string render(const ReportDocument& doc, ReportFormat format);

}  // namespace umbra

#endif  // UMBRA_REPORT_HPP
