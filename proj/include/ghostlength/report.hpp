#pragma once

// Report documents produced by the command-line tool. The JSON form is
// versioned by the "schema" field; timing lives outside "results" so that
// results are byte-identical across runs with the same inputs.

#include <iosfwd>
#include <string>
#include <vector>

#include "ghostlength/io.hpp"

namespace ghostlength {

inline constexpr const char* kReportSchema = "ghostlength/1";

// A block of aligned cells for the text format. With `rule_after_first`,
// the first row is separated from the rest by a horizontal rule and the
// first column by a vertical bar (the layout of a labelled value table).
struct TextTable {
  std::string title;
  std::vector<std::vector<std::string>> rows;
  bool rule_after_first = true;
  bool right_align = true;
};

struct ReportDocument {
  std::string command;
  io::json parameters = io::json::object();
  io::json results = io::json::object();
  std::vector<TextTable> tables;
  std::vector<std::string> notes;
  double timing_ms = 0.0;
};

enum class ReportFormat { json, text };

io::json report_to_json(const ReportDocument& doc);
void emit_report(const ReportDocument& doc, ReportFormat format, std::ostream& out);

std::string render_table(const TextTable& t);

// Splits wide horizontal tables (label column plus values) into chunks of
// at most `width` value columns, repeating the label column.
std::vector<TextTable> wrap_columns(const TextTable& t, std::size_t width);

}  // namespace ghostlength
