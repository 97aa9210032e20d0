#include "ghostlength/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ghostlength {

io::json report_to_json(const ReportDocument& doc) {
  return io::json{{"schema", kReportSchema},
                  {"command", doc.command},
                  {"parameters", doc.parameters},
                  {"results", doc.results},
                  {"timing_ms", doc.timing_ms}};
}

std::string render_table(const TextTable& t) {
  std::size_t ncols = 0;
  for (const auto& r : t.rows) ncols = std::max(ncols, r.size());
  std::vector<std::size_t> width(ncols, 0);
  for (const auto& r : t.rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());

  std::ostringstream out;
  if (!t.title.empty()) out << t.title << '\n';
  std::size_t line_width = 0;
  std::vector<std::string> lines;
  for (const auto& r : t.rows) {
    std::string line;
    for (std::size_t c = 0; c < ncols; ++c) {
      const std::string cell = c < r.size() ? r[c] : "";
      if (c == 0) {
        line += cell + std::string(width[0] - cell.size(), ' ');
        line += t.rule_after_first ? " |" : "";
      } else {
        const std::string pad(width[c] - cell.size(), ' ');
        line += "  " + (t.right_align ? pad + cell : cell + pad);
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    line_width = std::max(line_width, line.size());
    lines.push_back(std::move(line));
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out << lines[i] << '\n';
    if (i == 0 && t.rule_after_first && lines.size() > 1) {
      std::string rule(line_width, '-');
      if (!width.empty() && width[0] + 1 < rule.size()) rule[width[0] + 1] = '+';
      out << rule << '\n';
    }
  }
  return out.str();
}

std::vector<TextTable> wrap_columns(const TextTable& t, std::size_t width) {
  std::size_t values = 0;
  for (const auto& r : t.rows) values = std::max(values, r.empty() ? 0 : r.size() - 1);
  if (width == 0 || values <= width) return {t};
  std::vector<TextTable> out;
  for (std::size_t start = 0; start < values; start += width) {
    TextTable chunk{start == 0 ? t.title : "", {}, t.rule_after_first, t.right_align};
    for (const auto& r : t.rows) {
      std::vector<std::string> row{r.empty() ? "" : r[0]};
      for (std::size_t c = start + 1; c < r.size() && c <= start + width; ++c) row.push_back(r[c]);
      chunk.rows.push_back(std::move(row));
    }
    out.push_back(std::move(chunk));
  }
  return out;
}

void emit_report(const ReportDocument& doc, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::json) {
    out << report_to_json(doc).dump(2) << '\n';
    return;
  }
  out << "ghostlength " << doc.command << '\n';
  for (const auto& [key, value] : doc.parameters.items())
    out << "  " << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump())
        << '\n';
  for (const auto& t : doc.tables) out << '\n' << render_table(t);
  if (!doc.notes.empty()) out << '\n';
  for (const auto& n : doc.notes) out << n << '\n';
}

}  // namespace ghostlength
