#include "report_format.hpp"

#include <algorithm>
#include <iomanip>
#include <stdexcept>

namespace deltafn::cli {

using nlohmann::json;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + s + "' (text, csv, json)");
}

json to_json(const VerifyReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json rows = json::array();
  for (const auto& row : r.rows) {
    json o = json::object();
    for (std::size_t i = 0; i < row.size() && i < r.columns.size(); ++i) o[r.columns[i]] = row[i];
    rows.push_back(o);
  }
  return json{{"suite", r.suite},   {"subject", r.subject}, {"parameters", params},
              {"status", to_string(r.status)}, {"columns", r.columns}, {"table", rows},
              {"notes", r.notes},   {"wall_seconds", r.seconds}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Display width in code points (cells may hold UTF-8 such as the middle dot).
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

void write_text(std::ostream& os, const VerifyReport& r) {
  os << "== " << r.suite << ": " << r.subject << " -> " << to_string(r.status);
  os << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)\n";
  std::vector<std::size_t> width(r.columns.size(), 0);
  for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = display_width(r.columns[i]);
  for (const auto& row : r.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], display_width(row[i]));
  auto line = [&](const std::vector<std::string>& cells) {
    os << " ";
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
      os << " " << cells[i] << std::string(width[i] - display_width(cells[i]), ' ');
    os << "\n";
  };
  if (!r.columns.empty()) line(r.columns);
  for (const auto& row : r.rows) line(row);
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
}

}  // namespace

void write_reports(std::ostream& os, const std::vector<VerifyReport>& reports, Format f) {
  switch (f) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      os << json{{"schema", kReportSchema}, {"reports", arr}}.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "suite,subject,status,row,column,value\n";
      for (const auto& r : reports)
        for (std::size_t k = 0; k < r.rows.size(); ++k)
          for (std::size_t i = 0; i < r.rows[k].size() && i < r.columns.size(); ++i)
            os << csv_field(r.suite) << "," << csv_field(r.subject) << "," << to_string(r.status) << "," << k << ","
               << csv_field(r.columns[i]) << "," << csv_field(r.rows[k][i]) << "\n";
      break;
    case Format::Text:
      for (const auto& r : reports) write_text(os, r);
      break;
  }
}

}  // namespace deltafn::cli
