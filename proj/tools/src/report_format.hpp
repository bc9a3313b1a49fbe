// Text, CSV and JSON renderings of verification reports.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "deltafn/report.hpp"
#include "json.hpp"

namespace deltafn::cli {

enum class Format { Text, Csv, Json };
Format parse_format(const std::string& s);

nlohmann::json to_json(const VerifyReport& r);
void write_reports(std::ostream& os, const std::vector<VerifyReport>& reports, Format f);

}  // namespace deltafn::cli
