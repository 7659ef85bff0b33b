#pragma once

#include <string>

#include <json.hpp>

#include "baer/classifier.hpp"

namespace baer {

nlohmann::json to_json(const SingularityInfo& s);
nlohmann::json to_json(const Report& r);

/// Column order of CSV output.
const std::string& csv_header();
/// One CSV line (no trailing newline); inapplicable fields are empty.
std::string to_csv_row(const Report& r);

}  // namespace baer
