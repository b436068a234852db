#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "contin/bounds.hpp"
#include "contin/census.hpp"
#include "contin/explorer.hpp"

namespace contin {

enum class OutputFormat { json, csv, plain };

OutputFormat parse_output_format(std::string_view name);

// Big integers are always decimal strings; words use the comma text format.

nlohmann::ordered_json to_json(const CensusReport& report);
nlohmann::ordered_json to_json(const WitnessRecord& record);
nlohmann::ordered_json to_json(const CertifiedReal& x);
nlohmann::ordered_json to_json(const BoundsReport& report);
nlohmann::ordered_json to_json(const ScanEntry& entry);

std::string render(const CensusReport& report, OutputFormat format);
std::string render(const BoundsReport& report, OutputFormat format);
std::string render(const std::vector<WitnessRecord>& records, OutputFormat format);
std::string render(const std::vector<ScanEntry>& entries, OutputFormat format);

/// RFC 4180 quoting for a single CSV field.
std::string csv_field(std::string_view text);

}  // namespace contin
