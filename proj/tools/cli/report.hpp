#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace disposition::cli {

enum class Format { table, json, csv };

Format parse_format(const std::string& text);

// One reported quantity. For witt rows p and c are 0 and m carries n.
struct ReportRow {
  std::string quantity;
  std::uint64_t p = 0;
  unsigned d = 0;
  unsigned c = 0;
  std::optional<unsigned> m;
  std::optional<std::vector<unsigned>> row;
  std::string exponent;
  std::optional<std::string> note;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

// Throws std::invalid_argument unless the quantity is in the vocabulary and the
// exponent is a nonnegative decimal integer.
void validate(const ReportRow& row);
bool is_known_quantity(const std::string& quantity);

nlohmann::ordered_json to_json(const ReportRow& row);
ReportRow row_from_json(const nlohmann::json& value);

inline constexpr const char* kCsvHeader = "quantity,p,d,c,m,row,exponent,note";

std::string csv_line(const ReportRow& row);
void print_rows(const std::vector<ReportRow>& rows, Format format, std::ostream& out);

}  // namespace disposition::cli
