#include "cli/report.hpp"

#include <algorithm>
#include <iomanip>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace disposition::cli {

namespace {

const std::regex& quantity_pattern() {
  static const std::regex pattern(
      R"(witt|lyndon_count|order\(G\)|order\((gamma|lambda)_[1-9][0-9]*\)|order\(Z_[0-9]+\)|)"
      R"(multiplier_rank|polynilpotent_multiplier_rank|combined_lhs|burns_ellis_bound|jones_bound|njp_bound)");
  return pattern;
}

std::string join(const std::vector<unsigned>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string params_text(const ReportRow& row) {
  std::ostringstream out;
  if (row.quantity == "witt" || row.quantity == "lyndon_count") {
    out << "n=" << row.m.value_or(0) << " d=" << row.d;
    return out.str();
  }
  out << "p=" << row.p << " d=" << row.d << " c=" << row.c;
  if (row.m) out << " m=" << *row.m;
  if (row.row) out << " row=" << join(*row.row, ',');
  return out.str();
}

std::string note_id(const std::string& note) { return note.substr(0, note.find(':')); }

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "table") return Format::table;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + text + "' (expected table, json or csv)");
}

bool is_known_quantity(const std::string& quantity) {
  return std::regex_match(quantity, quantity_pattern());
}

void validate(const ReportRow& row) {
  if (!is_known_quantity(row.quantity)) throw std::invalid_argument("unknown quantity '" + row.quantity + "'");
  if (row.exponent.empty() || !std::all_of(row.exponent.begin(), row.exponent.end(), [](char ch) {
        return ch >= '0' && ch <= '9';
      })) {
    throw std::invalid_argument("exponent '" + row.exponent + "' is not a nonnegative integer");
  }
}

nlohmann::ordered_json to_json(const ReportRow& row) {
  nlohmann::ordered_json out;
  out["quantity"] = row.quantity;
  out["p"] = row.p;
  out["d"] = row.d;
  out["c"] = row.c;
  if (row.m) out["m"] = *row.m;
  if (row.row) out["row"] = *row.row;
  out["exponent"] = row.exponent;
  if (row.note) out["note"] = *row.note;
  return out;
}

ReportRow row_from_json(const nlohmann::json& value) {
  ReportRow row;
  row.quantity = value.at("quantity").get<std::string>();
  row.p = value.at("p").get<std::uint64_t>();
  row.d = value.at("d").get<unsigned>();
  row.c = value.at("c").get<unsigned>();
  if (value.contains("m")) row.m = value.at("m").get<unsigned>();
  if (value.contains("row")) row.row = value.at("row").get<std::vector<unsigned>>();
  row.exponent = value.at("exponent").get<std::string>();
  if (value.contains("note")) row.note = value.at("note").get<std::string>();
  validate(row);
  return row;
}

std::string csv_line(const ReportRow& row) {
  std::ostringstream out;
  out << csv_field(row.quantity) << ',' << row.p << ',' << row.d << ',' << row.c << ',';
  if (row.m) out << *row.m;
  out << ',';
  if (row.row) out << csv_field(join(*row.row, ','));
  out << ',' << row.exponent << ',';
  if (row.note) out << csv_field(*row.note);
  return out.str();
}

void print_rows(const std::vector<ReportRow>& rows, Format format, std::ostream& out) {
  for (const auto& row : rows) validate(row);
  switch (format) {
    case Format::json: {
      auto array = nlohmann::ordered_json::array();
      for (const auto& row : rows) array.push_back(to_json(row));
      out << array.dump(2) << '\n';
      return;
    }
    case Format::csv:
      out << kCsvHeader << '\n';
      for (const auto& row : rows) out << csv_line(row) << '\n';
      return;
    case Format::table:
      break;
  }

  std::size_t wq = 8, wp = 6, we = 8;
  for (const auto& row : rows) {
    wq = std::max(wq, row.quantity.size());
    wp = std::max(wp, params_text(row).size());
    we = std::max(we, row.exponent.size());
  }
  out << std::left << std::setw(static_cast<int>(wq)) << "quantity" << "  " << std::setw(static_cast<int>(wp))
      << "params" << "  " << std::right << std::setw(static_cast<int>(we)) << "exponent" << "  note\n";
  std::vector<std::string> notes;
  for (const auto& row : rows) {
    out << std::left << std::setw(static_cast<int>(wq)) << row.quantity << "  " << std::setw(static_cast<int>(wp))
        << params_text(row) << "  " << std::right << std::setw(static_cast<int>(we)) << row.exponent;
    if (row.note) {
      out << "  " << note_id(*row.note);
      if (std::find(notes.begin(), notes.end(), *row.note) == notes.end()) notes.push_back(*row.note);
    }
    out << '\n';
  }
  if (!notes.empty()) {
    out << "\nnotes:\n";
    for (const auto& note : notes) out << "  " << note << '\n';
  }
}

}  // namespace disposition::cli
