#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace twistspin::cli {

struct CsvRecord {
  std::size_t line;  // 1-based line on which the record starts
  std::vector<std::string> fields;
};

// Comma-separated, double-quoted fields with "" escapes, LF or CRLF line
// ends. Blank lines are skipped. Throws std::runtime_error on an
// unterminated quote.
std::vector<CsvRecord> read_csv(std::istream& in);

std::string csv_escape(std::string_view field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace twistspin::cli
