#include "csv.hpp"

#include <iterator>
#include <stdexcept>

namespace twistspin::cli {

std::vector<CsvRecord> read_csv(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::vector<CsvRecord> records;
  std::size_t line = 1;
  std::size_t i = 0;
  // UTF-8 byte order mark
  if (text.compare(0, 3, "\xEF\xBB\xBF") == 0) i = 3;

  while (i < text.size()) {
    CsvRecord record{line, {}};
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    bool end_of_record = false;
    while (i < text.size() && !end_of_record) {
      const char c = text[i];
      if (in_quotes) {
        if (c == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field += '"';
            i += 2;
            continue;
          }
          in_quotes = false;
        } else {
          if (c == '\n') ++line;
          field += c;
        }
        ++i;
        continue;
      }
      switch (c) {
        case '"':
          in_quotes = true;
          field_was_quoted = true;
          break;
        case ',':
          record.fields.push_back(std::move(field));
          field.clear();
          field_was_quoted = false;
          break;
        case '\r':
          break;
        case '\n':
          ++line;
          end_of_record = true;
          break;
        default:
          field += c;
      }
      ++i;
    }
    if (in_quotes) throw std::runtime_error("unterminated quoted field starting on line " + std::to_string(record.line));
    const bool blank = record.fields.empty() && field.empty() && !field_was_quoted;
    if (!blank) {
      record.fields.push_back(std::move(field));
      records.push_back(std::move(record));
    }
  }
  return records;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_escape(fields[i]);
  out << '\n';
}

}  // namespace twistspin::cli
