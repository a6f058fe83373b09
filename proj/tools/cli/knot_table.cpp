#include "knot_table.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "bundled_knots.hpp"
#include "csv.hpp"

namespace twistspin::cli {

const KnotTableEntry* KnotTable::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

KnotTable load_knot_table(std::istream& in) {
  const auto records = read_csv(in);
  KnotTable table;
  if (records.empty()) return table;
  const std::vector<std::string> header{"name", "format", "code"};
  if (records.front().fields != header) throw std::runtime_error("knot table header must be 'name,format,code'");

  std::set<std::string> names;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.fields.size() != 3) {
      table.errors.push_back({r.line, "expected 3 fields, found " + std::to_string(r.fields.size())});
      continue;
    }
    KnotTableEntry entry{r.fields[0], KnotFormat::pd, r.fields[2], r.line};
    if (entry.name.empty()) {
      table.errors.push_back({r.line, "empty knot name"});
      continue;
    }
    if (!names.insert(entry.name).second) {
      table.errors.push_back({r.line, "duplicate knot name '" + entry.name + "'"});
      continue;
    }
    try {
      entry.format = parse_knot_format(r.fields[1]);
      parse_knot(entry.code, entry.format);
    } catch (const std::exception& ex) {
      table.errors.push_back({r.line, "knot '" + entry.name + "': " + ex.what()});
      continue;
    }
    table.entries.push_back(std::move(entry));
  }
  return table;
}

std::string_view bundled_knot_table_csv() { return kBundledKnotsCsv; }

const KnotTable& bundled_knot_table() {
  static const KnotTable table = [] {
    std::istringstream in{std::string(kBundledKnotsCsv)};
    return load_knot_table(in);
  }();
  return table;
}

Presentation entry_presentation(const KnotTableEntry& entry) { return wirtinger(parse_knot(entry.code, entry.format)); }

}  // namespace twistspin::cli
