#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistspin/knot_codec.hpp"
#include "twistspin/words.hpp"

namespace twistspin::cli {

struct KnotTableEntry {
  std::string name;
  KnotFormat format = KnotFormat::pd;
  std::string code;
  std::size_t line = 0;
};

struct RowError {
  std::size_t line;
  std::string message;
};

// A table with header `name,format,code`. Rows that fail to parse or repeat
// a name are reported in `errors` and left out of `entries`.
struct KnotTable {
  std::vector<KnotTableEntry> entries;
  std::vector<RowError> errors;

  const KnotTableEntry* find(std::string_view name) const;
};

// Throws std::runtime_error when the header is wrong or the CSV is malformed.
KnotTable load_knot_table(std::istream& in);

// unknot, trefoil, figure-eight, 5_1 and 5_2 as PD codes (data/knots.csv).
const KnotTable& bundled_knot_table();
std::string_view bundled_knot_table_csv();

Presentation entry_presentation(const KnotTableEntry& entry);

}  // namespace twistspin::cli
