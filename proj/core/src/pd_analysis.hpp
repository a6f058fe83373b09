#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "twistspin/knot_codec.hpp"

namespace twistspin::detail {

enum class Slot : int { under_in = 0, over_b = 1, under_out = 2, over_d = 3 };

// Orientation data recovered from a PD code.
struct OrientedPD {
  // Per crossing: the over slot (1 = b, 3 = d) through which the over-strand enters.
  std::vector<int> over_entry_slot;
  // Edge label -> label of the edge that follows it along the knot.
  std::map<std::int64_t, std::int64_t> next_edge;
  std::size_t component_count = 0;
};

// Checks label multiplicity and orients every edge. Throws DomainError on
// codes that are not consistently orientable.
OrientedPD orient_pd(const PDCode& code);

}  // namespace twistspin::detail
