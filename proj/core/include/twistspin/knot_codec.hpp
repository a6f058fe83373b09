#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistspin/words.hpp"

namespace twistspin {

// Planar diagram code. Each crossing lists four edge labels counterclockwise,
// starting at the incoming under-edge: X(a, b, c, d) has the under-strand
// entering along a and leaving along c, and the over-strand on b and d.
// The crossing is positive when the over-strand runs d -> b and negative when
// it runs b -> d.
struct PDCode {
  struct Crossing {
    std::array<std::int64_t, 4> edges;
    friend bool operator==(const Crossing&, const Crossing&) = default;
  };
  std::vector<Crossing> crossings;
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

// Signed Gauss code: the sequence of crossing passes met while travelling the knot.
struct GaussCode {
  struct Pass {
    int crossing;
    bool over;
    int sign;  // +1 or -1, identical on both passes of a crossing
    friend bool operator==(const Pass&, const Pass&) = default;
  };
  std::vector<Pass> passes;
  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

// Artin braid word; generator +-i crosses strands i and i+1 (1-based).
// A positive generator is a positive crossing with the left strand passing over.
struct BraidWord {
  int strands = 0;
  std::vector<int> generators;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Oriented single-component knot diagram in Wirtinger form: one arc per
// under-pass. Arcs are numbered in order of first appearance when the knot
// is traversed from the smallest edge label of the source code.
struct KnotDiagram {
  struct Crossing {
    std::size_t over_arc;
    std::size_t under_in_arc;
    std::size_t under_out_arc;
    int sign;
    friend bool operator==(const Crossing&, const Crossing&) = default;
  };
  std::vector<Crossing> crossings;
  std::size_t arc_count = 0;
  friend bool operator==(const KnotDiagram&, const KnotDiagram&) = default;
};

enum class KnotFormat { pd, gauss, braid };

std::string_view to_string(KnotFormat f);
// "pd" / "gauss" / "braid"; throws DomainError otherwise.
KnotFormat parse_knot_format(std::string_view name);
// Guess from the leading token: "PD[" -> pd, O/U -> gauss, s -> braid.
std::optional<KnotFormat> detect_knot_format(std::string_view text);

// Grammar: PD[X(a,b,c,d), ...]. Whitespace-insensitive; lines starting with
// '#' are ignored. Validates label multiplicity, orientability and that the
// code describes a single component. Throws ParseError / DomainError.
PDCode parse_pd(std::string_view text);
// Grammar: O1+ U2+ O3- ...
GaussCode parse_gauss(std::string_view text);
// Grammar: s1 s2^-1 s1^3 ...; strands defaults to (largest index + 1).
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

std::string render_pd(const PDCode& code);
std::string render_gauss(const GaussCode& code);
std::string render_braid(const BraidWord& code);

PDCode to_pd(const GaussCode& code);
// Closes the braid in the standard way.
PDCode to_pd(const BraidWord& code);

// Merges edges along over-strands into arcs. Throws DomainError for
// multi-component or inconsistent codes.
KnotDiagram to_diagram(const PDCode& code);
KnotDiagram to_diagram(const GaussCode& code);
KnotDiagram to_diagram(const BraidWord& code);

// Parses any supported notation straight to a diagram.
KnotDiagram parse_knot(std::string_view text, std::optional<KnotFormat> format = std::nullopt,
                       std::optional<int> braid_strands = std::nullopt);

// One generator per arc and one relator per crossing: o u o^-1 w^-1 for a
// positive crossing, o^-1 u o w^-1 for a negative one (o over, u under-in,
// w under-out). All relators are kept. The meridian is x1.
Presentation wirtinger(const KnotDiagram& d);

}  // namespace twistspin
