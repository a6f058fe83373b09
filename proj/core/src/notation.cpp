// Text grammars for PD, Gauss and braid codes, plus conversions to PD.

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "pd_analysis.hpp"
#include "twistspin/errors.hpp"
#include "twistspin/knot_codec.hpp"

namespace twistspin {

namespace {

// Blanks out '#' comment lines so byte offsets stay valid for diagnostics.
std::string strip_comments(std::string_view text) {
  std::string out(text);
  std::size_t line_start = 0;
  while (line_start < out.size()) {
    std::size_t line_end = out.find('\n', line_start);
    if (line_end == std::string::npos) line_end = out.size();
    std::size_t first = line_start;
    while (first < line_end && (out[first] == ' ' || out[first] == '\t')) ++first;
    if (first < line_end && out[first] == '#') {
      std::fill(out.begin() + static_cast<std::ptrdiff_t>(first), out.begin() + static_cast<std::ptrdiff_t>(line_end), ' ');
    }
    line_start = line_end + 1;
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* context) {
    if (!accept(c)) {
      std::string msg = std::string("expected '") + c + "' " + context;
      if (pos_ < text_.size()) msg += ", found '" + std::string(1, text_[pos_]) + "'";
      else msg += ", found end of input";
      throw ParseError(msg, pos_);
    }
  }
  std::int64_t integer(const char* context, bool allow_sign = false) {
    skip_ws();
    const std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits_start) throw ParseError(std::string("expected an integer ") + context, start);
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      throw ParseError(std::string("integer out of range ") + context, start);
    }
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(KnotFormat f) {
  switch (f) {
    case KnotFormat::pd: return "pd";
    case KnotFormat::gauss: return "gauss";
    case KnotFormat::braid: return "braid";
  }
  return "pd";
}

KnotFormat parse_knot_format(std::string_view name) {
  if (name == "pd") return KnotFormat::pd;
  if (name == "gauss") return KnotFormat::gauss;
  if (name == "braid") return KnotFormat::braid;
  throw DomainError("unknown knot format '" + std::string(name) + "' (expected pd, gauss or braid)");
}

std::optional<KnotFormat> detect_knot_format(std::string_view text) {
  const std::string cleaned = strip_comments(text);
  for (char c : cleaned) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (c) {
      case 'P': return KnotFormat::pd;
      case 'O':
      case 'U': return KnotFormat::gauss;
      case 's': return KnotFormat::braid;
      default: return std::nullopt;
    }
  }
  return std::nullopt;
}

PDCode parse_pd(std::string_view text) {
  const std::string cleaned = strip_comments(text);
  Cursor in(cleaned);
  in.expect('P', "at start of PD code");
  in.expect('D', "after 'P'");
  in.expect('[', "after 'PD'");
  PDCode code;
  if (!in.accept(']')) {
    do {
      in.expect('X', "at start of crossing");
      in.expect('(', "after 'X'");
      PDCode::Crossing x{};
      for (int i = 0; i < 4; ++i) {
        if (i > 0 && in.peek() == ')') throw ParseError("X(...) needs exactly 4 edge labels", in.pos());
        if (i > 0) in.expect(',', "between edge labels");
        const std::size_t at = in.pos();
        x.edges[static_cast<std::size_t>(i)] = in.integer("as edge label");
        if (x.edges[static_cast<std::size_t>(i)] <= 0) throw ParseError("edge labels must be positive", at);
      }
      if (in.peek() == ',') throw ParseError("X(...) needs exactly 4 edge labels", in.pos());
      in.expect(')', "after 4 edge labels");
      code.crossings.push_back(x);
    } while (in.accept(','));
    in.expect(']', "at end of PD code");
  }
  if (!in.at_end()) throw ParseError("trailing characters after PD code", in.pos());
  if (code.crossings.empty()) throw DomainError("PD code has no crossings");
  detail::orient_pd(code);
  return code;
}

GaussCode parse_gauss(std::string_view text) {
  const std::string cleaned = strip_comments(text);
  Cursor in(cleaned);
  GaussCode code;
  while (!in.at_end()) {
    const std::size_t at = in.pos();
    const char kind = in.peek();
    if (kind != 'O' && kind != 'U') throw ParseError("expected 'O' or 'U' at start of Gauss token", at);
    in.accept(kind);
    const auto id = in.integer("as crossing id");
    if (id <= 0 || id > 1'000'000) throw ParseError("crossing id out of range", at);
    int sign = 0;
    if (in.accept('+')) sign = 1;
    else if (in.accept('-')) sign = -1;
    else throw ParseError("expected crossing sign '+' or '-'", in.pos());
    code.passes.push_back({static_cast<int>(id), kind == 'O', sign});
    in.accept(',');
  }
  if (code.passes.empty()) throw DomainError("Gauss code has no crossings");

  std::map<int, std::vector<const GaussCode::Pass*>> by_id;
  for (const auto& p : code.passes) by_id[p.crossing].push_back(&p);
  for (const auto& [id, passes] : by_id) {
    const std::string name = "crossing " + std::to_string(id);
    if (passes.size() != 2) throw DomainError(name + " appears " + std::to_string(passes.size()) + " times (expected 2)");
    if (passes[0]->over == passes[1]->over) {
      throw DomainError(name + (passes[0]->over ? " has no under-pass" : " has no over-pass"));
    }
    if (passes[0]->sign != passes[1]->sign) throw DomainError(name + " has inconsistent signs");
  }
  return code;
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  const std::string cleaned = strip_comments(text);
  Cursor in(cleaned);
  BraidWord braid;
  int largest = 0;
  while (!in.at_end()) {
    const std::size_t at = in.pos();
    if (!in.accept('s')) throw ParseError("expected braid generator 's<i>'", at);
    const auto index = in.integer("as braid generator index");
    if (index <= 0 || index > 100'000) throw ParseError("braid generator index out of range", at);
    std::int64_t power = 1;
    if (in.accept('^')) {
      const std::size_t exp_at = in.pos();
      power = in.integer("as braid exponent", true);
      if (power == 0 || std::llabs(power) > 100'000) throw ParseError("braid exponent must be nonzero", exp_at);
    }
    for (std::int64_t i = 0; i < std::llabs(power); ++i) {
      braid.generators.push_back(power > 0 ? static_cast<int>(index) : -static_cast<int>(index));
    }
    largest = std::max(largest, static_cast<int>(index));
  }
  braid.strands = strands.value_or(largest + 1);
  if (braid.strands < 1) throw DomainError("braid needs at least one strand");
  if (largest >= braid.strands) {
    throw DomainError("braid generator s" + std::to_string(largest) + " out of range for " +
                      std::to_string(braid.strands) + " strands");
  }
  if (braid.generators.empty()) throw DomainError("braid word has no crossings");
  return braid;
}

std::string render_pd(const PDCode& code) {
  std::ostringstream os;
  os << "PD[";
  for (std::size_t i = 0; i < code.crossings.size(); ++i) {
    const auto& e = code.crossings[i].edges;
    os << (i ? ", " : "") << "X(" << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ')';
  }
  os << ']';
  return os.str();
}

std::string render_gauss(const GaussCode& code) {
  std::ostringstream os;
  for (std::size_t i = 0; i < code.passes.size(); ++i) {
    const auto& p = code.passes[i];
    os << (i ? " " : "") << (p.over ? 'O' : 'U') << p.crossing << (p.sign > 0 ? '+' : '-');
  }
  return os.str();
}

std::string render_braid(const BraidWord& code) {
  std::ostringstream os;
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    const int g = code.generators[i];
    os << (i ? " " : "") << 's' << std::abs(g);
    if (g < 0) os << "^-1";
  }
  return os.str();
}

PDCode to_pd(const GaussCode& code) {
  const auto n = static_cast<std::int64_t>(code.passes.size());
  // Edge k (label k+1) runs from pass k to pass k+1.
  auto in_label = [&](std::int64_t k) { return k == 0 ? n : k; };
  auto out_label = [](std::int64_t k) { return k + 1; };

  struct Ends {
    std::int64_t under_in = 0, under_out = 0, over_in = 0, over_out = 0;
    int sign = 0;
  };
  std::vector<int> order;
  std::map<int, Ends> ends;
  for (std::int64_t k = 0; k < n; ++k) {
    const auto& p = code.passes[static_cast<std::size_t>(k)];
    if (!ends.count(p.crossing)) order.push_back(p.crossing);
    Ends& e = ends[p.crossing];
    e.sign = p.sign;
    if (p.over) {
      e.over_in = in_label(k);
      e.over_out = out_label(k);
    } else {
      e.under_in = in_label(k);
      e.under_out = out_label(k);
    }
  }
  PDCode pd;
  for (int id : order) {
    const Ends& e = ends[id];
    if (e.under_in == 0 || e.over_in == 0) throw DomainError("crossing " + std::to_string(id) + " lacks an over- or under-pass");
    if (e.sign > 0) {
      pd.crossings.push_back({{e.under_in, e.over_out, e.under_out, e.over_in}});
    } else {
      pd.crossings.push_back({{e.under_in, e.over_in, e.under_out, e.over_out}});
    }
  }
  return pd;
}

PDCode to_pd(const BraidWord& code) {
  if (code.strands < 1) throw DomainError("braid needs at least one strand");
  if (code.generators.empty()) throw DomainError("braid word has no crossings");
  std::vector<std::int64_t> current(static_cast<std::size_t>(code.strands));
  for (int j = 0; j < code.strands; ++j) current[static_cast<std::size_t>(j)] = j + 1;
  std::int64_t next_label = code.strands + 1;

  PDCode pd;
  for (int g : code.generators) {
    const int i = std::abs(g);
    if (i < 1 || i >= code.strands) {
      throw DomainError("braid generator s" + std::to_string(i) + " out of range for " + std::to_string(code.strands) + " strands");
    }
    auto& left = current[static_cast<std::size_t>(i - 1)];
    auto& right = current[static_cast<std::size_t>(i)];
    const std::int64_t to_left = next_label++;   // strand ending at position i-1
    const std::int64_t to_right = next_label++;  // strand ending at position i
    if (g > 0) {
      // left strand passes over, moving right; right strand passes under, moving left
      pd.crossings.push_back({{right, to_right, to_left, left}});
    } else {
      // right strand passes over, moving left; left strand passes under, moving right
      pd.crossings.push_back({{left, right, to_right, to_left}});
    }
    left = to_left;
    right = to_right;
  }

  // Closure: the strand leaving position j at the top re-enters at position j.
  std::map<std::int64_t, std::int64_t> closure;
  for (int j = 0; j < code.strands; ++j) {
    const auto final_label = current[static_cast<std::size_t>(j)];
    if (final_label == j + 1) throw DomainError("braid closure is not a knot: strand " + std::to_string(j + 1) + " is unlinked");
    closure[final_label] = j + 1;
  }
  for (auto& x : pd.crossings) {
    for (auto& e : x.edges) {
      if (auto it = closure.find(e); it != closure.end()) e = it->second;
    }
  }
  return pd;
}

KnotDiagram to_diagram(const GaussCode& code) { return to_diagram(to_pd(code)); }
KnotDiagram to_diagram(const BraidWord& code) { return to_diagram(to_pd(code)); }

KnotDiagram parse_knot(std::string_view text, std::optional<KnotFormat> format, std::optional<int> braid_strands) {
  if (!format) format = detect_knot_format(text);
  if (!format) throw ParseError("cannot determine knot notation (expected PD[...], Gauss O/U tokens or braid s<i> tokens)", 0);
  switch (*format) {
    case KnotFormat::pd: return to_diagram(parse_pd(text));
    case KnotFormat::gauss: return to_diagram(parse_gauss(text));
    case KnotFormat::braid: return to_diagram(parse_braid(text, braid_strands));
  }
  throw DomainError("unsupported knot format");
}

}  // namespace twistspin
