#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pd_analysis.hpp"
#include "twistspin/errors.hpp"
#include "twistspin/knot_codec.hpp"

namespace twistspin {

namespace detail {

namespace {

enum Dir : std::uint8_t { unknown = 0, into = 1, out_of = 2 };

Dir opposite(Dir d) { return d == into ? out_of : into; }

}  // namespace

OrientedPD orient_pd(const PDCode& code) {
  const std::size_t n = code.crossings.size();
  if (n == 0) throw DomainError("PD code has no crossings");

  using Occurrence = std::pair<std::size_t, int>;  // (crossing, slot)
  std::map<std::int64_t, std::vector<Occurrence>> occurrences;
  for (std::size_t x = 0; x < n; ++x) {
    for (int s = 0; s < 4; ++s) occurrences[code.crossings[x].edges[static_cast<std::size_t>(s)]].push_back({x, s});
  }
  for (const auto& [label, occ] : occurrences) {
    if (occ.size() != 2) {
      throw DomainError("edge label " + std::to_string(label) + " appears " + std::to_string(occ.size()) +
                        " times (each label must appear exactly twice)");
    }
  }

  std::vector<std::array<Dir, 4>> dir(n, {unknown, unknown, unknown, unknown});
  for (auto& d : dir) {
    d[0] = into;
    d[2] = out_of;
  }
  auto assign = [&](std::size_t x, int s, Dir value) -> bool {
    Dir& slot = dir[x][static_cast<std::size_t>(s)];
    if (slot == unknown) {
      slot = value;
      return true;
    }
    if (slot != value) {
      throw DomainError("PD code cannot be consistently oriented (conflict at crossing " + std::to_string(x + 1) + ")");
    }
    return false;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    // An edge leaves one crossing and enters another.
    for (const auto& [label, occ] : occurrences) {
      const auto [x0, s0] = occ[0];
      const auto [x1, s1] = occ[1];
      const Dir d0 = dir[x0][static_cast<std::size_t>(s0)];
      const Dir d1 = dir[x1][static_cast<std::size_t>(s1)];
      if (d0 != unknown) changed |= assign(x1, s1, opposite(d0));
      if (d1 != unknown) changed |= assign(x0, s0, opposite(d1));
    }
    // The over-strand passes straight through.
    for (std::size_t x = 0; x < n; ++x) {
      if (dir[x][1] != unknown) changed |= assign(x, 3, opposite(dir[x][1]));
      if (dir[x][3] != unknown) changed |= assign(x, 1, opposite(dir[x][3]));
    }
  }

  OrientedPD result;
  result.over_entry_slot.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (dir[x][1] == unknown) throw DomainError("PD code cannot be oriented at crossing " + std::to_string(x + 1));
    const auto& e = code.crossings[x].edges;
    const int in_slot = dir[x][1] == into ? 1 : 3;
    const int out_slot = 4 - in_slot;
    result.over_entry_slot[x] = in_slot;
    result.next_edge[e[0]] = e[2];
    result.next_edge[e[static_cast<std::size_t>(in_slot)]] = e[static_cast<std::size_t>(out_slot)];
  }

  std::set<std::int64_t> seen;
  for (const auto& [label, unused] : occurrences) {
    if (seen.count(label)) continue;
    ++result.component_count;
    std::int64_t e = label;
    while (seen.insert(e).second) e = result.next_edge.at(e);
  }
  return result;
}

}  // namespace detail

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

KnotDiagram to_diagram(const PDCode& code) {
  const auto oriented = detail::orient_pd(code);
  if (oriented.component_count != 1) {
    throw DomainError("not a knot: diagram has " + std::to_string(oriented.component_count) + " components");
  }

  // Dense indices for edge labels.
  std::map<std::int64_t, std::size_t> index;
  for (const auto& [label, unused] : oriented.next_edge) index.emplace(label, index.size());

  UnionFind arcs(index.size());
  for (const auto& x : code.crossings) arcs.unite(index.at(x.edges[1]), index.at(x.edges[3]));

  // Number arcs by first appearance, travelling from the smallest label.
  std::map<std::size_t, std::size_t> arc_id;
  const std::int64_t start = oriented.next_edge.begin()->first;
  std::int64_t e = start;
  do {
    const std::size_t root = arcs.find(index.at(e));
    arc_id.emplace(root, arc_id.size());
    e = oriented.next_edge.at(e);
  } while (e != start);

  KnotDiagram d;
  d.arc_count = arc_id.size();
  for (std::size_t x = 0; x < code.crossings.size(); ++x) {
    const auto& edges = code.crossings[x].edges;
    auto arc_of = [&](std::int64_t label) { return arc_id.at(arcs.find(index.at(label))); };
    d.crossings.push_back({arc_of(edges[1]), arc_of(edges[0]), arc_of(edges[2]),
                           oriented.over_entry_slot[x] == 3 ? +1 : -1});
  }
  if (d.arc_count != d.crossings.size()) {
    throw DomainError("diagram has " + std::to_string(d.arc_count) + " arcs but " + std::to_string(d.crossings.size()) +
                      " crossings");
  }
  return d;
}

Presentation wirtinger(const KnotDiagram& d) {
  if (d.arc_count == 0 || d.crossings.size() != d.arc_count) {
    throw DomainError("Wirtinger presentation needs a diagram with as many crossings as arcs");
  }
  std::vector<Word> relators;
  relators.reserve(d.crossings.size());
  for (const auto& x : d.crossings) {
    if (x.over_arc >= d.arc_count || x.under_in_arc >= d.arc_count || x.under_out_arc >= d.arc_count) {
      throw DomainError("crossing references an arc out of range");
    }
    const auto o = static_cast<Generator>(x.over_arc);
    const auto u = static_cast<Generator>(x.under_in_arc);
    const auto w = static_cast<Generator>(x.under_out_arc);
    const int s = x.sign > 0 ? 1 : -1;
    relators.push_back(Word({{o, static_cast<std::int8_t>(s)},
                             {u, 1},
                             {o, static_cast<std::int8_t>(-s)},
                             {w, -1}}));
  }
  return Presentation::with_numbered_generators(d.arc_count, std::move(relators));
}

}  // namespace twistspin
