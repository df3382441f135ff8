#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Edge labelling with labels a permutation of {k, ..., m+k-1}, aligned with
// Graph::edges() order.
struct Labelling {
  std::int64_t offset_k = 1;
  std::vector<std::int64_t> labels;
};

struct VertexSums {
  std::vector<std::int64_t> sums;
};

enum class Predicate { local, distance2, global };

struct ConflictReport {
  Predicate predicate;
  std::vector<std::pair<VertexId, VertexId>> conflicts;  // (min, max) pairs
  bool holds = false;                                    // <=> conflicts empty
};

inline const char* predicate_name(Predicate p) {
  switch (p) {
    case Predicate::local: return "local";
    case Predicate::distance2: return "distance2";
    case Predicate::global: return "global";
  }
  return "?";
}

// Sum of all labels counted once per endpoint: m * (2k + m - 1).
inline std::int64_t sum_conservation_total(std::size_t m, std::int64_t k) {
  return static_cast<std::int64_t>(m) * (2 * k + static_cast<std::int64_t>(m) - 1);
}

// Throws unless l.labels is a permutation of {k,...,m+k-1} aligned with g,
// and all sums are guaranteed to fit in int64.
inline void validate_labelling(const Graph& g, const Labelling& l) {
  const std::size_t m = g.edge_count();
  if (l.labels.size() != m)
    throw std::invalid_argument("labelling has " + std::to_string(l.labels.size()) +
                                " labels for " + std::to_string(m) + " edges");
  if (l.offset_k < 1) throw std::invalid_argument("offset k must be positive");
  const __int128 total =
      static_cast<__int128>(m) * (2 * static_cast<__int128>(l.offset_k) + m - 1);
  if (total > static_cast<__int128>(INT64_MAX) / 2)
    throw std::invalid_argument("labels too large: vertex sums would overflow");
  std::vector<std::int64_t> sorted(l.labels);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < m; ++i)
    if (sorted[i] != l.offset_k + static_cast<std::int64_t>(i))
      throw std::invalid_argument("labels are not a permutation of {k,...,m+k-1}");
}

inline VertexSums vertex_sums(const Graph& g, const Labelling& l) {
  if (l.labels.size() != g.edge_count())
    throw std::invalid_argument("labelling length does not match edge count");
  VertexSums s;
  s.sums.assign(g.vertex_count(), 0);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    s.sums[e.u] += l.labels[i];
    s.sums[e.v] += l.labels[i];
  }
  return s;
}

inline ConflictReport check_local_antimagic(const Graph& g, const VertexSums& s) {
  ConflictReport report{Predicate::local, {}, false};
  for (const Edge& e : g.edges())
    if (s.sums[e.u] == s.sums[e.v])
      report.conflicts.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(report.conflicts.begin(), report.conflicts.end());
  report.holds = report.conflicts.empty();
  return report;
}

namespace detail {

// Vertices grouped by equal sum; only these can conflict under any predicate.
inline std::vector<std::vector<VertexId>> equal_sum_groups(const VertexSums& s) {
  std::map<std::int64_t, std::vector<VertexId>> by_sum;
  for (VertexId v = 0; v < s.sums.size(); ++v) by_sum[s.sums[v]].push_back(v);
  std::vector<std::vector<VertexId>> groups;
  for (auto& [sum, vs] : by_sum)
    if (vs.size() > 1) groups.push_back(std::move(vs));
  return groups;
}

inline bool sorted_lists_intersect(const std::vector<VertexId>& a,
                                   const std::vector<VertexId>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return false;
}

}  // namespace detail

// Conflicts among vertex pairs at graph distance 1 or 2. Each unordered pair
// is reported once, even if reachable both directly and through a middle
// vertex.
inline ConflictReport check_distance2(const Graph& g, const VertexSums& s) {
  ConflictReport report{Predicate::distance2, {}, false};
  const auto adj = adjacency(g);
  for (const auto& group : detail::equal_sum_groups(s)) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        const VertexId v = group[i], w = group[j];
        const bool adjacent = std::binary_search(adj[v].begin(), adj[v].end(), w);
        if (adjacent || detail::sorted_lists_intersect(adj[v], adj[w]))
          report.conflicts.emplace_back(v, w);
      }
    }
  }
  std::sort(report.conflicts.begin(), report.conflicts.end());
  report.holds = report.conflicts.empty();
  return report;
}

inline ConflictReport check_global_antimagic(const Graph& g, const VertexSums& s) {
  (void)g;
  ConflictReport report{Predicate::global, {}, false};
  for (const auto& group : detail::equal_sum_groups(s))
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j)
        report.conflicts.emplace_back(group[i], group[j]);
  std::sort(report.conflicts.begin(), report.conflicts.end());
  report.holds = report.conflicts.empty();
  return report;
}

// Labelling file format: one `u v label` line per edge, any order. Vertex
// ids are in the same id space as the graph file (vertex_ids from parsing);
// k is inferred as the minimum label.
inline void write_labelling(std::ostream& out, const Graph& g, const Labelling& l,
                            const std::vector<std::uint64_t>& vertex_ids = {}) {
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (vertex_ids.empty())
      out << e.u << ' ' << e.v << ' ' << l.labels[i] << '\n';
    else
      out << vertex_ids[e.u] << ' ' << vertex_ids[e.v] << ' ' << l.labels[i] << '\n';
  }
}

inline Labelling read_labelling(std::istream& in, const Graph& g,
                                const std::vector<std::uint64_t>& vertex_ids = {}) {
  std::unordered_map<std::uint64_t, VertexId> to_dense;
  for (std::size_t i = 0; i < vertex_ids.size(); ++i)
    to_dense[vertex_ids[i]] = static_cast<VertexId>(i);

  std::unordered_map<std::uint64_t, std::size_t> edge_index;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    const std::uint64_t lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
    edge_index[lo * (g.vertex_count() + 1) + hi] = i;
  }

  Labelling l;
  l.labels.assign(g.edge_count(), 0);
  std::vector<bool> assigned(g.edge_count(), false);
  std::string line;
  std::size_t line_no = 0, count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#')
      continue;
    std::istringstream fields(line);
    std::uint64_t u, v;
    std::int64_t label;
    if (!(fields >> u >> v >> label))
      throw ParseError("expected `u v label`", line_no);
    if (!vertex_ids.empty()) {
      auto iu = to_dense.find(u), iv = to_dense.find(v);
      if (iu == to_dense.end() || iv == to_dense.end())
        throw ParseError("unknown vertex id", line_no);
      u = iu->second;
      v = iv->second;
    }
    if (u >= g.vertex_count() || v >= g.vertex_count())
      throw ParseError("vertex id out of range", line_no);
    const std::uint64_t lo = std::min(u, v), hi = std::max(u, v);
    auto it = edge_index.find(lo * (g.vertex_count() + 1) + hi);
    if (it == edge_index.end())
      throw ParseError("edge not present in graph", line_no);
    if (assigned[it->second])
      throw ParseError("edge labelled twice", line_no);
    assigned[it->second] = true;
    l.labels[it->second] = label;
    ++count;
  }
  if (count != g.edge_count())
    throw std::invalid_argument("labelling covers " + std::to_string(count) +
                                " of " + std::to_string(g.edge_count()) + " edges");
  l.offset_k = *std::min_element(l.labels.begin(), l.labels.end());
  validate_labelling(g, l);
  return l;
}

}  // namespace antimagic
