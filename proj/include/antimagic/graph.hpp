#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "antimagic/rng.hpp"

namespace antimagic {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Hard edge cap so every vertex sum stays well inside int64 range.
inline constexpr std::size_t kMaxEdges = 1'000'000;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NotLabellableError : public std::runtime_error {
 public:
  explicit NotLabellableError(const std::string& msg) : std::runtime_error(msg) {}
};

// Undirected simple graph. Immutable after construction; the constructor
// rejects self-loops, multi-edges, out-of-range ids and graphs over the
// edge cap.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (edges_.size() > kMaxEdges)
      throw std::invalid_argument("edge count exceeds cap of " +
                                  std::to_string(kMaxEdges));
    std::vector<std::uint64_t> keys;
    keys.reserve(edges_.size());
    for (const Edge& e : edges_) {
      if (e.u == e.v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (e.u >= vertex_count_ || e.v >= vertex_count_)
        throw std::invalid_argument("edge endpoint out of range");
      const std::uint64_t lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
      keys.push_back(lo * (vertex_count_ + 1) + hi);
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
      throw std::invalid_argument("duplicate edge");
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

inline std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

inline std::vector<std::vector<VertexId>> adjacency(const Graph& g) {
  std::vector<std::vector<VertexId>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

// Edge indices incident to each vertex, aligned with g.edges() order.
inline std::vector<std::vector<std::size_t>> incident_edges(const Graph& g) {
  std::vector<std::vector<std::size_t>> inc(g.vertex_count());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    inc[g.edges()[i].u].push_back(i);
    inc[g.edges()[i].v].push_back(i);
  }
  return inc;
}

struct ValidationReport {
  std::vector<Edge> isolated_edges;      // both endpoints have degree 1
  std::vector<VertexId> isolated_vertices;
  std::vector<std::size_t> degrees;
  bool is_labellable = false;            // no isolated edges and m >= 1
};

inline ValidationReport validate(const Graph& g) {
  ValidationReport report;
  report.degrees = degrees(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (report.degrees[v] == 0) report.isolated_vertices.push_back(v);
  for (const Edge& e : g.edges())
    if (report.degrees[e.u] == 1 && report.degrees[e.v] == 1)
      report.isolated_edges.push_back(e);
  report.is_labellable =
      report.isolated_edges.empty() && g.edge_count() >= 1;
  return report;
}

// Result of parsing an edge-list file. vertex_ids maps the dense internal
// id back to the id that appeared in the file; it is the identity whenever
// the file's ids were already contiguous from 0.
struct ParseResult {
  Graph graph;
  std::vector<std::uint64_t> vertex_ids;
};

// Edge-list text format: lines are `# comment`, blank, or `u v`. An optional
// first data line `p <vertex_count> <edge_count>` fixes the vertex count, in
// which case ids must be smaller than it. Without a header, sparse ids are
// remapped to a dense 0-based range (numeric order preserved).
inline ParseResult parse_edge_list(std::istream& in) {
  struct RawEdge {
    std::uint64_t u, v;
    std::size_t line;
  };
  std::vector<RawEdge> raw;
  bool has_header = false;
  std::uint64_t header_vertices = 0, header_edges = 0;
  bool seen_data = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv(line);
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
      sv.remove_suffix(1);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t'))
      sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;

    std::istringstream fields{std::string(sv)};
    if (!seen_data && sv.front() == 'p') {
      char p;
      fields >> p >> header_vertices >> header_edges;
      if (fields.fail() || !(fields >> std::ws).eof())
        throw ParseError("malformed header", line_no);
      has_header = true;
      seen_data = true;
      continue;
    }
    seen_data = true;
    std::int64_t u, v;
    fields >> u >> v;
    if (fields.fail() || !(fields >> std::ws).eof())
      throw ParseError("expected `u v`", line_no);
    if (u < 0 || v < 0) throw ParseError("negative vertex id", line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    raw.push_back({static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v), line_no});
    if (raw.size() > kMaxEdges)
      throw ParseError("edge count exceeds cap of " + std::to_string(kMaxEdges), line_no);
  }
  if (has_header && raw.size() != header_edges)
    throw ParseError("header declares " + std::to_string(header_edges) +
                         " edges, file has " + std::to_string(raw.size()),
                     line_no);

  std::vector<std::uint64_t> ids;
  std::unordered_map<std::uint64_t, VertexId> dense;
  std::size_t vertex_count;
  if (has_header) {
    vertex_count = header_vertices;
    for (const RawEdge& e : raw) {
      if (e.u >= header_vertices || e.v >= header_vertices)
        throw ParseError("vertex id exceeds header count", e.line);
    }
    ids.resize(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) ids[i] = i;
  } else {
    for (const RawEdge& e : raw) {
      ids.push_back(e.u);
      ids.push_back(e.v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    vertex_count = ids.size();
    dense.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
      dense[ids[i]] = static_cast<VertexId>(i);
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::unordered_map<std::uint64_t, std::size_t> seen;
  for (const RawEdge& e : raw) {
    const VertexId du = has_header ? static_cast<VertexId>(e.u) : dense[e.u];
    const VertexId dv = has_header ? static_cast<VertexId>(e.v) : dense[e.v];
    const std::uint64_t lo = std::min(du, dv), hi = std::max(du, dv);
    const std::uint64_t key = lo * (vertex_count + 1) + hi;
    auto [it, inserted] = seen.emplace(key, e.line);
    if (!inserted)
      throw ParseError("duplicate edge (first seen at line " +
                           std::to_string(it->second) + ")",
                       e.line);
    edges.push_back({du, dv});
  }
  return ParseResult{Graph(vertex_count, std::move(edges)), std::move(ids)};
}

inline ParseResult parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g,
                            const std::vector<std::uint64_t>& vertex_ids = {}) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    if (vertex_ids.empty())
      out << e.u << ' ' << e.v << '\n';
    else
      out << vertex_ids[e.u] << ' ' << vertex_ids[e.v] << '\n';
  }
}

enum class Family {
  path,
  cycle,
  star,
  complete,
  complete_bipartite,
  random_gnp,
  random_tree,
};

struct GeneratorSpec {
  Family family;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  double p = 0.0;
  std::string text;  // original `family:args` string, kept for reports
};

// Accepts `path:N`, `cycle:N`, `star:N`, `complete:N`,
// `complete_bipartite:A,B`, `random_gnp:N,P`, `random_tree:N`.
inline GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  spec.text = std::string(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("generator spec must look like family:args");
  const std::string_view name = text.substr(0, colon);
  const std::string args(text.substr(colon + 1));
  std::istringstream in(args);
  char comma = 0;

  auto need = [&](bool ok) {
    if (!ok) throw std::invalid_argument("bad arguments in generator spec `" + spec.text + "`");
  };

  if (name == "path" || name == "cycle" || name == "star" || name == "complete" ||
      name == "random_tree") {
    need(static_cast<bool>(in >> spec.n1) && (in >> std::ws).eof());
    spec.family = name == "path"     ? Family::path
                  : name == "cycle"  ? Family::cycle
                  : name == "star"   ? Family::star
                  : name == "complete" ? Family::complete
                                       : Family::random_tree;
  } else if (name == "complete_bipartite") {
    need(static_cast<bool>(in >> spec.n1 >> comma >> spec.n2) && comma == ',' &&
         (in >> std::ws).eof());
    spec.family = Family::complete_bipartite;
  } else if (name == "random_gnp") {
    need(static_cast<bool>(in >> spec.n1 >> comma >> spec.p) && comma == ',' &&
         (in >> std::ws).eof());
    spec.family = Family::random_gnp;
  } else {
    throw std::invalid_argument("unknown graph family `" + std::string(name) + "`");
  }
  return spec;
}

namespace detail {

inline Graph generate_once(const GeneratorSpec& spec, std::uint64_t seed,
                           std::uint64_t salt) {
  std::vector<Edge> edges;
  auto vid = [](std::int64_t x) { return static_cast<VertexId>(x); };
  switch (spec.family) {
    case Family::path: {
      if (spec.n1 < 2) throw std::invalid_argument("path needs >= 2 vertices");
      for (std::int64_t i = 0; i + 1 < spec.n1; ++i) edges.push_back({vid(i), vid(i + 1)});
      return Graph(spec.n1, std::move(edges));
    }
    case Family::cycle: {
      if (spec.n1 < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
      for (std::int64_t i = 0; i < spec.n1; ++i)
        edges.push_back({vid(i), vid((i + 1) % spec.n1)});
      return Graph(spec.n1, std::move(edges));
    }
    case Family::star: {
      if (spec.n1 < 1) throw std::invalid_argument("star needs >= 1 leaf");
      for (std::int64_t i = 1; i <= spec.n1; ++i) edges.push_back({vid(0), vid(i)});
      return Graph(spec.n1 + 1, std::move(edges));
    }
    case Family::complete: {
      if (spec.n1 < 2) throw std::invalid_argument("complete needs >= 2 vertices");
      for (std::int64_t i = 0; i < spec.n1; ++i)
        for (std::int64_t j = i + 1; j < spec.n1; ++j) edges.push_back({vid(i), vid(j)});
      return Graph(spec.n1, std::move(edges));
    }
    case Family::complete_bipartite: {
      if (spec.n1 < 1 || spec.n2 < 1)
        throw std::invalid_argument("complete_bipartite needs both parts nonempty");
      for (std::int64_t i = 0; i < spec.n1; ++i)
        for (std::int64_t j = 0; j < spec.n2; ++j)
          edges.push_back({vid(i), vid(spec.n1 + j)});
      return Graph(spec.n1 + spec.n2, std::move(edges));
    }
    case Family::random_gnp: {
      if (spec.n1 < 2 || spec.p < 0.0 || spec.p > 1.0)
        throw std::invalid_argument("random_gnp needs n >= 2 and p in [0,1]");
      RngStream rng(seed, salt);
      for (std::int64_t i = 0; i < spec.n1; ++i)
        for (std::int64_t j = i + 1; j < spec.n1; ++j)
          if (rng.uniform01() < spec.p) edges.push_back({vid(i), vid(j)});
      return Graph(spec.n1, std::move(edges));
    }
    case Family::random_tree: {
      if (spec.n1 < 2) throw std::invalid_argument("random_tree needs >= 2 vertices");
      RngStream rng(seed, salt);
      for (std::int64_t i = 1; i < spec.n1; ++i)
        edges.push_back({vid(rng.uniform_below(i)), vid(i)});
      return Graph(spec.n1, std::move(edges));
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace detail

// Deterministic in (spec, seed). random_gnp retries with an incremented
// stream salt when it draws a graph with an isolated edge (or no edges at
// all), so the harness always sees labellable random graphs.
inline Graph generate(const GeneratorSpec& spec, std::uint64_t seed) {
  if (spec.family != Family::random_gnp) return detail::generate_once(spec, seed, 0);
  for (std::uint64_t salt = 0; salt < 100; ++salt) {
    Graph g = detail::generate_once(spec, seed, salt);
    if (validate(g).is_labellable) return g;
  }
  throw std::runtime_error("random_gnp produced no labellable graph in 100 attempts");
}

inline Graph generate(std::string_view spec_text, std::uint64_t seed) {
  return generate(parse_generator_spec(spec_text), seed);
}

}  // namespace antimagic
