#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labelling.hpp"

namespace antimagic {

struct ChiLaResult {
  int chi_la = 0;                           // minimum distinct vertex sums
  Labelling witness;                        // lexicographically smallest optimum
  std::uint64_t total_labellings = 0;       // m!
  std::uint64_t local_antimagic_count = 0;  // labellings passing the local check
};

inline int distinct_sum_count(const Graph& g, const Labelling& l) {
  auto sums = vertex_sums(g, l).sums;
  std::sort(sums.begin(), sums.end());
  return static_cast<int>(std::unique(sums.begin(), sums.end()) - sums.begin());
}

// Scans all m! labellings in lexicographic label order. Among the local
// antimagic ones, minimizes the number of distinct vertex sums; the first
// labelling attaining the final minimum is kept, which makes the witness the
// lexicographically smallest one.
inline ChiLaResult chi_la_exhaustive(const Graph& g, std::int64_t k = 1,
                                     std::size_t m_cap = 9) {
  if (!validate(g).is_labellable)
    throw NotLabellableError("graph is not labellable");
  const std::size_t m = g.edge_count();
  if (m > m_cap)
    throw std::invalid_argument("m = " + std::to_string(m) +
                                " exceeds exhaustive cap " + std::to_string(m_cap));

  Labelling l;
  l.offset_k = k;
  l.labels.resize(m);
  std::iota(l.labels.begin(), l.labels.end(), k);
  validate_labelling(g, l);

  const auto& edges = g.edges();
  std::vector<std::int64_t> sums(g.vertex_count());
  std::vector<std::int64_t> sorted_sums(g.vertex_count());

  ChiLaResult result;
  int best = static_cast<int>(g.vertex_count()) + 1;
  do {
    ++result.total_labellings;
    std::fill(sums.begin(), sums.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      sums[edges[i].u] += l.labels[i];
      sums[edges[i].v] += l.labels[i];
    }
    bool local = true;
    for (const Edge& e : edges) {
      if (sums[e.u] == sums[e.v]) {
        local = false;
        break;
      }
    }
    if (!local) continue;
    ++result.local_antimagic_count;
    sorted_sums = sums;
    std::sort(sorted_sums.begin(), sorted_sums.end());
    const int distinct = static_cast<int>(
        std::unique(sorted_sums.begin(), sorted_sums.end()) - sorted_sums.begin());
    if (distinct < best) {
      best = distinct;
      result.witness = l;
    }
  } while (std::next_permutation(l.labels.begin(), l.labels.end()));

  if (result.local_antimagic_count == 0)
    throw std::logic_error("no local antimagic labelling found by exhaustion");
  result.chi_la = best;
  return result;
}

}  // namespace antimagic
