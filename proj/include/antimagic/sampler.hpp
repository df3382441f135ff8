#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labelling.hpp"
#include "antimagic/rng.hpp"

namespace antimagic {

class BudgetExhaustedError : public std::runtime_error {
 public:
  BudgetExhaustedError(std::uint64_t rounds)
      : std::runtime_error("no local antimagic labelling found in " +
                           std::to_string(rounds) + " rounds"),
        rounds_(rounds) {}
  std::uint64_t rounds() const { return rounds_; }

 private:
  std::uint64_t rounds_;
};

struct RunStats {
  std::uint64_t rounds = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::vector<std::uint64_t> per_edge_collisions;
  double wall_time = 0.0;  // seconds
};

struct Estimate {
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t trials = 0;
};

// Two-sided 99% normal quantile used for every confidence interval.
inline constexpr double kZ99 = 2.5758293035489004;

// Wilson score interval; well-behaved when p_hat is at or near 0.
inline Estimate wilson_estimate(std::uint64_t successes, std::uint64_t trials,
                                double z = kZ99) {
  if (trials == 0) throw std::invalid_argument("wilson_estimate needs trials >= 1");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  Estimate e;
  e.p_hat = p;
  e.ci_low = std::max(0.0, centre - half);
  e.ci_high = std::min(1.0, centre + half);
  e.trials = trials;
  return e;
}

// Fisher-Yates shuffle with unbiased index draws: uniform over all
// permutations of the current contents.
inline void shuffle_labels(std::vector<std::int64_t>& labels, RngStream& rng) {
  for (std::size_t i = labels.size(); i > 1; --i) {
    const std::size_t j = rng.uniform_below(i);
    std::swap(labels[i - 1], labels[j]);
  }
}

// Uniform random permutation of {k,...,m+k-1}, linear time.
inline Labelling random_permutation(std::size_t m, std::int64_t k, RngStream& rng) {
  if (m < 1) throw std::invalid_argument("need m >= 1");
  Labelling l;
  l.offset_k = k;
  l.labels.resize(m);
  std::iota(l.labels.begin(), l.labels.end(), k);
  shuffle_labels(l.labels, rng);
  return l;
}

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// One shuffled trial into preallocated buffers; returns true when the
// labelling is local antimagic. No allocation on this path.
inline bool labelled_trial(const Graph& g, std::vector<std::int64_t>& labels,
                           std::vector<std::int64_t>& sums, RngStream& rng) {
  shuffle_labels(labels, rng);
  std::fill(sums.begin(), sums.end(), 0);
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    sums[edges[i].u] += labels[i];
    sums[edges[i].v] += labels[i];
  }
  for (const Edge& e : edges)
    if (sums[e.u] == sums[e.v]) return false;
  return true;
}

}  // namespace detail

struct LasVegasResult {
  Labelling labelling;
  RunStats stats;
};

// Repeated uniform permutation labelling until local antimagic. The round
// budget defaults to 1000*m; running out signals a bug (success probability
// per round is bounded below), so it surfaces as an error rather than a
// silent retry. The returned labelling is re-verified through the public
// check before returning.
inline LasVegasResult las_vegas_label(
    const Graph& g, std::int64_t k, RngStream& rng,
    std::optional<std::uint64_t> max_rounds = std::nullopt) {
  const auto report = validate(g);
  if (!report.is_labellable) {
    std::string msg = "graph is not labellable: ";
    msg += g.edge_count() == 0 ? "no edges" : "isolated edge (";
    if (!report.isolated_edges.empty())
      msg += std::to_string(report.isolated_edges[0].u) + "," +
             std::to_string(report.isolated_edges[0].v) + ")";
    throw NotLabellableError(msg);
  }
  const std::size_t m = g.edge_count();
  const std::uint64_t budget = max_rounds.value_or(1000 * static_cast<std::uint64_t>(m));

  Labelling l;
  l.offset_k = k;
  l.labels.resize(m);
  std::iota(l.labels.begin(), l.labels.end(), k);
  validate_labelling(g, l);  // rejects overflowing k up front
  std::vector<std::int64_t> sums(g.vertex_count());

  detail::Stopwatch watch;
  for (std::uint64_t round = 1; round <= budget; ++round) {
    if (detail::labelled_trial(g, l.labels, sums, rng)) {
      if (!check_local_antimagic(g, vertex_sums(g, l)).holds)
        throw std::logic_error("internal error: labelling failed re-verification");
      RunStats stats;
      stats.rounds = round;
      stats.trials = round;
      stats.successes = 1;
      stats.wall_time = watch.seconds();
      return LasVegasResult{std::move(l), std::move(stats)};
    }
  }
  throw BudgetExhaustedError(budget);
}

// Fixed number of shuffled trials; counts whole-graph successes and
// per-edge sum collisions in one pass.
inline RunStats collision_trials(const Graph& g, std::int64_t k,
                                 std::uint64_t trials, RngStream& rng) {
  if (trials < 1) throw std::invalid_argument("need trials >= 1");
  const std::size_t m = g.edge_count();
  if (m < 1) throw NotLabellableError("graph has no edges");
  Labelling l;
  l.offset_k = k;
  l.labels.resize(m);
  std::iota(l.labels.begin(), l.labels.end(), k);
  validate_labelling(g, l);
  std::vector<std::int64_t> sums(g.vertex_count());

  RunStats stats;
  stats.trials = trials;
  stats.per_edge_collisions.assign(m, 0);
  detail::Stopwatch watch;
  const auto& edges = g.edges();
  for (std::uint64_t t = 0; t < trials; ++t) {
    shuffle_labels(l.labels, rng);
    std::fill(sums.begin(), sums.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      sums[edges[i].u] += l.labels[i];
      sums[edges[i].v] += l.labels[i];
    }
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (sums[edges[i].u] == sums[edges[i].v]) {
        ++stats.per_edge_collisions[i];
        ok = false;
      }
    }
    stats.successes += ok ? 1 : 0;
  }
  stats.rounds = 1;
  stats.wall_time = watch.seconds();
  return stats;
}

// Same trial counts fanned out over worker threads. Worker w owns stream
// (base_seed, w) and private buffers; counts merge by addition, so the
// result is deterministic given (base_seed, workers).
inline RunStats collision_trials_parallel(const Graph& g, std::int64_t k,
                                          std::uint64_t trials,
                                          std::uint64_t base_seed,
                                          unsigned workers) {
  if (workers <= 1) {
    RngStream rng(base_seed, 0);
    return collision_trials(g, k, trials, rng);
  }
  detail::Stopwatch watch;
  std::vector<RunStats> parts(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t share = trials / workers + (w < trials % workers ? 1 : 0);
    pool.emplace_back([&, w, share] {
      if (share == 0) return;
      RngStream rng(base_seed, w);
      parts[w] = collision_trials(g, k, share, rng);
    });
  }
  for (auto& t : pool) t.join();
  RunStats stats;
  stats.rounds = 1;
  stats.per_edge_collisions.assign(g.edge_count(), 0);
  for (const RunStats& p : parts) {
    stats.trials += p.trials;
    stats.successes += p.successes;
    for (std::size_t i = 0; i < p.per_edge_collisions.size(); ++i)
      stats.per_edge_collisions[i] += p.per_edge_collisions[i];
  }
  stats.wall_time = watch.seconds();
  return stats;
}

// Fraction of trials in which the two endpoints of one edge get equal sums.
inline Estimate estimate_edge_collision(const Graph& g, std::size_t edge_index,
                                        std::int64_t k, std::uint64_t trials,
                                        RngStream& rng) {
  if (edge_index >= g.edge_count())
    throw std::invalid_argument("edge index out of range");
  if (!validate(g).is_labellable)
    throw NotLabellableError("graph is not labellable");
  const RunStats stats = collision_trials(g, k, trials, rng);
  return wilson_estimate(stats.per_edge_collisions[edge_index], stats.trials);
}

// Trials in which two chosen vertices (adjacent or not) get equal sums;
// used for distance-2 collision experiments.
inline std::uint64_t pair_collision_hits(const Graph& g, VertexId v, VertexId w,
                                         std::int64_t k, std::uint64_t trials,
                                         RngStream& rng) {
  if (v >= g.vertex_count() || w >= g.vertex_count() || v == w)
    throw std::invalid_argument("need two distinct vertices");
  if (trials < 1) throw std::invalid_argument("need trials >= 1");
  const std::size_t m = g.edge_count();
  std::vector<std::size_t> at_v, at_w;
  for (std::size_t i = 0; i < m; ++i) {
    if (g.edges()[i].u == v || g.edges()[i].v == v) at_v.push_back(i);
    if (g.edges()[i].u == w || g.edges()[i].v == w) at_w.push_back(i);
  }
  Labelling l;
  l.offset_k = k;
  l.labels.resize(m);
  std::iota(l.labels.begin(), l.labels.end(), k);
  validate_labelling(g, l);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    shuffle_labels(l.labels, rng);
    std::int64_t sum_v = 0, sum_w = 0;
    for (std::size_t i : at_v) sum_v += l.labels[i];
    for (std::size_t i : at_w) sum_w += l.labels[i];
    if (sum_v == sum_w) ++hits;
  }
  return hits;
}

inline Estimate estimate_pair_collision(const Graph& g, VertexId v, VertexId w,
                                        std::int64_t k, std::uint64_t trials,
                                        RngStream& rng) {
  return wilson_estimate(pair_collision_hits(g, v, w, k, trials, rng), trials);
}

// Fraction of trials whose labelling is local antimagic.
inline Estimate estimate_success(const Graph& g, std::int64_t k,
                                 std::uint64_t trials, RngStream& rng) {
  if (!validate(g).is_labellable)
    throw NotLabellableError("graph is not labellable");
  const RunStats stats = collision_trials(g, k, trials, rng);
  return wilson_estimate(stats.successes, stats.trials);
}

struct BenchEntry {
  std::string spec;
  std::size_t m = 0;
  std::uint64_t repeats = 0;
  double mean_rounds = 0.0;
  std::uint64_t max_rounds = 0;
  std::uint64_t total_rounds = 0;
  double wall_time = 0.0;
};

// Repeated Las Vegas runs per graph; run r of graph i uses stream
// (base_seed, i * repeats + r).
inline std::vector<BenchEntry> bench_rounds(
    const std::vector<std::pair<std::string, Graph>>& graphs, std::uint64_t repeats,
    std::uint64_t base_seed, std::int64_t k = 1) {
  std::vector<BenchEntry> results;
  results.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i].second;
    BenchEntry entry;
    entry.spec = graphs[i].first;
    entry.m = g.edge_count();
    entry.repeats = repeats;
    detail::Stopwatch watch;
    for (std::uint64_t r = 0; r < repeats; ++r) {
      RngStream rng(base_seed, i * repeats + r);
      const auto result = las_vegas_label(g, k, rng);
      entry.total_rounds += result.stats.rounds;
      entry.max_rounds = std::max(entry.max_rounds, result.stats.rounds);
    }
    entry.wall_time = watch.seconds();
    entry.mean_rounds = static_cast<double>(entry.total_rounds) /
                        static_cast<double>(repeats);
    results.push_back(std::move(entry));
  }
  return results;
}

}  // namespace antimagic
