#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace antimagic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class EnumerationCapError : public std::runtime_error {
 public:
  explicit EnumerationCapError(const std::string& msg) : std::runtime_error(msg) {}
};

inline BigInt binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (unsigned i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

// Parameters of the signed block-sum statistic over a random permutation of
// the n labels {k,...,n+k-1}: the sum of the first a values minus the sum of
// the next b values, compared against target t.
struct DifferenceSpec {
  int n = 0;
  int a = 0;
  int b = 0;
  std::int64_t k = 1;
  std::int64_t t = 0;
};

inline void validate_spec(int n, int a, int b, std::int64_t k) {
  if (a < 1 || b < 1) throw std::invalid_argument("need a >= 1 and b >= 1");
  if (a + b >= n) throw std::invalid_argument("need a + b < n");
  if (k < 1) throw std::invalid_argument("need offset k >= 1");
  if (n > 64) throw std::invalid_argument("n too large for exact enumeration");
}

inline constexpr std::uint64_t kDefaultPairCap = 100'000'000;

// Exact distribution as reduced rationals. Support bounds cover every
// achievable target; probabilities holds only targets with nonzero mass.
struct DistributionTable {
  int n = 0, a = 0, b = 0;
  std::int64_t k = 1;
  std::int64_t t_min = 0, t_max = 0;
  std::map<std::int64_t, Rational> probabilities;
  BigInt pair_count;  // C(n,a) * C(n-a,b)

  Rational p(std::int64_t t) const {
    auto it = probabilities.find(t);
    return it == probabilities.end() ? Rational(0) : it->second;
  }

  // Probability that the difference is congruent to `residue` mod `modulus`.
  Rational p_mod(std::int64_t residue, std::int64_t modulus) const {
    if (modulus < 2) throw std::invalid_argument("need modulus >= 2");
    const std::int64_t r = ((residue % modulus) + modulus) % modulus;
    Rational total = 0;
    for (const auto& [t, prob] : probabilities)
      if (((t % modulus) + modulus) % modulus == r) total += prob;
    return total;
  }
};

namespace detail {

// Advance an ascending index combination over {0,...,n-1}; false at the end.
inline bool next_combination(std::vector<int>& idx, int n) {
  const int r = static_cast<int>(idx.size());
  int i = r - 1;
  while (i >= 0 && idx[i] == n - r + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace detail

// Exact distribution of the signed block sum, by enumerating ordered pairs
// of disjoint value sets (A of size a, B of size b). Under a uniform
// permutation every such pair is equally likely, and the difference depends
// only on the value sets, so C(n,a)*C(n-a,b) pairs replace n! permutations.
inline DistributionTable exact_distribution(int n, int a, int b, std::int64_t k = 1,
                                            std::uint64_t pair_cap = kDefaultPairCap) {
  validate_spec(n, a, b, k);
  const BigInt pairs = binomial(n, a) * binomial(n - a, b);
  if (pairs > pair_cap)
    throw EnumerationCapError("C(n,a)*C(n-a,b) = " + pairs.str() +
                              " exceeds pair cap " + std::to_string(pair_cap));

  std::vector<std::int64_t> values(n);
  std::iota(values.begin(), values.end(), k);

  // min difference: a smallest values minus b largest; max symmetric.
  auto block_sum = [&](int from, int count) {
    std::int64_t s = 0;
    for (int i = 0; i < count; ++i) s += values[from + i];
    return s;
  };
  const std::int64_t lo = block_sum(0, a) - (block_sum(n - b, b));
  const std::int64_t hi = block_sum(n - a, a) - block_sum(0, b);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(hi - lo + 1), 0);

  std::vector<int> a_idx(a);
  std::iota(a_idx.begin(), a_idx.end(), 0);
  std::vector<int> in_a(n, 0);
  std::vector<std::int64_t> rest;
  rest.reserve(n - a);
  std::vector<int> b_idx(b);
  do {
    std::int64_t sum_a = 0;
    std::fill(in_a.begin(), in_a.end(), 0);
    for (int i : a_idx) {
      sum_a += values[i];
      in_a[i] = 1;
    }
    rest.clear();
    for (int i = 0; i < n; ++i)
      if (!in_a[i]) rest.push_back(values[i]);

    std::iota(b_idx.begin(), b_idx.end(), 0);
    do {
      std::int64_t sum_b = 0;
      for (int i : b_idx) sum_b += rest[i];
      ++counts[static_cast<std::size_t>(sum_a - sum_b - lo)];
    } while (detail::next_combination(b_idx, n - a));
  } while (detail::next_combination(a_idx, n));

  DistributionTable table;
  table.n = n;
  table.a = a;
  table.b = b;
  table.k = k;
  table.pair_count = pairs;
  bool first = true;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    const std::int64_t t = lo + static_cast<std::int64_t>(i);
    table.probabilities.emplace(t, Rational(BigInt(counts[i]), pairs));
    if (first) {
      table.t_min = t;
      first = false;
    }
    table.t_max = t;
  }
  Rational total = 0;
  for (const auto& [t, prob] : table.probabilities) total += prob;
  if (total != 1) throw std::logic_error("distribution does not sum to 1");
  return table;
}

// Single-target probability. Inputs with b > a are normalized through the
// swap symmetry p_{n;a,b}(t) = p_{n;b,a}(-t), so callers can pass raw degrees.
inline Rational exact_p(const DifferenceSpec& spec,
                        std::uint64_t pair_cap = kDefaultPairCap) {
  int a = spec.a, b = spec.b;
  std::int64_t t = spec.t;
  if (b > a) {
    std::swap(a, b);
    t = -t;
  }
  return exact_distribution(spec.n, a, b, spec.k, pair_cap).p(t);
}

inline Rational exact_p_mod(int n, int a, int b, std::int64_t k,
                            std::int64_t residue, std::int64_t modulus,
                            std::uint64_t pair_cap = kDefaultPairCap) {
  return exact_distribution(n, a, b, k, pair_cap).p_mod(residue, modulus);
}

// Parity of the sum of a uniform random c-subset of {k,...,n+k-1}.
// fixed_point_count counts the subsets fixed by the involution that toggles
// the first consecutive-label pair meeting the subset in exactly one
// element; consecutive labels differ in parity, so non-fixed subsets pair up
// with opposite parities for any offset k.
struct ParityResult {
  int n = 0, c = 0;
  std::int64_t k = 1;
  Rational p_even, p_odd;
  std::int64_t fixed_point_count = 0;
};

inline ParityResult parity_probability(int n, int c, std::int64_t k = 1) {
  if (c <= 0 || c >= n) throw std::invalid_argument("need 0 < c < n");
  if (k < 1) throw std::invalid_argument("need offset k >= 1");
  if (n > 64 || binomial(n, c) > kDefaultPairCap)
    throw EnumerationCapError("C(n,c) exceeds enumeration cap");

  std::vector<int> idx(c);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> member(n, 0);
  std::int64_t even = 0, odd = 0, fixed = 0;
  do {
    std::int64_t sum = 0;
    std::fill(member.begin(), member.end(), 0);
    for (int i : idx) {
      sum += k + i;
      member[i] = 1;
    }
    (sum % 2 == 0 ? even : odd) += 1;
    bool is_fixed = true;
    for (int p = 0; p + 1 < n; p += 2) {
      if (member[p] + member[p + 1] == 1) {
        is_fixed = false;
        break;
      }
    }
    if (is_fixed) ++fixed;
  } while (detail::next_combination(idx, n));

  const BigInt total = binomial(n, c);
  ParityResult result;
  result.n = n;
  result.c = c;
  result.k = k;
  result.p_even = Rational(BigInt(even), total);
  result.p_odd = Rational(BigInt(odd), total);
  result.fixed_point_count = fixed;
  if (result.p_even + result.p_odd != 1)
    throw std::logic_error("parity probabilities do not sum to 1");
  return result;
}

inline std::string rational_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double rational_approx(const Rational& r) {
  return r.convert_to<double>();
}

}  // namespace antimagic
