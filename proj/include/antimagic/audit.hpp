#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "antimagic/oracle.hpp"

namespace antimagic {

// The case bound on either parity class for the sum of a random c-subset
// of n consecutive labels.
inline Rational subset_parity_bound(int n, int c) {
  if (n % 2 == 0 && c % 2 == 1) return Rational(1, 2);
  if (n % 2 == 0) return Rational(1, 2) * (Rational(1) + Rational(1, n - 1));
  return Rational(1, 2) * (Rational(1) + Rational(1, n));
}

// One audited statement instance: an exact value compared against an exact
// bound (or against an exact required value when `equality` is set).
struct BoundCheck {
  std::string statement;
  int n = 0;
  int a = -1;
  int b = -1;
  int c = -1;          // subset size for parity statements
  std::int64_t k = 1;
  std::int64_t target = 0;  // difference target, residue, or parity class
  bool equality = false;
  Rational bound;
  Rational exact;
  bool holds = false;
  bool strict = false;  // exact strictly below bound
};

struct AuditReport {
  std::vector<BoundCheck> checked;
  std::vector<BoundCheck> failures;
};

namespace detail {

inline void record(AuditReport& report, BoundCheck check) {
  check.strict = !check.equality && check.exact < check.bound;
  check.holds = check.equality ? check.exact == check.bound
                               : check.exact <= check.bound;
  if (!check.holds) report.failures.push_back(check);
  report.checked.push_back(std::move(check));
}

inline BoundCheck make_check(const std::string& statement, int n, int a, int b,
                             std::int64_t k, std::int64_t target,
                             Rational bound, Rational exact) {
  BoundCheck check;
  check.statement = statement;
  check.n = n;
  check.a = a;
  check.b = b;
  check.k = k;
  check.target = target;
  check.bound = std::move(bound);
  check.exact = std::move(exact);
  return check;
}

inline void record_strict(AuditReport& report, BoundCheck check) {
  check.holds = check.exact < check.bound;
  check.strict = check.holds;
  if (!check.holds) report.failures.push_back(check);
  report.checked.push_back(std::move(check));
}

}  // namespace detail

// Audits every bound statement over all parameters (n <= n_max, a, b >= 1
// with a+b < n, offsets from k_set), plus the parity statement for all
// 0 < c < n. Every comparison is exact rational arithmetic.
//
// The sole admissible non-strict zero-target instance is (n,a,b) = (5,2,2),
// where the collision probability equals 1/5 for every offset k (shifting
// all labels by a constant does not change equal-block differences).
inline AuditReport audit_bounds(int n_max,
                                const std::vector<std::int64_t>& k_set = {1},
                                std::uint64_t pair_cap = kDefaultPairCap) {
  using detail::make_check;
  AuditReport report;

  for (const std::int64_t k : k_set) {
    for (int n = 2; n <= n_max; ++n) {
      for (int c = 1; c < n; ++c) {
        const ParityResult parity = parity_probability(n, c, k);
        const Rational bound = subset_parity_bound(n, c);
        for (int cls = 0; cls <= 1; ++cls) {
          BoundCheck check = make_check("subset_parity", n, -1, -1, k, cls, bound,
                                        cls == 0 ? parity.p_even : parity.p_odd);
          check.c = c;
          detail::record(report, std::move(check));
        }
      }
    }

    for (int n = 3; n <= n_max; ++n) {
      for (int a = 1; a < n; ++a) {
        for (int b = 1; a + b < n; ++b) {
          const DistributionTable table = exact_distribution(n, a, b, k, pair_cap);
          const Rational p0 = table.p(0);
          const Rational inv_n(1, n);
          const int top_label_parity = static_cast<int>((n + k - 1) % 2);

          // Per-edge collision bound: p(0) <= 1/n, strict except (5,2,2).
          if (n == 5 && a == 2 && b == 2) {
            BoundCheck check =
                make_check("collision_bound", n, a, b, k, 0, inv_n, p0);
            check.equality = true;
            detail::record(report, std::move(check));
          } else {
            detail::record_strict(
                report, make_check("collision_bound", n, a, b, k, 0, inv_n, p0));
          }

          if (b == a - 1) {
            for (int r = 0; r < n; ++r) {
              BoundCheck check = make_check("residue_uniform_gap1", n, a, b, k, r,
                                            inv_n, table.p_mod(r, n));
              check.equality = true;
              detail::record(report, std::move(check));
            }
            detail::record_strict(
                report, make_check("zero_strict_gap1", n, a, b, k, 0, inv_n, p0));
          }

          if (b == a - 2) {
            for (int r = 0; r < n; ++r)
              detail::record(report,
                             make_check("residue_bound_gap2", n, a, b, k, r,
                                        Rational(1, n - 1), table.p_mod(r, n)));
            detail::record(report, make_check("zero_bound_gap2", n, a, b, k, 0,
                                              Rational(1, 2 * (n - 1)), p0));
          }

          // Offsets beyond 1 keep the strict zero bound for near-equal blocks.
          if (b == a - 1 || b == a - 2)
            detail::record_strict(report, make_check("near_equal_zero_strict", n, a,
                                                     b, k, 0, inv_n, p0));

          if (a == b && n == 2 * a + 1) {
            for (auto it = table.probabilities.begin();
                 it != table.probabilities.end(); ++it)
              detail::record(report,
                             make_check("equal_saturated_bound", n, a, b, k,
                                        it->first, inv_n, it->second));
          }

          if (a == b) {
            detail::record(report,
                           make_check("equal_zero_bound", n, a, b, k, 0, inv_n, p0));
            if (!(n == 5 && a == 2))
              detail::record_strict(
                  report, make_check("equal_zero_strict", n, a, b, k, 0, inv_n, p0));
            if (n > 2 * a + 1) {
              // refined gap: 1/n - p(0) >= 1/(3n(n-1))
              detail::record(report,
                             make_check("equal_zero_gap", n, a, b, k, 0,
                                        inv_n - Rational(1, 3LL * n * (n - 1)), p0));
            }
          }

          if (a > b)
            detail::record(report,
                           make_check("unequal_zero_bound", n, a, b, k, 0,
                                      Rational(1, 2 * (n - a - b + 1)), p0));

          if (b == 1 && a > 1 && a < n - 1)
            detail::record(report,
                           make_check("b_one_zero_bound", n, a, b, k, 0,
                                      Rational(n, 2 * (n - 1) * (a + 1)), p0));

          if (top_label_parity == 1 && a >= b + 2)
            detail::record(report,
                           make_check("large_gap_odd_top", n, a, b, k, 0,
                                      Rational(n + 1, 4 * n * (a + 1)), p0));

          if (top_label_parity == 0 && a >= b + 3 && b > 1)
            detail::record(report,
                           make_check("large_gap_even_top", n, a, b, k, 0,
                                      Rational(n, 4 * (n - 1) * a), p0));

          if (a >= b + 3)
            detail::record(report, make_check("large_gap_zero_bound", n, a, b, k, 0,
                                              Rational(2, 2 * n + 1), p0));
        }
      }
    }
  }
  return report;
}

}  // namespace antimagic
