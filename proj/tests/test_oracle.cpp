#include <catch2/catch_amalgamated.hpp>

#include "antimagic/oracle.hpp"
#include "support/brute.hpp"

using namespace antimagic;

TEST_CASE("binomial coefficients", "[oracle]") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("exceptional equality at n=5, a=b=2", "[oracle]") {
  CHECK(exact_p({5, 2, 2, 1, 0}) == Rational(1, 5));
  // shifting every label by a constant leaves equal-block differences alone
  CHECK(exact_p({5, 2, 2, 3, 0}) == Rational(1, 5));
  CHECK(exact_p({5, 2, 2, 7, 0}) == Rational(1, 5));
}

TEST_CASE("hand-checked zero-target values", "[oracle]") {
  // two distinct labels can never be equal
  CHECK(exact_p({3, 1, 1, 1, 0}) == 0);
  // 12 of the 120 ordered triples from {1..6} satisfy x + y = z
  CHECK(exact_p({6, 2, 1, 1, 0}) == Rational(1, 10));
  CHECK(exact_p({6, 2, 1, 1, 0}) < Rational(1, 6));
  // 4 of the 60 ordered triples from {2..6} satisfy x + y = z
  CHECK(exact_p({5, 2, 1, 2, 0}) == Rational(1, 15));
  CHECK(exact_p({5, 2, 1, 2, 0}) < Rational(1, 5));
}

TEST_CASE("degree gap two obeys the halved residue bound", "[oracle]") {
  const Rational p = exact_p({7, 3, 2, 1, 0});
  CHECK(p == Rational(3, 70));
  CHECK(p <= Rational(1, 12));  // 1/(2(n-1)) at n=7
}

TEST_CASE("targets outside the support have probability zero", "[oracle]") {
  const DistributionTable table = exact_distribution(6, 2, 2, 1);
  CHECK(table.p(table.t_max + 1) == 0);
  CHECK(table.p(table.t_min - 1) == 0);
  CHECK(exact_p({6, 2, 2, 1, 1'000'000}) == 0);
}

TEST_CASE("swap normalization accepts raw degrees", "[oracle]") {
  // b > a goes through p_{n;a,b}(t) = p_{n;b,a}(-t)
  const DistributionTable direct = exact_distribution(8, 2, 3, 1);
  for (const auto& [t, prob] : direct.probabilities)
    CHECK(exact_p({8, 2, 3, 1, t}) == prob);
}

TEST_CASE("residues are exactly uniform when blocks differ by one", "[oracle]") {
  for (int r = 0; r < 5; ++r)
    CHECK(exact_p_mod(5, 2, 1, 1, r, 5) == Rational(1, 5));
  for (int r = 0; r < 9; ++r)
    CHECK(exact_p_mod(9, 3, 2, 2, r, 9) == Rational(1, 9));
}

TEST_CASE("residue bound when blocks differ by two", "[oracle]") {
  for (int r = 0; r < 6; ++r)
    CHECK(exact_p_mod(6, 3, 1, 1, r, 6) <= Rational(1, 5));
}

TEST_CASE("residue classes partition the distribution", "[oracle]") {
  const DistributionTable table = exact_distribution(7, 2, 2, 1);
  for (std::int64_t mod : {2, 3, 7, 11}) {
    Rational total = 0;
    for (std::int64_t r = 0; r < mod; ++r) total += table.p_mod(r, mod);
    CHECK(total == 1);
  }
}

TEST_CASE("distribution tables normalize exactly", "[oracle]") {
  for (int n = 3; n <= 9; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int b = 1; a + b < n; ++b) {
        const DistributionTable table = exact_distribution(n, a, b, 1);
        Rational total = 0;
        for (const auto& [t, prob] : table.probabilities) {
          CHECK(prob > 0);
          total += prob;
        }
        CHECK(total == 1);
        CHECK(table.pair_count == binomial(n, a) * binomial(n - a, b));
      }
    }
  }
}

TEST_CASE("swap symmetry", "[oracle]") {
  for (std::int64_t k : {1, 2, 5}) {
    for (int n = 3; n <= 8; ++n) {
      for (int a = 1; a < n; ++a) {
        for (int b = 1; a + b < n; ++b) {
          const DistributionTable ab = exact_distribution(n, a, b, k);
          const DistributionTable ba = exact_distribution(n, b, a, k);
          for (std::int64_t t = ab.t_min; t <= ab.t_max; ++t)
            CHECK(ab.p(t) == ba.p(-t));
        }
      }
    }
  }
}

TEST_CASE("complement symmetry", "[oracle]") {
  // relabelling x -> (n + 2k - 1) - x maps target t to (a-b)(n+2k-1) - t
  for (std::int64_t k : {1, 2, 5}) {
    for (int n = 3; n <= 8; ++n) {
      for (int a = 1; a < n; ++a) {
        for (int b = 1; a + b < n; ++b) {
          const DistributionTable table = exact_distribution(n, a, b, k);
          const std::int64_t mirror = (a - b) * (n + 2 * k - 1);
          for (std::int64_t t = table.t_min; t <= table.t_max; ++t)
            CHECK(table.p(t) == table.p(mirror - t));
        }
      }
    }
  }
}

TEST_CASE("subset-pair enumeration matches full permutation enumeration",
          "[oracle][slow-oracle]") {
  for (std::int64_t k : {1, 2}) {
    for (int n = 3; n <= 6; ++n) {
      for (int a = 1; a < n; ++a) {
        for (int b = 1; a + b < n; ++b) {
          const DistributionTable fast = exact_distribution(n, a, b, k);
          const brute::DiffCounts slow = brute::permutation_difference_counts(n, a, b, k);
          std::map<std::int64_t, Rational> expected;
          for (const auto& [t, count] : slow.counts)
            expected.emplace(t, Rational(BigInt(count), BigInt(slow.total)));
          CHECK(fast.probabilities == expected);
        }
      }
    }
  }
}

TEST_CASE("parity of random subsets", "[oracle]") {
  const ParityResult r42 = parity_probability(4, 2, 1);
  CHECK(r42.p_even == Rational(1, 3));
  CHECK(r42.p_odd == Rational(2, 3));
  CHECK(r42.fixed_point_count == 2);  // {1,2} and {3,4}
  // n even, c even bound (1/2)(1 + 1/(n-1)) attained at c = 2
  CHECK(r42.p_odd == Rational(2, 3));

  const ParityResult r41 = parity_probability(4, 1, 1);
  CHECK(r41.p_even == Rational(1, 2));
  CHECK(r41.p_odd == Rational(1, 2));
  CHECK(r41.fixed_point_count == 0);

  for (int n = 2; n <= 12; ++n)
    for (int c = 1; c < n; ++c) {
      const ParityResult r = parity_probability(n, c, 1);
      CHECK(r.p_even + r.p_odd == 1);
    }
}

TEST_CASE("fixed point counts match the pairing closed forms", "[oracle]") {
  for (int n = 2; n <= 14; ++n) {
    for (int c = 1; c < n; ++c) {
      const ParityResult r = parity_probability(n, c, 1);
      BigInt expected;
      if (n % 2 == 0)
        expected = (c % 2 == 1) ? BigInt(0) : binomial(n / 2, c / 2);
      else if (c % 2 == 1)
        expected = binomial((n - 1) / 2, (c - 1) / 2);
      else
        expected = binomial((n - 1) / 2, c / 2);
      CHECK(BigInt(r.fixed_point_count) == expected);
    }
  }
}

TEST_CASE("parameter validation", "[oracle]") {
  CHECK_THROWS_AS(exact_distribution(5, 0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(exact_distribution(5, 2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(exact_distribution(5, 3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(exact_distribution(5, 2, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(parity_probability(5, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(parity_probability(5, 5, 1), std::invalid_argument);
}

TEST_CASE("enumeration cap", "[oracle]") {
  CHECK_THROWS_AS(exact_distribution(40, 10, 10, 1), EnumerationCapError);
  CHECK_NOTHROW(exact_distribution(12, 5, 5, 1));
  // explicit tiny cap
  CHECK_THROWS_AS(exact_distribution(12, 5, 5, 1, 100), EnumerationCapError);
}

TEST_CASE("rational formatting", "[oracle]") {
  CHECK(rational_str(Rational(1, 5)) == "1/5");
  CHECK(rational_str(Rational(0)) == "0/1");
  CHECK(rational_approx(Rational(1, 4)) == 0.25);
}
