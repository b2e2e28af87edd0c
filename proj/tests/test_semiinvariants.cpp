#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <epchar/numbers.hpp>
#include <epchar/semiinvariants.hpp>

using namespace epchar;

namespace {

const truncated_series one_plus_x(std::size_t cutoff) { return truncated_series(cutoff, {1, 1}); }

// Orbit count of r-tuples over q symbols (necklaces), with orbit size
// divisible by need: sum over divisors s of r with need | s of
// (1/s) * #{tuples of exact period s}.
std::uint64_t necklaces(std::int64_t q, std::int64_t r, std::int64_t need) {
  std::vector<std::int64_t> exact(static_cast<std::size_t>(r) + 1);
  for (std::int64_t s = 1; s <= r; ++s) {
    if (r % s != 0) continue;
    std::int64_t total = 1;
    for (std::int64_t i = 0; i < s; ++i) total *= q;
    for (std::int64_t t = 1; t < s; ++t)
      if (s % t == 0) total -= exact[static_cast<std::size_t>(t)];
    exact[static_cast<std::size_t>(s)] = total;
  }
  std::uint64_t count = 0;
  for (std::int64_t s = 1; s <= r; ++s)
    if (r % s == 0 && s % need == 0) count += static_cast<std::uint64_t>(exact[static_cast<std::size_t>(s)] / s);
  return count;
}

truncated_series random_graded(std::mt19937& g, std::size_t cutoff) {
  std::uniform_int_distribution<int> dim(0, 2);
  truncated_series s(cutoff);
  for (std::size_t k = 0; k <= cutoff; ++k) s[k] = dim(g);
  s[0] = 1;
  return s;
}

}  // namespace

TEST(TensorComponent, Examples) {
  EXPECT_EQ(tensor_component_series(one_plus_x(4), 2, 0), truncated_series(4, {1, 1, 1}));
  EXPECT_EQ(tensor_component_series(one_plus_x(4), 2, 1), truncated_series(4, {0, 1}));
  const truncated_series p(5, {2, 0, 1, 3});
  for (std::int64_t n = -3; n <= 3; ++n) EXPECT_EQ(tensor_component_series(p, 1, n), p);
  EXPECT_THROW(tensor_component_series(truncated_series(3, {1, -1}), 2, 0), error);
}

TEST(OrderGen, Examples) {
  EXPECT_EQ(order_gen_primitive(one_plus_x(4), 1), one_plus_x(4));
  EXPECT_EQ(order_gen_primitive(one_plus_x(4), 2), truncated_series(4, {0, 2}));
  EXPECT_EQ(order_gen_primitive(one_plus_x(4), 3), truncated_series(4, {0, 3, 3}));
  EXPECT_EQ(order_gen(one_plus_x(4), 2, 1), truncated_series(4, {1, 0, 1}));
  EXPECT_EQ(order_gen(one_plus_x(4), 4, 2), truncated_series(4, {0, 0, 2}));
  const truncated_series p(6, {1, 2, 1});
  EXPECT_EQ(order_gen(p, 3, 3), order_gen_primitive(p, 3));
  try {
    order_gen(p, 6, 4);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_a_divisor);
  }
}

TEST(BruteForce, Component) {
  const graded_dims v{{1, 1}};
  EXPECT_EQ(brute_force_component(v, 2, 0, 2), truncated_series(2, {1, 1, 1}));
  EXPECT_EQ(brute_force_component(v, 2, 1, 2), truncated_series(2, {0, 1}));
}

TEST(BruteForce, DegreeZeroIsNecklaceCount) {
  for (std::uint64_t q = 1; q <= 3; ++q) {
    for (std::int64_t r = 1; r <= 6; ++r) {
      for (std::int64_t n = 0; n < r; ++n) {
        const std::int64_t need = r / (n == 0 ? r : std::gcd(r, n));
        const auto s = brute_force_component(graded_dims{{q}}, r, n, 0);
        EXPECT_EQ(s[0], rational(static_cast<std::int64_t>(necklaces(static_cast<std::int64_t>(q), r, need))))
            << q << " " << r << " " << n;
      }
    }
  }
}

TEST(BruteForce, OrderCounts) {
  const auto two = brute_force_order_counts(graded_dims{{1, 1}}, 2, 2);
  EXPECT_EQ(two.at(1), truncated_series(2, {1, 0, 1}));
  EXPECT_EQ(two.at(2), truncated_series(2, {0, 2}));

  const auto single = brute_force_order_counts(graded_dims{{1}}, 3, 0);
  EXPECT_EQ(single.at(1)[0], 1);
  EXPECT_EQ(single.at(3)[0], 0);

  const auto pair = brute_force_order_counts(graded_dims{{2}}, 2, 0);
  EXPECT_EQ(pair.at(1)[0], 2);
  EXPECT_EQ(pair.at(2)[0], 2);
}

TEST(BruteForce, TooLarge) {
  try {
    brute_force_component(graded_dims{{10, 10, 10}}, 6, 0, 2);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::enumeration_too_large);
  }
}

TEST(OrderGen, SumOverDivisorsIsTensorPower) {
  std::mt19937 g(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_graded(g, 10);
    for (std::int64_t r = 1; r <= 6; ++r) {
      truncated_series by_order(10), by_primitive(10);
      for (auto d : divisors(r)) {
        by_order += order_gen(p, r, d);
        by_primitive += series_substitute_power(order_gen_primitive(p, d), r / d);
      }
      const auto power = series_pow(p, static_cast<std::uint64_t>(r));
      ASSERT_EQ(by_order, power);
      ASSERT_EQ(by_primitive, power);
    }
  }
}

TEST(TensorComponent, ComponentsSumToTensorPowerAndAreIntegral) {
  std::mt19937 g(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_graded(g, 10);
    for (std::int64_t r = 1; r <= 6; ++r) {
      truncated_series total(10);
      for (std::int64_t n = 0; n < r; ++n) {
        const auto c = tensor_component_series(p, r, n);
        ASSERT_TRUE(c.has_nonnegative_integer_coeffs());
        ASSERT_EQ(c, tensor_component_series_by_orders(p, r, n));
        ASSERT_EQ(c, tensor_component_series(p, r, n + r));
        total += c;
      }
      ASSERT_EQ(total, series_pow(p, static_cast<std::uint64_t>(r)));
      for (auto d : divisors(r)) ASSERT_TRUE(order_gen(p, r, d).has_nonnegative_integer_coeffs());
    }
  }
}

TEST(TensorComponent, MatchesOracleOnSmallSpaces) {
  for (const auto& dims : std::vector<std::vector<std::uint64_t>>{{1, 2}, {2, 0, 1}, {1, 1, 1}}) {
    const graded_dims v{dims};
    const auto p = v.poincare_series(6);
    for (std::int64_t r = 1; r <= 4; ++r) {
      for (std::int64_t n = 0; n < r; ++n)
        ASSERT_EQ(tensor_component_series(p, r, n), brute_force_component(v, r, n, 6));
      const auto profile = brute_force_order_counts(v, r, 6);
      for (auto d : divisors(r)) ASSERT_EQ(order_gen(p, r, d), profile.at(d));
    }
  }
}
