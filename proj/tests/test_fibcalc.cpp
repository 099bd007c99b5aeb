#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "cobweb/fibcalc.hpp"

namespace cobweb {
namespace {

// Plain recurrence, independent of the fast-doubling path under test.
std::vector<BigCount> fib_table(std::size_t upto) {
  std::vector<BigCount> f{0, 1};
  while (f.size() <= upto) {
    f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  }
  return f;
}

// Fibonomial via the Pascal-type rule
//   C(n,k) = F_{k+1} C(n-1,k) + F_{n-k-1} C(n-1,k-1),
// built as a triangle. Shares no code with the quotient forms.
std::vector<std::vector<BigCount>> fibonomial_triangle(std::size_t rows) {
  const auto f = fib_table(rows + 2);
  std::vector<std::vector<BigCount>> t(rows + 1);
  for (std::size_t n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 0);
    t[n][0] = 1;
    t[n][n] = 1;
    for (std::size_t k = 1; k < n; ++k) {
      t[n][k] = f[k + 1] * t[n - 1][k] + f[n - k - 1] * t[n - 1][k - 1];
    }
  }
  return t;
}

TEST(Fib, Examples) {
  EXPECT_EQ(fib(0), 0);
  EXPECT_EQ(fib(1), 1);
  EXPECT_EQ(fib(2), 1);
  EXPECT_EQ(fib(5), 5);
  EXPECT_EQ(fib(10), 55);
  EXPECT_EQ(to_decimal(fib(100)), "354224848179261915075");
}

TEST(Fib, MatchesRecurrenceToOneThousand) {
  const auto f = fib_table(1000);
  for (FIndex n = 0; n <= 1000; ++n) {
    ASSERT_EQ(fib(n), f[n]) << "n=" << n;
  }
  const std::string f1000 = to_decimal(fib(1000));
  EXPECT_EQ(f1000.size(), 209u);
  EXPECT_EQ(f1000.substr(0, 30), "434665576869374564356885276750");
  EXPECT_EQ(f1000.substr(f1000.size() - 20), "76137795166849228875");
}

TEST(Fib, NonZeroAndStrictlyIncreasing) {
  for (FIndex n = 1; n <= 200; ++n) {
    EXPECT_NE(fib(n), 0);
    if (n >= 3) {
      EXPECT_GT(fib(n), fib(n - 1));
    }
  }
}

TEST(FibFactorial, Examples) {
  EXPECT_EQ(fib_factorial(0), 1);
  EXPECT_EQ(fib_factorial(1), 1);
  EXPECT_EQ(fib_factorial(4), 6);
  EXPECT_EQ(fib_factorial(10), 122522400);
}

TEST(FallingFactorial, Examples) {
  EXPECT_EQ(falling_f_factorial(5, 2), 15);
  EXPECT_EQ(falling_f_factorial(7, 0), 1);
  EXPECT_EQ(falling_f_factorial(3, 4), 0);
  EXPECT_EQ(falling_f_factorial(0, 0), 1);
  EXPECT_EQ(falling_f_factorial(3, 3), 2);
}

TEST(FallingFactorial, FullLengthIsFactorial) {
  for (FIndex n = 0; n <= 60; ++n) {
    EXPECT_EQ(falling_f_factorial(n, n), fib_factorial(n)) << "n=" << n;
  }
}

TEST(Fibonomial, Examples) {
  EXPECT_EQ(fibonomial(5, 2), 15);
  EXPECT_EQ(fibonomial(7, 0), 1);
  EXPECT_EQ(fibonomial(10, 5), 136136);
  EXPECT_EQ(fibonomial(2, 5), 0);
  EXPECT_EQ(fibonomial(0, 0), 1);
}

TEST(Fibonomial, AgreesWithPascalTriangleAndRatioForm) {
  const auto t = fibonomial_triangle(60);
  for (FIndex n = 0; n <= 60; ++n) {
    for (FIndex k = 0; k <= n; ++k) {
      const BigCount q = fibonomial(n, k);
      ASSERT_EQ(q, t[n][k]) << "n=" << n << " k=" << k;
      ASSERT_EQ(q, fibonomial_factorial_ratio(n, k));
      ASSERT_EQ(q, fibonomial(n, n - k));
    }
  }
}

TEST(Fibonomial, RandomLargeArgumentsMatchRatioForm) {
  std::mt19937 rng(20031217);
  std::uniform_int_distribution<FIndex> pick_n(61, 400);
  for (int trial = 0; trial < 40; ++trial) {
    const FIndex n = pick_n(rng);
    const FIndex k = std::uniform_int_distribution<FIndex>(0, n)(rng);
    EXPECT_EQ(fibonomial(n, k), fibonomial_factorial_ratio(n, k))
        << "n=" << n << " k=" << k;
  }
}

TEST(Fibonomial, ThousandChooseFiveHundred) {
  const BigCount q = fibonomial(1000, 500);
  const std::string s = to_decimal(q);
  EXPECT_EQ(s.size(), 52247u);
  EXPECT_EQ(s.substr(0, 30), "662688228853109579224616297802");
  EXPECT_EQ(s.substr(s.size() - 30), "188669395603556594800533716320");
  EXPECT_EQ(q % 1000000007, 428870548);
}

TEST(FibonomialRow, Examples) {
  EXPECT_EQ(fibonomial_row(0), std::vector<BigCount>{1});
  EXPECT_EQ(fibonomial_row(4), (std::vector<BigCount>{1, 3, 6, 3, 1}));
  EXPECT_EQ(fibonomial_row(5), (std::vector<BigCount>{1, 5, 15, 15, 5, 1}));
}

TEST(FibonomialRow, Palindromic) {
  for (FIndex n = 0; n <= 40; ++n) {
    const auto row = fibonomial_row(n);
    ASSERT_EQ(row.size(), n + 1u);
    for (FIndex k = 0; k <= n; ++k) {
      EXPECT_EQ(row[k], row[n - k]);
      EXPECT_EQ(row[k], fibonomial(n, k));
    }
  }
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 2), 3);
  EXPECT_EQ(binomial(10, 5), 252);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(to_decimal(binomial(100, 50)),
            "100891344545564193334812497256");
}

}  // namespace
}  // namespace cobweb
