#include "cobweb/fibcalc.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cobweb {

namespace {

// Fast doubling: returns (F_n, F_{n+1}).
std::pair<BigCount, BigCount> fib_pair(FIndex n) {
  BigCount a = 0;  // F_0
  BigCount b = 1;  // F_1
  for (int bit = 31; bit >= 0; --bit) {
    // F_{2m} = F_m (2 F_{m+1} - F_m), F_{2m+1} = F_m^2 + F_{m+1}^2
    BigCount c = a * (2 * b - a);
    BigCount d = a * a + b * b;
    if ((n >> bit) & 1u) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {std::move(a), std::move(b)};
}

// Product F_first F_{first+1} ... F_last; 1 when the range is empty.
BigCount fib_product(FIndex first, FIndex last) {
  if (first > last) {
    return 1;
  }
  if (first == 0) {
    return 0;
  }
  auto [cur, next] = fib_pair(first);
  BigCount product = 1;
  for (FIndex s = first;; ++s) {
    product *= cur;
    if (s == last) {
      break;
    }
    BigCount following = cur + next;
    cur = std::move(next);
    next = std::move(following);
  }
  return product;
}

BigCount exact_quotient(const BigCount& numerator, const BigCount& denominator,
                        const char* what) {
  BigCount quotient;
  BigCount remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error(std::string(what) + ": division left remainder " +
                           to_decimal(remainder));
  }
  return quotient;
}

}  // namespace

std::string to_decimal(const BigCount& value) { return value.str(); }

BigCount fib(FIndex n) { return fib_pair(n).first; }

BigCount fib_factorial(FIndex n) { return fib_product(1, n); }

BigCount falling_f_factorial(FIndex n, FIndex k) {
  if (k == 0) {
    return 1;
  }
  if (k > n) {
    return 0;
  }
  return fib_product(n - k + 1, n);
}

BigCount fibonomial(FIndex n, FIndex k) {
  if (k > n) {
    return 0;
  }
  const FIndex j = std::min(k, n - k);
  return exact_quotient(falling_f_factorial(n, j), fib_factorial(j),
                        "fibonomial");
}

BigCount fibonomial_factorial_ratio(FIndex n, FIndex k) {
  if (k > n) {
    return 0;
  }
  return exact_quotient(fib_factorial(n),
                        fib_factorial(k) * fib_factorial(n - k),
                        "fibonomial_factorial_ratio");
}

std::vector<BigCount> fibonomial_row(FIndex n) {
  std::vector<BigCount> row;
  row.reserve(static_cast<std::size_t>(n) + 1);
  for (FIndex k = 0; k <= n; ++k) {
    if (k > n - k) {
      row.push_back(row[n - k]);
    } else {
      row.push_back(fibonomial(n, k));
    }
  }
  return row;
}

BigCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigCount result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step.
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace cobweb
