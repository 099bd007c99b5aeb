#ifndef COBWEB_FIBCALC_HPP
#define COBWEB_FIBCALC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cobweb {

/// Exact non-negative integer used for every count and coefficient.
using BigCount = boost::multiprecision::cpp_int;

/// Index into the Fibonacci sequence. Unsigned, so negative indices cannot
/// be expressed.
using FIndex = std::uint32_t;

std::string to_decimal(const BigCount& value);

/// F_n with F_0 = 0, F_1 = F_2 = 1.
BigCount fib(FIndex n);

/// n_F! = F_1 F_2 ... F_n, and 0_F! = 1.
BigCount fib_factorial(FIndex n);

/// F_n F_{n-1} ... F_{n-k+1}. The empty product (k = 0) is 1; for k > n the
/// product runs through F_0 and is 0.
BigCount falling_f_factorial(FIndex n, FIndex k);

/// Fibonomial coefficient evaluated as falling_f_factorial(n, k) / k_F!,
/// using the smaller of k and n - k. Returns 0 for k > n.
///
/// Throws std::logic_error if the division leaves a remainder; that can only
/// mean an arithmetic bug, never bad input.
BigCount fibonomial(FIndex n, FIndex k);

/// The same coefficient evaluated from three full F-factorials,
/// n_F! / (k_F! (n-k)_F!). Kept as a second route for cross-checks.
BigCount fibonomial_factorial_ratio(FIndex n, FIndex k);

/// [fibonomial(n, 0), ..., fibonomial(n, n)]
std::vector<BigCount> fibonomial_row(FIndex n);

/// Ordinary binomial coefficient C(n, k), 0 for k > n.
BigCount binomial(std::uint64_t n, std::uint64_t k);

}  // namespace cobweb

#endif  // COBWEB_FIBCALC_HPP
