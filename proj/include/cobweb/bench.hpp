#ifndef COBWEB_BENCH_HPP
#define COBWEB_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cobweb/chains.hpp"

namespace cobweb {

/// Root-chain count to level n, closed form against enumeration.
struct BenchRow {
  std::uint32_t n = 1;
  BigCount formula;
  std::optional<BigCount> enumerated;  ///< empty when the guard refused
  double formula_seconds = 0.0;        ///< mean per evaluation
  double enumerate_seconds = 0.0;
  bool counts_equal() const { return !enumerated || *enumerated == formula; }
  double speedup() const;
};

/// Times n = 1..max_n. The formula is evaluated repeatedly until at least a
/// few milliseconds have elapsed and its mean is reported; enumeration runs
/// once. Timings are wall clock and vary between runs.
std::vector<BenchRow> run_bench(std::uint32_t max_n,
                                const EnumerationOptions& options = {});

std::string format_bench(const std::vector<BenchRow>& rows);

}  // namespace cobweb

#endif  // COBWEB_BENCH_HPP
