#include "cobweb/bench.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace cobweb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

double BenchRow::speedup() const {
  if (!enumerated || formula_seconds <= 0.0) {
    return 0.0;
  }
  return enumerate_seconds / formula_seconds;
}

std::vector<BenchRow> run_bench(std::uint32_t max_n,
                                const EnumerationOptions& options) {
  if (max_n == 0) {
    throw std::invalid_argument("bench needs max_n >= 1");
  }
  const CobwebPoset poset(max_n);
  std::vector<BenchRow> rows;
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    BenchRow row;
    row.n = n;

    constexpr double kMinFormulaSeconds = 0.005;
    std::uint64_t reps = 0;
    const auto start = Clock::now();
    double elapsed = 0.0;
    do {
      row.formula = count_from_root_formula(n);
      ++reps;
      elapsed = seconds_since(start);
    } while (elapsed < kMinFormulaSeconds);
    row.formula_seconds = elapsed / static_cast<double>(reps);

    try {
      const auto enum_start = Clock::now();
      row.enumerated = enumerate_from_root(poset, n, options);
      row.enumerate_seconds = seconds_since(enum_start);
    } catch (const GuardRefusal&) {
      row.enumerated.reset();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_bench(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "# timings are wall clock and not deterministic\n"
     << "n formula enumerated formula_s enumerate_s speedup status\n";
  char buf[64];
  for (const auto& r : rows) {
    os << r.n << ' ' << to_decimal(r.formula) << ' ';
    std::snprintf(buf, sizeof buf, "%.9f", r.formula_seconds);
    if (r.enumerated) {
      os << to_decimal(*r.enumerated) << ' ' << buf << ' ';
      std::snprintf(buf, sizeof buf, "%.9f", r.enumerate_seconds);
      os << buf << ' ';
      std::snprintf(buf, sizeof buf, "%.1f", r.speedup());
      os << buf << ' ' << (r.counts_equal() ? "equal" : "MISMATCH") << '\n';
    } else {
      os << "- " << buf << " - - skipped(guard)\n";
    }
  }
  return os.str();
}

}  // namespace cobweb
