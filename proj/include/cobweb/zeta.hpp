#ifndef COBWEB_ZETA_HPP
#define COBWEB_ZETA_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cobweb/poset.hpp"

namespace cobweb {

/// Default row cap for dense incidence matrices.
inline constexpr std::size_t kDefaultZetaCap = 10'000;

/// Raised when a dense matrix would exceed the configured row cap.
class DenseCapExceeded : public std::runtime_error {
 public:
  DenseCapExceeded(std::uint64_t requested, std::size_t cap);

  std::uint64_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t requested_;
  std::size_t cap_;
};

/// Dense row-major 0/1 matrix, immutable once built.
class IncidenceMatrix {
 public:
  /// Throws std::invalid_argument if entries.size() != dim * dim or any entry
  /// is not 0 or 1.
  IncidenceMatrix(std::size_t dim, std::vector<std::uint8_t> entries);

  std::size_t dim() const noexcept { return dim_; }
  std::uint8_t at(std::size_t row, std::size_t col) const;
  std::span<const std::uint8_t> row(std::size_t r) const;
  std::span<const std::uint8_t> entries() const noexcept { return entries_; }

  friend bool operator==(const IncidenceMatrix&,
                         const IncidenceMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<std::uint8_t> entries_;
};

/// zeta(x, y) = 1 iff x <= y, indexed by canonical vertex order.
IncidenceMatrix zeta_matrix(const CobwebPoset& poset,
                            std::size_t cap = kDefaultZetaCap);

/// Checks the staircase shape of M against P's levels: unit diagonal, zeros
/// below it, and above it a 1 exactly where the column's level exceeds the
/// row's. The zeros above the diagonal are then precisely the same-level
/// blocks of sizes F_1, ..., F_n.
///
/// Throws std::invalid_argument when M.dim() differs from P's vertex count.
bool staircase_check(const IncidenceMatrix& m, const CobwebPoset& poset);

/// Recovers the cobweb poset that M is the zeta matrix of. Levels are read
/// off as longest-chain ranks; throws std::invalid_argument if M is not the
/// zeta matrix of any cobweb poset.
CobwebPoset poset_from_zeta(const IncidenceMatrix& m);

/// One row per line, "0"/"1" separated by commas, every row newline
/// terminated, no header.
std::string to_csv(const IncidenceMatrix& m);

/// Inverse of to_csv. Throws std::invalid_argument on malformed input.
IncidenceMatrix parse_csv(std::string_view text);

}  // namespace cobweb

#endif  // COBWEB_ZETA_HPP
