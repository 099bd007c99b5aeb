#ifndef COBWEB_POSET_HPP
#define COBWEB_POSET_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cobweb {

/// A poset element, identified by its level (1-based, the level labeled by
/// F_level) and its 0-based position within that level.
struct Vertex {
  std::uint32_t level = 1;
  std::uint64_t index = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// "v{level}_{index}", the identifier used in exports.
std::string vertex_name(const Vertex& v);

/// Finite truncation P_depth of the cobweb poset.
///
/// Level s holds F_s vertices. Every vertex of level s is covered by every
/// vertex of level s + 1 and the order is the transitive closure of those
/// covers, so x <= y exactly when x == y or x.level < y.level. Only the level
/// sizes are stored; relations are computed on demand.
///
/// Level sizes are kept in 64-bit integers, which bounds depth at
/// max_depth (the total vertex count F_{depth+2} - 1 must fit).
class CobwebPoset {
 public:
  static constexpr std::uint32_t max_depth = 91;

  /// Throws std::invalid_argument for depth 0 or depth > max_depth.
  explicit CobwebPoset(std::uint32_t depth);

  std::uint32_t depth() const noexcept { return depth_; }

  /// Sizes of levels 1..depth, in order (element 0 is level 1).
  std::span<const std::uint64_t> level_sizes() const noexcept {
    return level_sizes_;
  }

  /// Throws std::out_of_range unless 1 <= level <= depth.
  std::uint64_t level_size(std::uint32_t level) const;

  std::uint64_t vertex_count() const noexcept { return offsets_.back(); }

  /// Number of cover pairs, sum of F_s F_{s+1} over consecutive levels.
  std::uint64_t cover_count() const noexcept;

  bool contains(const Vertex& v) const noexcept;

  /// Throws std::out_of_range when v is not a vertex of this poset.
  void require(const Vertex& v) const;

  bool leq(const Vertex& x, const Vertex& y) const;
  bool is_cover(const Vertex& x, const Vertex& y) const;

  /// Position of v in the canonical order (ascending level, then index).
  std::uint64_t position(const Vertex& v) const;
  Vertex vertex_at(std::uint64_t position) const;

  /// Canonical position of the first vertex of `level`.
  std::uint64_t level_offset(std::uint32_t level) const;

  /// All vertices in canonical order. Materializes F_{depth+2} - 1 entries.
  std::vector<Vertex> vertices() const;

  friend bool operator==(const CobwebPoset&, const CobwebPoset&) = default;

 private:
  std::uint32_t depth_;
  std::vector<std::uint64_t> level_sizes_;
  std::vector<std::uint64_t> offsets_;  // offsets_[s-1] = first position of level s
};

CobwebPoset build_cobweb(std::uint32_t depth);

}  // namespace cobweb

#endif  // COBWEB_POSET_HPP
