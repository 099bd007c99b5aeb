#include "cobweb/poset.hpp"

#include <algorithm>
#include <stdexcept>

#include "cobweb/fibcalc.hpp"

namespace cobweb {

std::string vertex_name(const Vertex& v) {
  return "v" + std::to_string(v.level) + "_" + std::to_string(v.index);
}

CobwebPoset::CobwebPoset(std::uint32_t depth) : depth_(depth) {
  if (depth == 0) {
    throw std::invalid_argument("cobweb poset depth must be at least 1");
  }
  if (depth > max_depth) {
    throw std::invalid_argument("cobweb poset depth " + std::to_string(depth) +
                                " exceeds the supported maximum " +
                                std::to_string(max_depth));
  }
  level_sizes_.reserve(depth);
  offsets_.reserve(static_cast<std::size_t>(depth) + 1);
  offsets_.push_back(0);
  for (std::uint32_t s = 1; s <= depth; ++s) {
    const auto size = fib(s).convert_to<std::uint64_t>();
    level_sizes_.push_back(size);
    offsets_.push_back(offsets_.back() + size);
  }
}

std::uint64_t CobwebPoset::level_size(std::uint32_t level) const {
  if (level == 0 || level > depth_) {
    throw std::out_of_range("level " + std::to_string(level) +
                            " outside 1.." + std::to_string(depth_));
  }
  return level_sizes_[level - 1];
}

std::uint64_t CobwebPoset::cover_count() const noexcept {
  std::uint64_t edges = 0;
  for (std::size_t s = 0; s + 1 < level_sizes_.size(); ++s) {
    edges += level_sizes_[s] * level_sizes_[s + 1];
  }
  return edges;
}

bool CobwebPoset::contains(const Vertex& v) const noexcept {
  return v.level >= 1 && v.level <= depth_ &&
         v.index < level_sizes_[v.level - 1];
}

void CobwebPoset::require(const Vertex& v) const {
  if (!contains(v)) {
    throw std::out_of_range("vertex (" + std::to_string(v.level) + "," +
                            std::to_string(v.index) +
                            ") is not in the cobweb poset of depth " +
                            std::to_string(depth_));
  }
}

bool CobwebPoset::leq(const Vertex& x, const Vertex& y) const {
  require(x);
  require(y);
  return x == y || x.level < y.level;
}

bool CobwebPoset::is_cover(const Vertex& x, const Vertex& y) const {
  require(x);
  require(y);
  return y.level == x.level + 1;
}

std::uint64_t CobwebPoset::position(const Vertex& v) const {
  require(v);
  return offsets_[v.level - 1] + v.index;
}

Vertex CobwebPoset::vertex_at(std::uint64_t position) const {
  if (position >= vertex_count()) {
    throw std::out_of_range("vertex position " + std::to_string(position) +
                            " out of range");
  }
  // offsets_ is strictly increasing; find the last offset <= position.
  const auto it =
      std::upper_bound(offsets_.begin(), offsets_.end(), position) - 1;
  const auto level = static_cast<std::uint32_t>(it - offsets_.begin()) + 1;
  return Vertex{level, position - *it};
}

std::uint64_t CobwebPoset::level_offset(std::uint32_t level) const {
  if (level == 0 || level > depth_) {
    throw std::out_of_range("level " + std::to_string(level) +
                            " outside 1.." + std::to_string(depth_));
  }
  return offsets_[level - 1];
}

std::vector<Vertex> CobwebPoset::vertices() const {
  std::vector<Vertex> out;
  out.reserve(vertex_count());
  for (std::uint32_t s = 1; s <= depth_; ++s) {
    for (std::uint64_t i = 0; i < level_sizes_[s - 1]; ++i) {
      out.push_back(Vertex{s, i});
    }
  }
  return out;
}

CobwebPoset build_cobweb(std::uint32_t depth) { return CobwebPoset(depth); }

}  // namespace cobweb
