#include "cobweb/zeta.hpp"

#include <algorithm>

namespace cobweb {

DenseCapExceeded::DenseCapExceeded(std::uint64_t requested, std::size_t cap)
    : std::runtime_error("dense incidence matrix would need " +
                         std::to_string(requested) +
                         " rows, above the cap of " + std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

IncidenceMatrix::IncidenceMatrix(std::size_t dim,
                                 std::vector<std::uint8_t> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("incidence matrix of dimension " +
                                std::to_string(dim_) + " needs " +
                                std::to_string(dim_ * dim_) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  if (std::any_of(entries_.begin(), entries_.end(),
                  [](std::uint8_t e) { return e > 1; })) {
    throw std::invalid_argument("incidence matrix entries must be 0 or 1");
  }
}

std::uint8_t IncidenceMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= dim_ || c >= dim_) {
    throw std::out_of_range("incidence matrix index out of range");
  }
  return entries_[r * dim_ + c];
}

std::span<const std::uint8_t> IncidenceMatrix::row(std::size_t r) const {
  if (r >= dim_) {
    throw std::out_of_range("incidence matrix row out of range");
  }
  return std::span<const std::uint8_t>(entries_).subspan(r * dim_, dim_);
}

IncidenceMatrix zeta_matrix(const CobwebPoset& poset, std::size_t cap) {
  const std::uint64_t dim = poset.vertex_count();
  if (dim > cap) {
    throw DenseCapExceeded(dim, cap);
  }
  const auto verts = poset.vertices();
  std::vector<std::uint8_t> entries(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      entries[i * dim + j] = poset.leq(verts[i], verts[j]) ? 1 : 0;
    }
  }
  return IncidenceMatrix(dim, std::move(entries));
}

bool staircase_check(const IncidenceMatrix& m, const CobwebPoset& poset) {
  if (m.dim() != poset.vertex_count()) {
    throw std::invalid_argument(
        "matrix dimension " + std::to_string(m.dim()) +
        " does not match poset vertex count " +
        std::to_string(poset.vertex_count()));
  }
  const auto verts = poset.vertices();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const auto r = m.row(i);
    if (r[i] != 1) {
      return false;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (r[j] != 0) {
        return false;
      }
    }
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      const bool higher = verts[j].level > verts[i].level;
      if ((r[j] == 1) != higher) {
        return false;
      }
    }
  }
  return true;
}

CobwebPoset poset_from_zeta(const IncidenceMatrix& m) {
  const std::size_t dim = m.dim();
  if (dim == 0) {
    throw std::invalid_argument("empty matrix is not a cobweb zeta matrix");
  }
  // Rank = length of the longest chain ending at the vertex. Requires every
  // relation to point forward in the given order.
  std::vector<std::uint32_t> rank(dim, 1);
  for (std::size_t j = 0; j < dim; ++j) {
    if (m.at(j, j) != 1) {
      throw std::invalid_argument("zeta matrix must have a unit diagonal");
    }
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == j || m.at(i, j) == 0) {
        continue;
      }
      if (i > j) {
        throw std::invalid_argument(
            "zeta matrix is not upper triangular in the given order");
      }
      rank[j] = std::max(rank[j], rank[i] + 1);
    }
  }
  if (!std::is_sorted(rank.begin(), rank.end())) {
    throw std::invalid_argument("vertex order is not level-major");
  }
  const std::uint32_t depth = rank.back();
  if (depth > CobwebPoset::max_depth) {
    throw std::invalid_argument("recovered depth exceeds supported maximum");
  }
  CobwebPoset poset(depth);
  for (std::uint32_t s = 1; s <= depth; ++s) {
    const auto count = static_cast<std::uint64_t>(
        std::count(rank.begin(), rank.end(), s));
    if (count != poset.level_size(s)) {
      throw std::invalid_argument("level " + std::to_string(s) + " has " +
                                  std::to_string(count) +
                                  " vertices, not a cobweb level size");
    }
  }
  if (poset.vertex_count() != dim || !(zeta_matrix(poset, dim) == m)) {
    throw std::invalid_argument(
        "relation is not the cobweb order on the recovered levels");
  }
  return poset;
}

std::string to_csv(const IncidenceMatrix& m) {
  std::string out;
  out.reserve(m.dim() * m.dim() * 2);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const auto r = m.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j > 0) {
        out.push_back(',');
      }
      out.push_back(r[j] ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

IncidenceMatrix parse_csv(std::string_view text) {
  std::vector<std::uint8_t> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      throw std::invalid_argument("csv row " + std::to_string(rows + 1) +
                                  " is not newline terminated");
    }
    const auto line = text.substr(start, end - start);
    std::size_t fields = 0;
    for (std::size_t p = 0; p < line.size(); ++p) {
      const bool value_slot = (p % 2 == 0);
      const char c = line[p];
      if (value_slot && (c == '0' || c == '1')) {
        entries.push_back(static_cast<std::uint8_t>(c - '0'));
        ++fields;
      } else if (!value_slot && c == ',') {
        continue;
      } else {
        throw std::invalid_argument("unexpected character in csv row " +
                                    std::to_string(rows + 1));
      }
    }
    if (line.empty() || line.size() % 2 == 0) {
      throw std::invalid_argument("malformed csv row " +
                                  std::to_string(rows + 1));
    }
    if (rows == 0) {
      cols = fields;
    } else if (fields != cols) {
      throw std::invalid_argument("csv row " + std::to_string(rows + 1) +
                                  " has a different width");
    }
    ++rows;
    start = end + 1;
  }
  if (rows != cols) {
    throw std::invalid_argument("csv matrix is not square");
  }
  return IncidenceMatrix(rows, std::move(entries));
}

}  // namespace cobweb
