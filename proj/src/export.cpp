#include "cobweb/export.hpp"

#include <sstream>

namespace cobweb {

std::string hasse_dot(const CobwebPoset& poset) {
  std::ostringstream os;
  os << "digraph cobweb {\n"
     << "  rankdir=BT;\n"
     << "  node [shape=circle];\n";
  for (std::uint32_t s = 1; s <= poset.depth(); ++s) {
    os << "  { rank=same;";
    for (std::uint64_t i = 0; i < poset.level_size(s); ++i) {
      os << ' ' << vertex_name(Vertex{s, i}) << ';';
    }
    os << " }\n";
  }
  for (std::uint32_t s = 1; s < poset.depth(); ++s) {
    for (std::uint64_t i = 0; i < poset.level_size(s); ++i) {
      const Vertex lo{s, i};
      for (std::uint64_t j = 0; j < poset.level_size(s + 1); ++j) {
        const Vertex hi{s + 1, j};
        if (poset.is_cover(lo, hi)) {
          os << "  " << vertex_name(lo) << " -> " << vertex_name(hi) << ";\n";
        }
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cobweb
