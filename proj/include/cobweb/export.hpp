#ifndef COBWEB_EXPORT_HPP
#define COBWEB_EXPORT_HPP

#include <string>

#include "cobweb/poset.hpp"

namespace cobweb {

/// Graphviz rendering of the Hasse diagram: nodes "v{level}_{index}" grouped
/// into one same-rank block per level, one edge per cover pair pointing from
/// the lower vertex to the upper one.
std::string hasse_dot(const CobwebPoset& poset);

}  // namespace cobweb

#endif  // COBWEB_EXPORT_HPP
