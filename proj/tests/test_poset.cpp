#include <gtest/gtest.h>

#include <deque>
#include <set>

#include "cobweb/fibcalc.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {
namespace {

// Reachability along is_cover only, by breadth-first search.
bool reachable_by_covers(const CobwebPoset& p, const Vertex& from,
                         const Vertex& to) {
  const auto all = p.vertices();
  std::set<Vertex> seen{from};
  std::deque<Vertex> queue{from};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (v == to) {
      return true;
    }
    for (const auto& w : all) {
      if (p.is_cover(v, w) && seen.insert(w).second) {
        queue.push_back(w);
      }
    }
  }
  return false;
}

TEST(BuildCobweb, Examples) {
  const auto p1 = build_cobweb(1);
  EXPECT_EQ(p1.vertex_count(), 1u);
  EXPECT_EQ(p1.cover_count(), 0u);

  const auto p5 = build_cobweb(5);
  EXPECT_EQ(std::vector<std::uint64_t>(p5.level_sizes().begin(),
                                       p5.level_sizes().end()),
            (std::vector<std::uint64_t>{1, 1, 2, 3, 5}));
  EXPECT_EQ(p5.vertex_count(), 12u);

  EXPECT_EQ(build_cobweb(6).vertex_count(), 20u);
}

TEST(BuildCobweb, RejectsBadDepth) {
  EXPECT_THROW(build_cobweb(0), std::invalid_argument);
  EXPECT_THROW(build_cobweb(CobwebPoset::max_depth + 1), std::invalid_argument);
  EXPECT_NO_THROW(build_cobweb(CobwebPoset::max_depth));
}

TEST(BuildCobweb, LevelSizesAndTotals) {
  for (std::uint32_t n = 1; n <= 80; ++n) {
    const auto p = build_cobweb(n);
    for (std::uint32_t s = 1; s <= n; ++s) {
      ASSERT_EQ(BigCount(p.level_size(s)), fib(s));
    }
    EXPECT_EQ(BigCount(p.vertex_count()), fib(n + 2) - 1);
  }
}

TEST(Leq, Examples) {
  const auto p = build_cobweb(5);
  EXPECT_TRUE(p.leq({1, 0}, {1, 0}));
  EXPECT_TRUE(p.leq({2, 0}, {5, 4}));
  EXPECT_FALSE(p.leq({3, 0}, {3, 1}));
  EXPECT_FALSE(p.leq({5, 4}, {2, 0}));
  EXPECT_THROW(p.leq({3, 2}, {4, 0}), std::out_of_range);
  EXPECT_THROW(p.leq({6, 0}, {1, 0}), std::out_of_range);
  EXPECT_THROW(p.leq({0, 0}, {1, 0}), std::out_of_range);
}

TEST(IsCover, Examples) {
  const auto p = build_cobweb(5);
  EXPECT_TRUE(p.is_cover({1, 0}, {2, 0}));
  EXPECT_FALSE(p.is_cover({1, 0}, {3, 1}));
  EXPECT_TRUE(p.is_cover({4, 2}, {5, 0}));
  EXPECT_FALSE(p.is_cover({2, 0}, {2, 0}));
  EXPECT_THROW(p.is_cover({4, 3}, {5, 0}), std::out_of_range);
}

TEST(Vertices, CanonicalOrder) {
  EXPECT_EQ(build_cobweb(1).vertices(), (std::vector<Vertex>{{1, 0}}));
  EXPECT_EQ(build_cobweb(3).vertices(),
            (std::vector<Vertex>{{1, 0}, {2, 0}, {3, 0}, {3, 1}}));
  EXPECT_EQ(build_cobweb(5).vertices().size(), 12u);

  const auto p = build_cobweb(8);
  const auto vs = p.vertices();
  EXPECT_TRUE(std::is_sorted(vs.begin(), vs.end()));
  for (std::uint64_t i = 0; i < vs.size(); ++i) {
    EXPECT_EQ(p.position(vs[i]), i);
    EXPECT_EQ(p.vertex_at(i), vs[i]);
  }
  EXPECT_THROW(p.vertex_at(vs.size()), std::out_of_range);
}

TEST(VertexName, Format) {
  EXPECT_EQ(vertex_name({1, 0}), "v1_0");
  EXPECT_EQ(vertex_name({12, 143}), "v12_143");
}

class PosetAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(PosetAxioms, HoldExhaustively) {
  const auto p = build_cobweb(GetParam());
  const auto vs = p.vertices();
  for (const auto& x : vs) {
    EXPECT_TRUE(p.leq(x, x));
    for (const auto& y : vs) {
      if (p.leq(x, y) && p.leq(y, x)) {
        EXPECT_EQ(x, y);
      }
      if (p.leq(x, y) && x != y) {
        EXPECT_LT(x.level, y.level);
      }
      for (const auto& z : vs) {
        if (p.leq(x, y) && p.leq(y, z)) {
          EXPECT_TRUE(p.leq(x, z));
        }
      }
    }
  }
}

TEST_P(PosetAxioms, OrderIsTransitiveClosureOfCovers) {
  const auto p = build_cobweb(GetParam());
  const auto vs = p.vertices();
  for (const auto& x : vs) {
    for (const auto& y : vs) {
      EXPECT_EQ(p.leq(x, y), reachable_by_covers(p, x, y))
          << vertex_name(x) << " " << vertex_name(y);
    }
  }
}

TEST_P(PosetAxioms, CoversAreExactlyTheGapFreeRelations) {
  const auto p = build_cobweb(GetParam());
  const auto vs = p.vertices();
  for (const auto& x : vs) {
    for (const auto& y : vs) {
      bool between = false;
      for (const auto& z : vs) {
        between = between || (z != x && z != y && p.leq(x, z) && p.leq(z, y));
      }
      const bool cover = x != y && p.leq(x, y) && !between;
      EXPECT_EQ(p.is_cover(x, y), cover);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallDepths, PosetAxioms,
                         ::testing::Values(1u, 2u, 3u, 4u, 5u, 6u));

}  // namespace
}  // namespace cobweb
