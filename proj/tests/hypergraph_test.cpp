#include "hyperlag/hypergraph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cstdint>

#include "test_support.hpp"

using namespace hyperlag;
using hyperlag::testing::brute_force_left_compressed;
using hyperlag::testing::random_hypergraph;

namespace {

Hypergraph mixed_example() {
  // {1,2,3,4,5} + {12,13} + {123,356}
  return Hypergraph(6, {{1}, {2}, {3}, {4}, {5}, {1, 2}, {1, 3}, {1, 2, 3}, {3, 5, 6}});
}

// Independent colex oracle: every subset of [limit] with size in T, sorted
// with pairwise colex_less comparisons.
std::vector<Edge> colex_prefix_by_comparison(const EdgeTypeSet& t, int limit, std::size_t m) {
  std::vector<Edge> all;
  for (std::uint32_t mask = 1; mask < (1U << limit); ++mask) {
    if (!t.contains(std::popcount(mask))) continue;
    Edge e;
    for (int b = 0; b < limit; ++b) {
      if (mask >> b & 1U) e.push_back(b + 1);
    }
    all.push_back(e);
  }
  std::sort(all.begin(), all.end(), [](const Edge& a, const Edge& b) {
    return a != b && colex_less(a, b);
  });
  all.resize(m);
  return all;
}

}  // namespace

TEST(ColexLess, PaperExamples) {
  EXPECT_TRUE(colex_less({2, 4, 6}, {1, 5, 6}));
  EXPECT_FALSE(colex_less({1, 5, 6}, {2, 4, 6}));
  EXPECT_TRUE(colex_less({1, 2, 3}, {1, 2, 4}));
  EXPECT_TRUE(colex_less({1, 2, 4}, {1, 3, 4}));
  EXPECT_TRUE(colex_less({1, 3, 4}, {2, 3, 4}));
  EXPECT_TRUE(colex_less({2, 3, 4}, {1, 2, 5}));
}

TEST(ColexLess, EqualSetsAreAnError) {
  EXPECT_THROW(colex_less({1, 5}, {1, 5}), HypergraphError);
}

TEST(ColexLess, MixedCardinalities) {
  EXPECT_TRUE(colex_less({3}, {1, 2, 3}));
  EXPECT_TRUE(colex_less({1, 2, 3}, {4}));
  EXPECT_TRUE(colex_less({2}, {1, 2}));
}

TEST(ColexFirstM, UniformPrefix) {
  const Hypergraph c = colex_first_m({3}, 4);
  EXPECT_EQ(c.n(), 4);
  EXPECT_EQ(c.level(3), (std::vector<Edge>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
}

TEST(ColexFirstM, BinomialPrefixIsComplete) {
  EXPECT_EQ(colex_first_m({3}, 10), complete({3}, 5));
  for (int r : {2, 3, 4}) {
    for (int t = std::max(3, r); t <= 8; ++t) {
      std::int64_t binom = 1;
      for (int k = 0; k < r; ++k) binom = binom * (t - k) / (k + 1);
      EXPECT_EQ(colex_first_m({r}, binom), complete({r}, t)) << "r=" << r << " t=" << t;
    }
  }
}

TEST(ColexFirstM, MixedTypes) {
  const Hypergraph c = colex_first_m({1, 3}, 4);
  EXPECT_EQ(c.n(), 3);
  EXPECT_EQ(c.edges(), (std::vector<Edge>{{1}, {2}, {3}, {1, 2, 3}}));
}

TEST(ColexFirstM, AgreesWithPairwiseComparisonOracle) {
  for (const EdgeTypeSet& t : {EdgeTypeSet{2}, EdgeTypeSet{3}, EdgeTypeSet{1, 3},
                               EdgeTypeSet{1, 2, 3}, EdgeTypeSet{2, 4}}) {
    for (std::size_t m = 1; m <= 30; ++m) {
      const auto expected = colex_prefix_by_comparison(t, 9, m);
      const Hypergraph c = colex_first_m(t, static_cast<std::int64_t>(m));
      auto got = c.edges();
      std::sort(got.begin(), got.end(), ColexOrder{});
      EXPECT_EQ(got, expected) << "T=" << t.to_string() << " m=" << m;
      EXPECT_EQ(c.edge_count(), m);
      int max_vertex = 0;
      for (const auto& e : expected) max_vertex = std::max(max_vertex, e.back());
      EXPECT_EQ(c.n(), max_vertex);
    }
  }
}

TEST(ColexFirstM, RejectsNonPositiveM) {
  EXPECT_THROW(colex_first_m({3}, 0), HypergraphError);
}

TEST(Complete, Examples) {
  EXPECT_EQ(complete({1, 2}, 3).edges(),
            (std::vector<Edge>{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(complete({3}, 4), colex_first_m({3}, 4));
  EXPECT_EQ(complete({2}, 2).edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_THROW(complete({3}, 2), HypergraphError);
}

TEST(Hypergraph, RejectsMalformedEdges) {
  EXPECT_THROW(Hypergraph(3, {{1, 4}}), HypergraphError);
  EXPECT_THROW(Hypergraph(3, {{1, 1}}), HypergraphError);
  EXPECT_THROW(Hypergraph(3, {{1, 2}, {2, 1}}), HypergraphError);
  EXPECT_THROW(Hypergraph(3, {{}}), HypergraphError);
}

TEST(Hypergraph, EdgeTypesAreNonemptyLevels) {
  const Hypergraph h = mixed_example();
  EXPECT_EQ(h.edge_types(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(Hypergraph(4, {}).edge_types(), std::vector<int>{});
}

TEST(Induced, Examples) {
  const auto k2 = induced(complete({1, 2}, 3), {1, 2});
  EXPECT_EQ(k2.graph, complete({1, 2}, 2));
  EXPECT_EQ(k2.relabel, (VertexSet{1, 2}));

  const auto sub = induced(mixed_example(), {1, 2, 3});
  EXPECT_EQ(sub.graph.edges(),
            (std::vector<Edge>{{1}, {2}, {3}, {1, 2}, {1, 3}, {1, 2, 3}}));

  const auto none = induced(mixed_example(), {});
  EXPECT_EQ(none.graph.n(), 0);
  EXPECT_TRUE(none.graph.empty());
}

TEST(Induced, RelabelsPreservingOrder) {
  const Hypergraph h(6, {{2, 5}, {5, 6}, {2, 4}, {4}});
  const auto sub = induced(h, {2, 4, 5});
  EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{2}, {1, 2}, {1, 3}}));
  EXPECT_THROW(induced(h, {0, 2}), HypergraphError);
  EXPECT_THROW(induced(h, {3, 2}), HypergraphError);
}

TEST(Induced, FullVertexSetIsIdentity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 7, {1, 2, 3});
    VertexSet all;
    for (int v = 1; v <= h.n(); ++v) all.push_back(v);
    EXPECT_EQ(induced(h, all).graph, h);
  }
}

TEST(IsolatedVertices, Examples) {
  const Hypergraph h = mixed_example();
  EXPECT_EQ(isolated_vertices(h), (VertexSet{4}));
  EXPECT_EQ(isolated_vertices(induced(h, {1, 2, 3, 4, 5}).graph), (VertexSet{4, 5}));
  EXPECT_TRUE(isolated_vertices(complete({1, 2}, 3)).empty());
  EXPECT_TRUE(isolated_vertices(complete({2}, 3)).empty());
}

TEST(CompressEdge, Rules) {
  EXPECT_EQ(compress_edge({2, 3}, 1, 3), (Edge{1, 2}));
  EXPECT_EQ(compress_edge({1, 3}, 1, 3), (Edge{1, 3}));
  EXPECT_EQ(compress_edge({2, 4}, 1, 3), (Edge{2, 4}));
  EXPECT_THROW(compress_edge({2, 4}, 3, 3), HypergraphError);
  EXPECT_THROW(compress_edge({2, 4}, 4, 3), HypergraphError);
}

TEST(CompressSet, Examples) {
  EXPECT_EQ(compress_set(Hypergraph(3, {{2, 3}}), 1, 3), Hypergraph(3, {{1, 2}}));
  EXPECT_EQ(compress_set(Hypergraph(3, {{1, 3}, {2, 3}}), 1, 2), Hypergraph(3, {{1, 3}, {2, 3}}));
  EXPECT_EQ(compress_set(Hypergraph(2, {{1, 2}}), 1, 2), Hypergraph(2, {{1, 2}}));
  EXPECT_THROW(compress_set(Hypergraph(3, {{1, 2}}), 2, 1), HypergraphError);
}

TEST(LeftCompressed, Examples) {
  for (std::int64_t m = 1; m <= 35; ++m) EXPECT_TRUE(is_left_compressed(colex_first_m({3}, m)));
  EXPECT_FALSE(is_left_compressed(Hypergraph(3, {{1, 3}})));
  EXPECT_TRUE(is_left_compressed(complete({1, 2, 3}, 5)));
  EXPECT_FALSE(is_left_compressed(Hypergraph(3, {{2}})));
}

TEST(LeftCompressed, DominanceAgreesWithCompressionDefinition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 6, {1, 2, 3});
    bool fixed = true;
    for (Vertex i = 1; i <= h.n(); ++i) {
      for (Vertex j = i + 1; j <= h.n(); ++j) fixed = fixed && compress_set(h, i, j) == h;
    }
    EXPECT_EQ(is_left_compressed(h), fixed);
  }
}

TEST(LeftCompressFixpoint, Examples) {
  EXPECT_EQ(left_compress_fixpoint(Hypergraph(3, {{2, 3}})), Hypergraph(3, {{1, 2}}));
  EXPECT_EQ(left_compress_fixpoint(Hypergraph(3, {{1, 3}, {2, 3}})),
            Hypergraph(3, {{1, 2}, {1, 3}}));
  const Hypergraph c = colex_first_m({1, 3}, 9).with_vertex_count(6);
  EXPECT_EQ(left_compress_fixpoint(c), c);
}

TEST(LeftCompressFixpoint, PreservesLevelCountsAndReachesCompressedGraph) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 7, {1, 2, 3, 4});
    const Hypergraph c = left_compress_fixpoint(h);
    EXPECT_TRUE(is_left_compressed(c));
    for (const auto& [r, list] : h.levels()) EXPECT_EQ(c.edge_count(r), list.size());
    EXPECT_EQ(c.edge_types(), h.edge_types());
  }
}

TEST(CompressSet, PreservesLevelCounts) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 7, {1, 2, 3});
    std::uniform_int_distribution<int> pick(1, h.n());
    int i = pick(rng);
    int j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    const Hypergraph c = compress_set(h, i, j);
    for (const auto& [r, list] : h.levels()) EXPECT_EQ(c.edge_count(r), list.size());
  }
}

TEST(MaxCliqueOrder, Examples) {
  EXPECT_EQ(max_clique_order(complete({1, 2}, 5), {1, 2}), 5);
  Hypergraph k4 = complete({2}, 4);
  auto edges = k4.edges();
  edges.push_back({1});
  edges.push_back({2});
  edges.push_back({3});
  EXPECT_EQ(max_clique_order(Hypergraph(4, edges), {1}), 3);
  EXPECT_EQ(max_clique_order(colex_first_m({3}, 10), {3}), 5);
}

TEST(MaxCliqueOrder, CompleteGraphs) {
  for (const EdgeTypeSet& t : {EdgeTypeSet{2}, EdgeTypeSet{1, 3}, EdgeTypeSet{1, 2, 3}}) {
    for (int n = t.max(); n <= 8; ++n) EXPECT_EQ(max_clique_order(complete(t, n), t), n);
  }
}

TEST(MaxCliqueOrder, NoCliqueGivesZero) {
  EXPECT_EQ(max_clique_order(Hypergraph(4, {{1, 2}}), {3}), 0);
  EXPECT_EQ(max_clique_order(Hypergraph(4, {{1, 2}}), {1, 2}), 0);
  EXPECT_EQ(max_clique_order(Hypergraph(4, {{1, 2}, {3}}), {1, 2}), 1);
}

TEST(MaxCliqueOrder, FiveCycle) {
  const Hypergraph c5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  EXPECT_EQ(max_clique_order(c5, {2}), 2);
}

TEST(MaxCliqueOrder, MatchesSubsetBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 7, {1, 2, 3}, 0.7);
    for (const EdgeTypeSet& q : {EdgeTypeSet{2}, EdgeTypeSet{1, 2}, EdgeTypeSet{2, 3}}) {
      int best = 0;
      for (std::uint32_t mask = 1; mask < (1U << h.n()); ++mask) {
        const int size = std::popcount(mask);
        if (size < q.min() || size <= best) continue;
        bool ok = true;
        for (std::uint32_t sub = mask; sub && ok; sub = (sub - 1) & mask) {
          if (!q.contains(std::popcount(sub))) continue;
          Edge e;
          for (int b = 0; b < h.n(); ++b) {
            if (sub >> b & 1U) e.push_back(b + 1);
          }
          ok = h.contains(e);
        }
        if (ok) best = size;
      }
      EXPECT_EQ(max_clique_order(h, q), best) << "trial " << trial << " Q=" << q.to_string();
    }
  }
}

TEST(LinkSets, Examples) {
  const LinkSets k3 = link_sets(complete({2}, 3), 1);
  EXPECT_EQ(k3.link_i.at(2), (std::vector<VertexSet>{{2}, {3}}));

  const LinkSets triple = link_sets(complete({3}, 3), 1, 2);
  EXPECT_EQ(triple.pair.at(3), (std::vector<VertexSet>{{3}}));

  const LinkSets two = link_sets(Hypergraph(4, {{1, 2, 3}, {1, 2, 4}}), 3, 4);
  EXPECT_EQ(two.link_i.at(3), (std::vector<VertexSet>{{1, 2}}));
  EXPECT_EQ(two.link_j.at(3), (std::vector<VertexSet>{{1, 2}}));
  EXPECT_TRUE(two.i_minus_j.at(3).empty());

  EXPECT_THROW(link_sets(complete({2}, 3), 2, 2), HypergraphError);
}

TEST(LinkSets, MembersCompleteToEdgesAndAvoidPartnerLink) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 6, {1, 2, 3});
    std::uniform_int_distribution<int> pick(1, h.n());
    const int i = pick(rng);
    const int j = pick(rng);
    if (i == j) continue;
    const LinkSets links = link_sets(h, i, j);
    for (const auto& [r, family] : links.i_minus_j) {
      const auto& link_j = links.link_j.at(r);
      for (const auto& a : family) {
        Edge e = a;
        e.insert(std::upper_bound(e.begin(), e.end(), i), i);
        EXPECT_TRUE(h.contains(e));
        EXPECT_EQ(std::find(link_j.begin(), link_j.end(), a), link_j.end());
      }
    }
    for (const auto& [r, family] : links.pair) {
      for (const auto& b : family) {
        Edge e = b;
        e.push_back(i);
        e.push_back(j);
        std::sort(e.begin(), e.end());
        EXPECT_TRUE(h.contains(e));
      }
    }
  }
}

TEST(LinkSets, LeftCompressedHasEmptyReverseDifference) {
  for (const auto& h : brute_force_left_compressed({3}, 5, 6)) {
    for (Vertex i = 1; i <= h.n(); ++i) {
      for (Vertex j = i + 1; j <= h.n(); ++j) {
        const LinkSets links = link_sets(h, i, j);
        for (const auto& [r, family] : links.j_minus_i) EXPECT_TRUE(family.empty());
      }
    }
  }
}

TEST(EdgeTypeSet, ParseAndValidate) {
  EXPECT_EQ(EdgeTypeSet::parse("1,3"), (EdgeTypeSet{1, 3}));
  EXPECT_EQ(EdgeTypeSet::parse("3,1"), (EdgeTypeSet{1, 3}));
  EXPECT_THROW(EdgeTypeSet::parse("1,,3"), HypergraphError);
  EXPECT_THROW(EdgeTypeSet::parse("0"), HypergraphError);
  EXPECT_THROW(EdgeTypeSet::parse("2,2"), HypergraphError);
  EXPECT_THROW(EdgeTypeSet::parse("a"), HypergraphError);
}
