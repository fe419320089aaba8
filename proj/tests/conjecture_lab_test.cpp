#include "hyperlag/conjecture_lab.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "test_support.hpp"

namespace hyperlag {
namespace {

using EdgeList = std::vector<Edge>;

std::set<EdgeList> as_edge_sets(const std::vector<Hypergraph>& graphs) {
  std::set<EdgeList> out;
  for (const Hypergraph& h : graphs) out.insert(h.edges());
  return out;
}

// Every graph with edge type exactly T and m edges on [n], filtered by
// is_left_compressed.
std::set<EdgeList> brute_force_family(const EdgeTypeSet& types, int m, int n) {
  std::vector<std::uint32_t> pool;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (types.contains(std::popcount(mask))) pool.push_back(mask);
  }
  std::set<EdgeList> out;
  const int size = static_cast<int>(pool.size());
  if (m > size) return out;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<std::uint32_t> chosen;
    std::set<int> seen_types;
    for (int k : idx) {
      chosen.push_back(pool[k]);
      seen_types.insert(std::popcount(pool[k]));
    }
    if (seen_types.size() == types.size()) {
      const Hypergraph h = testing::from_masks(n, chosen);
      if (is_left_compressed(h)) out.insert(h.edges());
    }
    int p = m - 1;
    while (p >= 0 && idx[p] == size - m + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int s = p + 1; s < m; ++s) idx[s] = idx[s - 1] + 1;
  }
  return out;
}

TEST(Enumerate, Examples) {
  auto family = left_compressed_family({2}, 3, 3);
  ASSERT_EQ(family.size(), 1U);
  EXPECT_EQ(family[0], complete({2}, 3));

  family = left_compressed_family({3}, 1, 3);
  ASSERT_EQ(family.size(), 1U);
  EXPECT_EQ(family[0], Hypergraph(3, {{1, 2, 3}}));

  family = left_compressed_family({2}, 2, 4);
  ASSERT_EQ(family.size(), 1U);
  EXPECT_EQ(family[0], Hypergraph(3, {{1, 2}, {1, 3}}));

  EXPECT_TRUE(left_compressed_family({3}, 5, 3).empty());
  EXPECT_TRUE(left_compressed_family({3}, 1, 2).empty());
}

TEST(Enumerate, MatchesBruteForceUniform) {
  for (int n = 2; n <= 5; ++n) {
    for (int m = 1; m <= 6; ++m) {
      const auto family = left_compressed_family({2}, m, n);
      const auto expected = brute_force_family({2}, m, n);
      EXPECT_EQ(family.size(), expected.size()) << "n=" << n << " m=" << m;
      EXPECT_EQ(as_edge_sets(family), expected) << "n=" << n << " m=" << m;
    }
  }
  for (int m = 1; m <= 8; ++m) {
    EXPECT_EQ(as_edge_sets(left_compressed_family({3}, m, 5)), brute_force_family({3}, m, 5))
        << "m=" << m;
  }
}

TEST(Enumerate, MatchesBruteForceMixed) {
  for (const EdgeTypeSet& ts : {EdgeTypeSet{1, 2}, EdgeTypeSet{1, 3}, EdgeTypeSet{2, 3}}) {
    for (int n = ts.max(); n <= 4; ++n) {
      for (int m = 2; m <= 7; ++m) {
        const auto family = left_compressed_family(ts, m, n);
        EXPECT_EQ(family.size(), as_edge_sets(family).size());
        EXPECT_EQ(as_edge_sets(family), brute_force_family(ts, m, n))
            << ts.to_string() << " n=" << n << " m=" << m;
      }
    }
  }
}

TEST(Enumerate, EveryGraphIsLeftCompressedWithExactTypes) {
  for (const EdgeTypeSet& ts : {EdgeTypeSet{3}, EdgeTypeSet{1, 3}, EdgeTypeSet{2, 4}}) {
    std::set<EdgeList> seen;
    enumerate_left_compressed(ts, 7, 6, [&](const Hypergraph& h) {
      EXPECT_TRUE(is_left_compressed(h));
      EXPECT_EQ(h.edge_types(), ts.values());
      EXPECT_EQ(h.edge_count(), 7U);
      EXPECT_TRUE(seen.insert(h.edges()).second);
      return true;
    });
    EXPECT_FALSE(seen.empty());
  }
}

TEST(Enumerate, VisitorCanStop) {
  int visited = 0;
  const bool finished = enumerate_left_compressed({2}, 4, 6, [&](const Hypergraph&) {
    return ++visited < 2;
  });
  EXPECT_FALSE(finished);
  EXPECT_EQ(visited, 2);
}

TEST(Scan, Examples) {
  ScanReport r = scan({2}, {{2, 1.0}}, 3, 6);
  EXPECT_NEAR(r.extremal_value, 1.0 / 3.0, 1e-9);
  EXPECT_NEAR(r.colex_value, 1.0 / 3.0, 1e-9);
  EXPECT_TRUE(r.conjecture_holds);

  r = scan({3}, {{3, 1.0}}, 4, 6);
  EXPECT_NEAR(r.colex_value, 1.0 / 16.0, 1e-9);
  EXPECT_TRUE(r.conjecture_holds);
  EXPECT_TRUE(r.complete);

  r = scan({3}, {{3, 1.0}}, 2, 5);
  EXPECT_NEAR(r.extremal_value, 1.0 / 27.0, 1e-9);
  EXPECT_EQ(r.oracle_disagreements, 0U);
}

TEST(Scan, ColexGraphIsAmongWitnessCandidates) {
  for (int m = 1; m <= 10; ++m) {
    const ScanReport r = scan({3}, {{3, 1.0}}, m, 6);
    const Hypergraph colex = colex_first_m({3}, m);
    ASSERT_TRUE(r.colex_in_family);
    bool found = false;
    enumerate_left_compressed({3}, m, 6, [&](const Hypergraph& h) {
      found = found || h == colex;
      return !found;
    });
    EXPECT_TRUE(found) << "m=" << m;
    EXPECT_GE(r.extremal_value, r.colex_value - 1e-9);
    EXPECT_EQ(r.conjecture_holds, r.extremal_value <= r.colex_value + 1e-7);
  }
}

TEST(Scan, GuardFlagsIncomplete) {
  ScanOptions opts;
  opts.max_graphs = 2;
  const ScanReport r = scan({3}, {{3, 1.0}}, 8, 6, opts);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.enumerated_count, 2U);
}

TEST(Scan, WitnessesAreNearExtremal) {
  const ScanReport r = scan({2}, {{2, 1.0}}, 4, 5);
  ASSERT_FALSE(r.witnesses.empty());
  for (const Hypergraph& w : r.witnesses) {
    EXPECT_NEAR(exact_oracle(w, {{2, 1.0}}).value, r.extremal_value, 1e-7);
  }
}

TEST(Scan, RejectsBadBounds) {
  EXPECT_THROW(scan({3}, {}, 0, 5), ScanError);
  EXPECT_THROW(scan({3}, {}, 2, 2), ScanError);
}

// Smallest representative of the isomorphism class of an r-graph on [n],
// as a sorted mask list, minimized over all vertex permutations.
std::vector<std::uint32_t> canonical(const std::vector<std::uint32_t>& masks, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best;
  do {
    std::vector<std::uint32_t> image;
    for (std::uint32_t mask : masks) {
      std::uint32_t mapped = 0;
      for (int b = 0; b < n; ++b) {
        if (mask >> b & 1U) mapped |= 1U << perm[b];
      }
      image.push_back(mapped);
    }
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double solved(const Hypergraph& h, const AlphaParams& alpha) {
  return std::max(optimize(h, alpha).value, exact_oracle(h, alpha).value);
}

TEST(Scan, LeftCompressionLosesNothing) {
  const int n = 6;
  for (int r : {2, 3}) {
    const AlphaParams alpha{{r, 1.0}};
    for (int m = 1; m <= 5; ++m) {
      std::set<std::vector<std::uint32_t>> classes;
      for (const auto& masks : testing::all_edge_sets(r, n, m)) classes.insert(canonical(masks, n));
      double all_best = 0.0;
      for (const auto& masks : classes) {
        all_best = std::max(all_best, solved(testing::from_masks(n, masks), alpha));
      }
      const ScanReport report = scan({r}, alpha, m, n);
      EXPECT_NEAR(report.extremal_value, all_best, 1e-9) << "r=" << r << " m=" << m;
    }
  }
}

TEST(TalbotRange, Examples) {
  EXPECT_EQ(talbot_range(3, 5, "tal").lo, 8);
  EXPECT_EQ(talbot_range(3, 5, "tal").hi, 11);
  EXPECT_EQ(talbot_range(3, 5, "tpzz").lo, 3);
  EXPECT_EQ(talbot_range(3, 5, "tpzz").hi, 13);
  EXPECT_EQ(talbot_range(4, 5, "tpzz1").lo, 1);
  EXPECT_EQ(talbot_range(4, 5, "tpzz1").hi, 5);
  EXPECT_EQ(talbot_range(3, 4, "tpzz").hi, 4 + 3 - 2);
  EXPECT_THROW(talbot_range(4, 5, "tal"), ScanError);
  EXPECT_THROW(talbot_range(2, 5, "tpzz1"), ScanError);
  EXPECT_THROW(talbot_range(3, 5, "other"), ScanError);
}

TEST(TalbotRange, ScansAgreeWithColex) {
  for (int t = 4; t <= 6; ++t) {
    const MRange range = talbot_range(3, t, "tal");
    const double complete_value = theorems::complete_uniform_value({3}, {{3, 1.0}}, t);
    for (std::int64_t m = range.lo; m <= range.hi; ++m) {
      const ScanReport r = scan({3}, {{3, 1.0}}, m, t + 1);
      EXPECT_TRUE(r.conjecture_holds) << "t=" << t << " m=" << m;
      EXPECT_NEAR(r.extremal_value, r.colex_value, 1e-7) << "t=" << t << " m=" << m;
      // The complete-graph value is reached only once [t] is fully covered.
      if (m >= theorems::colex_window({3}, t).lo) {
        EXPECT_NEAR(r.extremal_value, complete_value, 1e-7) << "t=" << t << " m=" << m;
      } else {
        EXPECT_LT(r.extremal_value, complete_value - 1e-7) << "t=" << t << " m=" << m;
      }
    }
  }
}

TEST(DefaultVertexBound, SmallestCoveringT) {
  EXPECT_EQ(default_vertex_bound({3}, 4), 5);
  EXPECT_EQ(default_vertex_bound({3}, 5), 6);
  EXPECT_EQ(default_vertex_bound({2}, 1), 3);
  EXPECT_EQ(default_vertex_bound({1, 3}, 4), 4);
}

TEST(VerifyConnection, Examples) {
  TheoremVerdict v = verify_connection({1, 2}, {{2, 1.0}}, 6, 5);
  EXPECT_TRUE(v.passed());
  EXPECT_NEAR(v.predicted, theorems::th2_value(1.0, 3), 1e-9);

  v = verify_connection({1, 3}, {{3, 0.5}}, 4, 5);
  EXPECT_TRUE(v.passed());

  v = verify_connection({1, 3}, {{3, 3.0}}, 4, 5);
  EXPECT_FALSE(v.hypothesis_ok);

  EXPECT_THROW(verify_connection({2, 3}, {{3, 1.0}}, 4, 5), ScanError);
}

}  // namespace
}  // namespace hyperlag
