#include <gtest/gtest.h>

#include "pathcover/sorted_edges.hpp"
#include "support/reference.hpp"

using namespace pathcover;

namespace {

std::vector<EdgeId> drain(BucketedEdgeSequence& seq) {
  std::vector<EdgeId> out;
  EdgeId id = 0;
  while (seq.next(id)) out.push_back(id);
  return out;
}

std::vector<EdgeId> as_vector(const SortedEdgeSequence& s) { return {s.order().begin(), s.order().end()}; }

}  // namespace

TEST(SortedEdges, Empty) {
  const Graph g = Graph::build(3, {});
  EXPECT_TRUE(SortedEdgeSequence(g).empty());
  BucketedEdgeSequence b(g);
  EXPECT_TRUE(drain(b).empty());
}

TEST(SortedEdges, DescendingWeightThenId) {
  const Graph g = Graph::build(4, std::vector<EdgeTriple>{{0, 1, 5}, {1, 2, 9}, {2, 3, 5}});
  EXPECT_EQ(as_vector(SortedEdgeSequence(g)), (std::vector<EdgeId>{1, 0, 2}));
  BucketedEdgeSequence b(g);
  EXPECT_EQ(drain(b), (std::vector<EdgeId>{1, 0, 2}));
}

TEST(SortedEdges, AllTiedKeepsIdOrder) {
  const Graph g = Graph::build(5, std::vector<EdgeTriple>{{0, 1, 7}, {1, 2, 7}, {2, 3, 7}, {3, 4, 7}});
  EXPECT_EQ(as_vector(SortedEdgeSequence(g)), (std::vector<EdgeId>{0, 1, 2, 3}));
}

TEST(SortedEdges, BucketedDrainMatchesFullSort) {
  Rng rng(3);
  for (std::size_t target : {1u, 2u, 7u, 64u, 4096u}) {
    for (int rep = 0; rep < 10; ++rep) {
      const Graph g = ref::random_graph(rng, 120, 0.3, 1, rep % 2 == 0 ? 3 : 1000);
      BucketedEdgeSequence b(g, target);
      EXPECT_EQ(drain(b), as_vector(SortedEdgeSequence(g))) << "bucket target " << target;
    }
  }
}

TEST(SortedEdges, BucketedDrainRealWeights) {
  Rng rng(12);
  for (double spread : {1e-9, 1.0, 1e3, 1e12}) {
    std::vector<EdgeTriple> t;
    for (VertexId u = 0; u < 150; ++u) {
      for (VertexId v = u + 1; v < 150; ++v) {
        if (rng.uniform01() < 0.4) t.push_back({u, v, 1.0 + spread * rng.uniform01()});
      }
    }
    t.push_back({150, 151, 1e-300});
    t.push_back({149, 150, 1e300});
    const Graph g = Graph::build(152, t);
    for (std::size_t target : {3u, 50u, 1000u}) {
      BucketedEdgeSequence b(g, target);
      EXPECT_EQ(drain(b), as_vector(SortedEdgeSequence(g))) << "spread " << spread << " target " << target;
    }
  }
}

TEST(SortedEdges, BucketedSkipsRemoved) {
  Rng rng(9);
  const Graph g = ref::random_graph(rng, 80, 0.5, 1, 10);
  const auto full = as_vector(SortedEdgeSequence(g));
  BucketedEdgeSequence b(g, 16);
  ASSERT_GT(b.bucket_count(), 1u);

  std::vector<bool> gone(g.edge_count(), false);
  std::vector<EdgeId> seen;
  EdgeId id = 0;
  while (b.next(id)) {
    seen.push_back(id);
    EXPECT_FALSE(b.pending(id));
    // drop every third edge id that is still pending
    for (EdgeId x = id % 3; x < g.edge_count(); x += 3) {
      if (b.pending(x) && rng.uniform01() < 0.05) {
        b.remove(x);
        gone[x] = true;
      }
    }
  }
  std::vector<EdgeId> expect;
  for (EdgeId x : full) {
    if (!gone[x]) expect.push_back(x);
  }
  EXPECT_EQ(seen, expect);
  EXPECT_GT(b.removed_count(), 0u);
}

TEST(LiveEdgeList, UnlinkAndPop) {
  const Graph g = Graph::build(6, std::vector<EdgeTriple>{{0, 1, 1}, {1, 2, 5}, {2, 3, 3}, {3, 4, 4}, {4, 5, 2}});
  const SortedEdgeSequence seq(g);
  LiveEdgeList live(seq, g.edge_count());
  EXPECT_EQ(live.snapshot(), (std::vector<EdgeId>{1, 3, 2, 4, 0}));

  live.unlink(2);
  EXPECT_FALSE(live.live(2));
  EXPECT_EQ(live.snapshot(), (std::vector<EdgeId>{1, 3, 4, 0}));
  live.unlink(1);  // head
  EXPECT_EQ(live.front(), 3u);
  live.unlink(0);  // tail
  EXPECT_EQ(live.snapshot(), (std::vector<EdgeId>{3, 4}));
  EXPECT_EQ(live.pop_front(), 3u);
  EXPECT_FALSE(live.live(3));
  EXPECT_TRUE(live.live(4));
  EXPECT_EQ(live.pop_front(), 4u);
  EXPECT_TRUE(live.empty());
}
