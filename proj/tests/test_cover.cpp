#include <gtest/gtest.h>

#include "pathcover/cover.hpp"
#include "support/reference.hpp"

using namespace pathcover;

namespace {

// Five vertices, complete; the heavy edges are taken in a fixed order and
// form the single path 0-1-4-3-2.
Graph golden_graph() {
  const std::vector<EdgeTriple> t{{1, 0, 10}, {1, 4, 9}, {3, 4, 8}, {2, 3, 7}, {0, 2, 6},
                                  {1, 3, 1},  {1, 2, 1}, {0, 4, 1}, {2, 4, 1}, {0, 3, 1}};
  return Graph::build(5, t);
}

constexpr SequenceMode kModes[] = {SequenceMode::Bucketed, SequenceMode::Eager};

}  // namespace

TEST(Cover, SingleEdge) {
  const Graph g = Graph::build(2, std::vector<EdgeTriple>{{0, 1, 5}});
  for (SequenceMode mode : kModes) {
    for (const auto& r : {cover_baseline(g, TraceMode::On, mode), cover_optimized(g, TraceMode::On, mode)}) {
      EXPECT_EQ(r.cover.paths, (std::vector<std::vector<VertexId>>{{0, 1}}));
      EXPECT_EQ(r.cover.h, 1u);
      EXPECT_EQ(r.cover.k, 1u);
      EXPECT_EQ(cover_weight(r.cover), 5.0);
      EXPECT_TRUE(r.trace->removed().empty());
    }
  }
}

TEST(Cover, EdgelessGraph) {
  const Graph g = Graph::build(3, {});
  const auto r = cover_baseline(g);
  EXPECT_EQ(r.cover.k, 3u);
  EXPECT_EQ(r.cover.h, 0u);
  EXPECT_EQ(cover_weight(r.cover), 0.0);
  EXPECT_TRUE(validate_cover(g, r.cover));
}

TEST(Cover, TriangleRejectsClosingEdge) {
  const Graph g = Graph::build(3, std::vector<EdgeTriple>{{0, 1, 3}, {1, 2, 2}, {0, 2, 1}});
  const auto r = cover_baseline(g, TraceMode::On);
  EXPECT_EQ(r.cover.edge_ids, (std::vector<EdgeId>{0, 1}));
  EXPECT_EQ(r.cover.total_weight, 5.0);
  EXPECT_EQ(r.trace->rejected(), (std::vector<EdgeId>{2}));
}

TEST(Cover, GoldenBaselineTrace) {
  const Graph g = golden_graph();
  for (SequenceMode mode : kModes) {
    const auto r = cover_baseline(g, TraceMode::On, mode);
    const std::vector<TraceEvent> expect{
        {0, TraceAction::AcceptedNew}, {1, TraceAction::AcceptedAppend}, {2, TraceAction::AcceptedAppend},
        {3, TraceAction::AcceptedAppend}, {4, TraceAction::Rejected},    {5, TraceAction::Rejected},
        {6, TraceAction::Rejected},       {7, TraceAction::Rejected},    {8, TraceAction::Rejected},
        {9, TraceAction::Rejected}};
    EXPECT_EQ(r.trace->events, expect);
    EXPECT_EQ(r.cover.paths, (std::vector<std::vector<VertexId>>{{0, 1, 4, 3, 2}}));
    EXPECT_EQ(r.cover.h, 4u);
    EXPECT_EQ(r.cover.k, 1u);
    EXPECT_EQ(cover_weight(r.cover), 34.0);
  }
}

TEST(Cover, GoldenOptimizedTrace) {
  const Graph g = golden_graph();
  for (SequenceMode mode : kModes) {
    const auto r = cover_optimized(g, TraceMode::On, mode);
    const std::vector<TraceEvent> expect{
        {0, TraceAction::AcceptedNew},    {1, TraceAction::AcceptedAppend}, {5, TraceAction::Removed},
        {6, TraceAction::Removed},        {2, TraceAction::AcceptedAppend}, {7, TraceAction::Removed},
        {8, TraceAction::Removed},        {3, TraceAction::AcceptedAppend}, {9, TraceAction::Removed},
        {4, TraceAction::Rejected}};
    EXPECT_EQ(r.trace->events, expect);
    EXPECT_EQ(r.cover.paths, (std::vector<std::vector<VertexId>>{{0, 1, 4, 3, 2}}));
    EXPECT_EQ(r.cover, cover_baseline(g, TraceMode::Off, mode).cover);
  }
}

TEST(Cover, MergeJoinsTwoPaths) {
  // {0,1} and {2,3} form first, then {1,2} merges them.
  const Graph g = Graph::build(4, std::vector<EdgeTriple>{{0, 1, 9}, {2, 3, 8}, {1, 2, 7}, {0, 3, 6}});
  const auto r = cover_optimized(g, TraceMode::On);
  EXPECT_EQ(r.trace->events[2].action, TraceAction::AcceptedMerge);
  EXPECT_EQ(r.cover.paths, (std::vector<std::vector<VertexId>>{{0, 1, 2, 3}}));
  EXPECT_EQ(r.cover.vertex_state[1].position, VertexPosition::Interior);
  EXPECT_EQ(r.cover.vertex_state[0].position, VertexPosition::Endpoint);
}

TEST(Cover, TracingDoesNotChangeCover) {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const Graph g = ref::random_graph(rng, 30, 0.3, 1, 5);
    EXPECT_EQ(cover_baseline(g, TraceMode::On).cover, cover_baseline(g).cover);
    EXPECT_EQ(cover_optimized(g, TraceMode::On).cover, cover_optimized(g).cover);
  }
}

TEST(Cover, EquivalenceExhaustiveSmall) {
  for (std::size_t n = 1; n <= 4; ++n) {
    ref::for_each_weighted_graph(n, {1, 2, 3}, [&](const Graph& g) {
      const auto expect = ref::greedy_edges(g);
      for (SequenceMode mode : kModes) {
        const auto b = cover_baseline(g, TraceMode::Off, mode).cover;
        const auto o = cover_optimized(g, TraceMode::Off, mode).cover;
        ASSERT_EQ(b.edge_ids, expect);
        ASSERT_EQ(o.edge_ids, expect);
        ASSERT_EQ(b.h + b.k, n);
      }
    });
  }
}

TEST(Cover, EquivalenceRandomAgainstReference) {
  Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 64));
    const Graph g = ref::random_graph(rng, n, rng.uniform01(), 1, i % 3 == 0 ? 3 : 10);
    const auto expect = ref::greedy_edges(g);
    for (SequenceMode mode : kModes) {
      const auto b = cover_baseline(g, TraceMode::On, mode);
      const auto o = cover_optimized(g, TraceMode::On, mode);
      ASSERT_EQ(b.cover.edge_ids, expect);
      ASSERT_EQ(o.cover, b.cover);
      ASSERT_TRUE(validate_cover(g, b.cover)) << validate_cover(g, b.cover).violation;
      for (EdgeId id : o.trace->removed()) {
        ASSERT_FALSE(std::binary_search(expect.begin(), expect.end(), id));
      }
      double last = 1e300;
      for (EdgeId id : b.trace->accepted()) {
        ASSERT_LE(g.edge(id).weight, last);
        last = g.edge(id).weight;
      }
    }
  }
}

TEST(Cover, EquivalenceAcrossManyBuckets) {
  Rng rng(4);
  for (int i = 0; i < 3; ++i) {
    const Graph g = ref::random_graph(rng, 600, 0.08, 1, i == 0 ? 2 : 1000);
    ASSERT_GT(g.edge_count(), 10000u);
    const auto expect = ref::greedy_edges(g);
    for (SequenceMode mode : kModes) {
      EXPECT_EQ(cover_baseline(g, TraceMode::Off, mode).cover.edge_ids, expect);
      EXPECT_EQ(cover_optimized(g, TraceMode::Off, mode).cover.edge_ids, expect);
    }
  }
}

TEST(Cover, CompleteGraphDistinctWeightsGivesOnePath) {
  for (std::size_t n = 2; n <= 12; ++n) {
    std::vector<EdgeTriple> t;
    Rng rng(n);
    std::vector<double> w(n * (n - 1) / 2);
    std::iota(w.begin(), w.end(), 1.0);
    for (std::size_t i = w.size(); i > 1; --i) std::swap(w[i - 1], w[rng.uniform_int(0, i - 1)]);
    std::size_t next = 0;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) t.push_back({u, v, w[next++]});
    }
    const Graph g = Graph::build(n, t);
    const auto c = cover_optimized(g).cover;
    const auto rep = validate_cover(g, c);
    EXPECT_EQ(rep.nonsingleton_k, 1u);
    EXPECT_EQ(c.h, n - 1);
  }
}

TEST(Validate, FourteenVerticesThreePaths) {
  std::vector<EdgeTriple> t;
  const std::vector<std::vector<VertexId>> paths{{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}, {11, 12, 13}};
  for (const auto& p : paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) t.push_back({p[i], p[i + 1], 1.0 + i});
  }
  t.push_back({5, 6, 2});
  t.push_back({0, 13, 4});
  const Graph g = Graph::build(14, t);
  const PathCover c = PathCover::from_paths(g, paths);
  const auto rep = validate_cover(g, c);
  ASSERT_TRUE(rep) << rep.violation;
  EXPECT_EQ(rep.k, 3u);
  EXPECT_EQ(rep.h, 11u);
  EXPECT_EQ(c.h, 14u - c.k);
}

TEST(Validate, MultiplyCovered) {
  const Graph g = Graph::build(3, std::vector<EdgeTriple>{{0, 1, 1}, {1, 2, 1}});
  PathCover c = cover_baseline(g).cover;
  c.paths = {{0, 1}, {1, 2}};
  const auto rep = validate_cover(g, c);
  EXPECT_FALSE(rep);
  EXPECT_NE(rep.violation.find("vertex multiply covered"), std::string::npos) << rep.violation;
}

TEST(Validate, DetectsBrokenCovers) {
  const Graph g = Graph::build(4, std::vector<EdgeTriple>{{0, 1, 1}, {1, 2, 2}, {2, 3, 3}});
  const PathCover good = cover_baseline(g).cover;
  ASSERT_TRUE(validate_cover(g, good));

  PathCover missing = good;
  missing.paths = {{0, 1, 2}};
  EXPECT_NE(validate_cover(g, missing).violation.find("uncovered"), std::string::npos);

  PathCover non_edge = good;
  non_edge.paths = {{0, 2, 1, 3}};
  EXPECT_FALSE(validate_cover(g, non_edge));

  PathCover bad_weight = good;
  bad_weight.total_weight += 1;
  EXPECT_FALSE(validate_cover(g, bad_weight));

  PathCover bad_h = good;
  bad_h.h += 1;
  EXPECT_FALSE(validate_cover(g, bad_h));
}

TEST(Cover, FromEdgesRejectsCycle) {
  const Graph g = Graph::build(3, std::vector<EdgeTriple>{{0, 1, 3}, {1, 2, 2}, {0, 2, 1}});
  const std::vector<EdgeId> all{0, 1, 2};
  EXPECT_THROW((void)PathCover::from_edges(g, all), std::invalid_argument);
}

TEST(Cover, SequenceModeNames) {
  EXPECT_EQ(parse_sequence_mode("eager"), SequenceMode::Eager);
  EXPECT_EQ(parse_sequence_mode(to_string(SequenceMode::Bucketed)), SequenceMode::Bucketed);
  EXPECT_THROW((void)parse_sequence_mode("lazy"), std::invalid_argument);
  EXPECT_EQ(to_string(TraceAction::AcceptedNew), "accepted-new");
}
