#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "pathcover/generators.hpp"
#include "pathcover/io.hpp"

using namespace pathcover;

namespace {

GenSpec ring(std::size_t n, std::size_t k, std::uint64_t seed = 1) {
  GenSpec s;
  s.family = Family::RingLattice;
  s.n = n;
  s.k = k;
  s.seed = seed;
  return s;
}

GenSpec er(std::size_t n, double c, std::uint64_t seed = 1) {
  GenSpec s;
  s.family = Family::ErdosRenyi;
  s.n = n;
  s.c = c;
  s.seed = seed;
  return s;
}

std::string dump(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace

TEST(Ring, FiveFourIsComplete) {
  const Graph g = generate(ring(5, 4));
  EXPECT_EQ(g.edge_count(), 10u);
  for (VertexId u = 0; u < 5; ++u) {
    EXPECT_EQ(g.degree(u), 4u);
    for (VertexId v = u + 1; v < 5; ++v) EXPECT_NE(g.find_edge(u, v), Graph::kNoEdge);
  }
}

TEST(Ring, EightCycle) {
  const Graph g = generate(ring(8, 2));
  EXPECT_EQ(g.edge_count(), 8u);
  for (VertexId u = 0; u < 8; ++u) EXPECT_NE(g.find_edge(u, (u + 1) % 8), Graph::kNoEdge);
}

TEST(Ring, LargeEdgeCountAndRegularity) {
  const Graph g = generate(ring(131072, 4));
  EXPECT_EQ(g.edge_count(), 262144u);
  for (VertexId u = 0; u < g.vertex_count(); u += 997) EXPECT_EQ(g.degree(u), 4u);
}

TEST(Ring, BadSpecs) {
  for (auto [n, k] : {std::pair{10, 3}, {10, 0}, {4, 4}, {3, 4}}) {
    try {
      (void)generate(ring(n, k));
      FAIL() << n << " " << k;
    } catch (const GenError& e) {
      EXPECT_EQ(e.kind(), GenError::Kind::BadSpec);
    }
  }
  GenSpec bad_w = ring(10, 2);
  bad_w.weight_lo = 0;
  EXPECT_THROW((void)generate(bad_w), GenError);
}

TEST(Generators, WeightsIntegralAndInRange) {
  for (const GenSpec& s : {ring(500, 6, 3), er(2000, 2, 3)}) {
    GenSpec t = s;
    t.weight_lo = 3;
    t.weight_hi = 7;
    const Graph g = generate(t);
    std::vector<int> seen(8, 0);
    for (const Edge& e : g.edges()) {
      ASSERT_EQ(e.weight, std::floor(e.weight));
      ASSERT_GE(e.weight, 3.0);
      ASSERT_LE(e.weight, 7.0);
      ++seen[static_cast<int>(e.weight)];
    }
    for (int w = 3; w <= 7; ++w) EXPECT_GT(seen[w], 0);
  }
}

TEST(Generators, SeedDeterminism) {
  EXPECT_EQ(dump(generate(ring(300, 4, 9))), dump(generate(ring(300, 4, 9))));
  EXPECT_EQ(dump(generate(er(3000, 2, 9))), dump(generate(er(3000, 2, 9))));
  EXPECT_NE(dump(generate(er(3000, 2, 9))), dump(generate(er(3000, 2, 10))));
}

TEST(ErdosRenyi, DegenerateProbability) {
  // p = c ln(n)/n >= 1
  GenSpec s = er(10, 10.0 / std::log(10.0));
  try {
    (void)generate(s);
    FAIL();
  } catch (const GenError& e) {
    EXPECT_EQ(e.kind(), GenError::Kind::DegenerateProbability);
  }
  EXPECT_THROW((void)generate(er(100, 0.0)), GenError);
  EXPECT_THROW((void)generate(er(1, 2.0)), GenError);
}

TEST(ErdosRenyi, EdgeCountWithinThreeSigma) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const GenSpec s = er(1000, 2, seed);
    const double p = s.edge_probability();
    const double mean = p * 1000 * 999 / 2;
    const double sigma = std::sqrt(mean * (1 - p));
    EXPECT_NEAR(static_cast<double>(generate(s).edge_count()), mean, 3 * sigma);
  }
}

TEST(ErdosRenyi, PairsAreUniform) {
  // Every pair of a 12-vertex graph appears with frequency near p.
  const std::size_t n = 12;
  const int runs = 4000;
  std::vector<int> hits(n * n, 0);
  double p = 0;
  for (int r = 0; r < runs; ++r) {
    const GenSpec s = er(n, 2, 1000 + r);
    p = s.edge_probability();
    const Graph g = generate(s);
    for (const Edge& e : g.edges()) {
      ASSERT_LT(e.u, e.v);
      ++hits[e.u * n + e.v];
    }
  }
  const double sigma = std::sqrt(runs * p * (1 - p));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) EXPECT_NEAR(hits[u * n + v], runs * p, 4.5 * sigma) << u << "," << v;
  }
}

TEST(ErdosRenyi, MeanEdgeCountOverSeeds) {
  const std::size_t n = 10000;
  double total = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) total += static_cast<double>(generate(er(n, 2, seed)).edge_count());
  const double p = er(n, 2).edge_probability();
  const double expect = p * n * (n - 1) / 2;
  EXPECT_NEAR(total / 30, expect, 0.01 * expect);
}

TEST(Generators, Names) {
  EXPECT_EQ(parse_family("ws"), Family::RingLattice);
  EXPECT_EQ(parse_family("erdos-renyi"), Family::ErdosRenyi);
  EXPECT_THROW((void)parse_family("ba"), GenError);
  EXPECT_EQ(ring(8, 2, 4).echo(), "ring-lattice;n=8;k=2;w=1:10;seed=4");
  EXPECT_EQ(er(100, 2.5, 4).echo(), "erdos-renyi;n=100;c=2.5;w=1:10;seed=4");
}
