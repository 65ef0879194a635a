#include "pathcover/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pathcover {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const EdgeTriple> triples) {
  if (n > std::numeric_limits<VertexId>::max() ||
      triples.size() >= std::numeric_limits<EdgeId>::max() - 1) {
    throw std::length_error("graph too large for 32-bit ids");
  }

  Graph g;
  g.n_ = n;
  g.edges_.reserve(triples.size());

  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    if (t.u >= n || t.v >= n) {
      const VertexId bad = t.u >= n ? t.u : t.v;
      throw GraphError(GraphError::Kind::BadEndpoint,
                       "endpoint " + std::to_string(bad) + " out of range for n=" + std::to_string(n));
    }
    if (t.u == t.v) {
      throw GraphError(GraphError::Kind::SelfLoop, "self-loop at vertex " + std::to_string(t.u));
    }
    if (!(t.weight > 0.0) || !std::isfinite(t.weight)) {
      throw GraphError(GraphError::Kind::NonPositiveWeight,
                       "edge weight must be positive and finite, got " + std::to_string(t.weight));
    }
    g.edges_.push_back(Edge{t.u, t.v, t.weight, static_cast<EdgeId>(i)});
  }

  // Duplicate detection on sorted pair keys; report the pair as given.
  std::vector<std::uint64_t> keys(g.edges_.size());
  for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = pair_key(g.edges_[i].u, g.edges_[i].v);
  std::sort(keys.begin(), keys.end());
  if (auto dup = std::adjacent_find(keys.begin(), keys.end()); dup != keys.end()) {
    const auto a = static_cast<VertexId>(*dup >> 32);
    const auto b = static_cast<VertexId>(*dup & 0xffffffffu);
    throw GraphError(GraphError::Kind::DuplicateEdge,
                     "duplicate edge {" + std::to_string(a) + ", " + std::to_string(b) + "}");
  }

  std::vector<std::size_t> counts(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++counts[e.u + 1];
    ++counts[e.v + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) counts[i] += counts[i - 1];
  g.offsets_ = counts;
  g.incidence_.resize(2 * g.edges_.size());
  for (const auto& e : g.edges_) {
    g.incidence_[counts[e.u]++] = e.id;
    g.incidence_[counts[e.v]++] = e.id;
  }
  return g;
}

std::span<const EdgeId> Graph::incident(VertexId u) const {
  if (u >= n_) {
    throw GraphError(GraphError::Kind::BadEndpoint,
                     "vertex " + std::to_string(u) + " out of range for n=" + std::to_string(n_));
  }
  return std::span<const EdgeId>(incidence_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
}

EdgeId Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= n_ || b >= n_) return kNoEdge;
  const auto la = incident(a);
  const auto lb = incident(b);
  const VertexId from = la.size() <= lb.size() ? a : b;
  const VertexId to = from == a ? b : a;
  for (EdgeId id : incident(from)) {
    if (edges_[id].other(from) == to) return id;
  }
  return kNoEdge;
}

double Graph::total_weight() const noexcept {
  double sum = 0.0;
  for (const auto& e : edges_) sum += e.weight;
  return sum;
}

}  // namespace pathcover
