#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathcover {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;
  EdgeId id = 0;

  [[nodiscard]] VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
};

struct EdgeTriple {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;
};

class GraphError : public std::invalid_argument {
 public:
  enum class Kind { SelfLoop, DuplicateEdge, BadEndpoint, NonPositiveWeight };

  GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

  [[nodiscard]] Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Immutable weighted undirected simple graph.
///
/// Edge ids are the positions in the input triple list. Incidence lists are
/// stored in CSR form; each vertex lists its incident edge ids in ascending
/// id order.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Throws GraphError on self-loops, duplicate
  /// unordered pairs, endpoints >= n and non-positive (or NaN) weights.
  static Graph build(std::size_t n, std::span<const EdgeTriple> triples);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }

  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] const Edge& edge(EdgeId id) const { return edges_[id]; }

  /// Incident edge ids of u. Throws GraphError(BadEndpoint) if u >= n.
  [[nodiscard]] std::span<const EdgeId> incident(VertexId u) const;

  [[nodiscard]] std::size_t degree(VertexId u) const { return incident(u).size(); }

  /// Edge id joining a and b, or -1 cast to EdgeId if absent.
  [[nodiscard]] EdgeId find_edge(VertexId a, VertexId b) const;

  [[nodiscard]] double total_weight() const noexcept;

  static constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> incidence_;
};

}  // namespace pathcover
