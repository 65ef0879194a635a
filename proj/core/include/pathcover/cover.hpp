#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

enum class TraceAction : std::uint8_t { AcceptedNew, AcceptedAppend, AcceptedMerge, Rejected, Removed };

[[nodiscard]] std::string_view to_string(TraceAction a) noexcept;

struct TraceEvent {
  EdgeId edge = 0;
  TraceAction action = TraceAction::Rejected;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Ordered log of what the scan did with each edge it touched.
struct CoverTrace {
  std::vector<TraceEvent> events;

  [[nodiscard]] std::vector<EdgeId> accepted() const;
  [[nodiscard]] std::vector<EdgeId> rejected() const;
  [[nodiscard]] std::vector<EdgeId> removed() const;
};

enum class VertexPosition : std::uint8_t { Singleton, Endpoint, Interior };

struct VertexState {
  std::uint32_t path = 0;
  VertexPosition position = VertexPosition::Singleton;

  friend bool operator==(const VertexState&, const VertexState&) = default;
};

/// Vertex-disjoint simple paths covering every vertex, singletons included.
///
/// Paths are listed in order of their smallest vertex and each path starts
/// at its smaller endpoint, so two covers with the same edge set compare
/// equal member by member.
struct PathCover {
  std::vector<std::vector<VertexId>> paths;
  std::vector<EdgeId> edge_ids;  // ascending
  std::vector<VertexState> vertex_state;
  std::size_t h = 0;  // edges in the cover
  std::size_t k = 0;  // paths, singletons included
  double total_weight = 0.0;

  [[nodiscard]] std::size_t nonsingleton_paths() const noexcept;

  /// Assembles a cover from explicit vertex sequences. Edge ids are looked up
  /// in g; throws std::invalid_argument when a consecutive pair is not an
  /// edge or a vertex is out of range. Coverage is not checked here, see
  /// validate_cover.
  static PathCover from_paths(const Graph& g, std::vector<std::vector<VertexId>> paths);

  /// Assembles the canonical cover whose edges are exactly `ids`; vertices
  /// not touched become singletons. Throws std::invalid_argument unless the
  /// edges form a linear forest (degree <= 2, no cycle, no repeats).
  static PathCover from_edges(const Graph& g, std::span<const EdgeId> ids);

  friend bool operator==(const PathCover&, const PathCover&) = default;
};

enum class TraceMode : std::uint8_t { Off, On };

/// How the descending-weight edge order is materialized.
///
/// Bucketed orders key-range buckets on demand (BucketedEdgeSequence), so
/// edges removed by cover_optimized are dropped before any comparison.
/// Eager sorts every edge up front (SortedEdgeSequence) and, in
/// cover_optimized, unlinks removed edges from an intrusive list. Both
/// visit edges in the same order and produce the same cover and trace.
enum class SequenceMode : std::uint8_t { Bucketed, Eager };

[[nodiscard]] std::string_view to_string(SequenceMode m) noexcept;
/// Accepts "bucketed" or "eager"; throws std::invalid_argument otherwise.
[[nodiscard]] SequenceMode parse_sequence_mode(std::string_view s);

struct CoverResult {
  PathCover cover;
  std::optional<CoverTrace> trace;
};

/// Greedy 1/2-approximation: scan every edge in descending weight order and
/// accept it when it starts a new path, extends a path at an endpoint, or
/// joins endpoints of two different paths.
CoverResult cover_baseline(const Graph& g, TraceMode trace = TraceMode::Off,
                           SequenceMode sequence = SequenceMode::Bucketed);

/// Same acceptance rule as cover_baseline. Whenever a vertex becomes interior
/// all of its still-pending edges are unlinked from the sorted sequence, so
/// the scan never visits them. Produces the same cover as cover_baseline.
CoverResult cover_optimized(const Graph& g, TraceMode trace = TraceMode::Off,
                            SequenceMode sequence = SequenceMode::Bucketed);

[[nodiscard]] double cover_weight(const PathCover& c) noexcept;

struct ValidationReport {
  bool valid = true;
  std::string violation;  // first violation found, empty when valid
  std::size_t h = 0;
  std::size_t k = 0;  // all paths
  std::size_t nonsingleton_k = 0;
  double weight = 0.0;

  explicit operator bool() const noexcept { return valid; }
};

/// Checks disjoint full coverage, path simplicity, that consecutive vertices
/// are joined by real edges matching edge_ids, H = N - K and the stored
/// counts and weight. Violations are reported, never thrown.
ValidationReport validate_cover(const Graph& g, const PathCover& c);

}  // namespace pathcover
