#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathcover/cover.hpp"
#include "pathcover/graph.hpp"

namespace pathcover {

class OracleError : public std::invalid_argument {
 public:
  enum class Kind { TooLarge, InvalidCover };

  OracleError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  [[nodiscard]] Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct OptimalCover {
  PathCover cover;
  double weight = 0.0;
};

inline constexpr std::size_t kDefaultOracleLimit = 12;

/// Exact maximum-weight path cover by branch and bound over the edges in
/// descending weight order. Singletons are free, so this maximizes over
/// linear forests. Among equal-weight optima the witness is unspecified.
/// Throws OracleError(TooLarge) when the graph has more than `limit` vertices.
OptimalCover optimal_cover_bruteforce(const Graph& g, std::size_t limit = kDefaultOracleLimit);

/// Partition of OPT's edges against a greedy cover:
///   e1 = OPT ∩ cover
///   e2 = OPT − cover with both endpoints of cover-degree 1
///   e3 = OPT − cover with an endpoint of cover-degree 2
struct EdgeClassification {
  std::vector<EdgeId> e1;
  std::vector<EdgeId> e2;
  std::vector<EdgeId> e3;
  std::vector<std::uint8_t> d_a;  // cover-degree per vertex
};

/// Throws OracleError(InvalidCover) if either cover fails validate_cover, or
/// if an OPT edge outside the cover has an endpoint the cover leaves
/// uncovered (impossible for a greedy cover, and outside the partition).
EdgeClassification classify_edges(const Graph& g, const PathCover& cover, const OptimalCover& opt);

}  // namespace pathcover
