#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

/// Population moments of the per-vertex degree sequence.
///
/// skewness and kurtosis_excess are empty when the degree variance is zero
/// (regular graphs), never reported as 0.
struct DegreeStats {
  std::size_t n = 0;
  std::size_t m = 0;
  double avg_degree = 0.0;
  double variance = 0.0;
  std::optional<double> skewness;
  std::optional<double> kurtosis_excess;
  std::vector<std::pair<std::size_t, std::size_t>> histogram;  // (degree, count), ascending degree
};

/// Throws std::invalid_argument when the graph has no vertices.
DegreeStats degree_stats(const Graph& g);

/// Same moments over an arbitrary sample; m is left 0.
DegreeStats sample_stats(std::span<const std::size_t> values);

/// `degree,count` header then one row per distinct degree.
void write_histogram_csv(std::ostream& out, const DegreeStats& s);

}  // namespace pathcover
