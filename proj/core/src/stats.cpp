#include "pathcover/stats.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace pathcover {

DegreeStats sample_stats(std::span<const std::size_t> values) {
  if (values.empty()) throw std::invalid_argument("degree statistics need at least one vertex");
  DegreeStats s;
  s.n = values.size();

  std::map<std::size_t, std::size_t> counts;
  double sum = 0.0;
  for (std::size_t d : values) {
    ++counts[d];
    sum += static_cast<double>(d);
  }
  const double nd = static_cast<double>(s.n);
  const double mean = sum / nd;

  // Central moments from the histogram; exact for integer data up to rounding.
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  for (const auto& [d, c] : counts) {
    const double x = static_cast<double>(d) - mean;
    const double w = static_cast<double>(c);
    const double x2 = x * x;
    m2 += w * x2;
    m3 += w * x2 * x;
    m4 += w * x2 * x2;
  }
  m2 /= nd;
  m3 /= nd;
  m4 /= nd;

  s.avg_degree = mean;
  s.variance = m2;
  if (m2 > 0.0) {
    s.skewness = m3 / std::pow(m2, 1.5);
    s.kurtosis_excess = m4 / (m2 * m2) - 3.0;
  }
  s.histogram.assign(counts.begin(), counts.end());
  return s;
}

DegreeStats degree_stats(const Graph& g) {
  std::vector<std::size_t> degrees(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
  DegreeStats s = sample_stats(degrees);
  s.m = g.edge_count();
  // Exact form; the histogram mean can differ in the last ulp.
  s.avg_degree = 2.0 * static_cast<double>(s.m) / static_cast<double>(s.n);
  return s;
}

void write_histogram_csv(std::ostream& out, const DegreeStats& s) {
  out << "degree,count\n";
  for (const auto& [d, c] : s.histogram) out << d << ',' << c << '\n';
}

}  // namespace pathcover
