#include "pathcover/generators.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "pathcover/random.hpp"

namespace pathcover {

namespace {

void check_weights(const GenSpec& spec) {
  if (spec.weight_lo < 1 || spec.weight_lo > spec.weight_hi) {
    throw GenError(GenError::Kind::BadSpec, "weight bounds must satisfy 1 <= lo <= hi, got " +
                                                std::to_string(spec.weight_lo) + ":" +
                                                std::to_string(spec.weight_hi));
  }
}

double draw_weight(Rng& rng, const GenSpec& spec) {
  return static_cast<double>(rng.uniform_int(spec.weight_lo, spec.weight_hi));
}

}  // namespace

std::string to_string(Family f) {
  return f == Family::RingLattice ? "ring-lattice" : "erdos-renyi";
}

Family parse_family(const std::string& s) {
  if (s == "ring" || s == "ring-lattice" || s == "watts-strogatz" || s == "ws") return Family::RingLattice;
  if (s == "er" || s == "erdos-renyi") return Family::ErdosRenyi;
  throw GenError(GenError::Kind::BadSpec, "unknown graph family '" + s + "'");
}

double GenSpec::edge_probability() const {
  if (n < 2) return 0.0;
  const auto nd = static_cast<double>(n);
  return c * std::log(nd) / nd;
}

std::string GenSpec::echo() const {
  char buf[160];
  if (family == Family::RingLattice) {
    std::snprintf(buf, sizeof buf, "ring-lattice;n=%zu;k=%zu;w=%lld:%lld;seed=%llu", n, k,
                  static_cast<long long>(weight_lo), static_cast<long long>(weight_hi),
                  static_cast<unsigned long long>(seed));
  } else {
    std::snprintf(buf, sizeof buf, "erdos-renyi;n=%zu;c=%g;w=%lld:%lld;seed=%llu", n, c,
                  static_cast<long long>(weight_lo), static_cast<long long>(weight_hi),
                  static_cast<unsigned long long>(seed));
  }
  return buf;
}

Graph gen_ring_lattice(const GenSpec& spec) {
  if (spec.family != Family::RingLattice) throw GenError(GenError::Kind::BadSpec, "spec is not a ring lattice");
  if (spec.k < 2 || spec.k % 2 != 0 || spec.k >= spec.n) {
    throw GenError(GenError::Kind::BadSpec, "ring lattice needs even k with 2 <= k < n, got k=" +
                                                std::to_string(spec.k) + " n=" + std::to_string(spec.n));
  }
  check_weights(spec);

  Rng rng(spec.seed);
  const std::size_t half = spec.k / 2;
  std::vector<EdgeTriple> triples;
  triples.reserve(spec.n * half);
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = 1; j <= half; ++j) {
      triples.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + j) % spec.n),
                         draw_weight(rng, spec)});
    }
  }
  return Graph::build(spec.n, triples);
}

Graph gen_erdos_renyi(const GenSpec& spec) {
  if (spec.family != Family::ErdosRenyi) throw GenError(GenError::Kind::BadSpec, "spec is not Erdos-Renyi");
  check_weights(spec);
  const double p = spec.edge_probability();
  if (!(p > 0.0) || p >= 1.0) {
    throw GenError(GenError::Kind::DegenerateProbability,
                   "edge probability c*ln(n)/n = " + std::to_string(p) + " outside (0, 1)");
  }

  Rng rng(spec.seed);
  const double log_q = std::log1p(-p);
  const auto n = static_cast<std::int64_t>(spec.n);
  const double expected = p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  std::vector<EdgeTriple> triples;
  triples.reserve(static_cast<std::size_t>(expected + 6.0 * std::sqrt(expected) + 16.0));

  // Walk the lower triangle row by row, jumping over geometric gaps.
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double r = rng.uniform01();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) {
      triples.push_back({static_cast<VertexId>(w), static_cast<VertexId>(v), draw_weight(rng, spec)});
    }
  }
  return Graph::build(spec.n, triples);
}

Graph generate(const GenSpec& spec) {
  return spec.family == Family::RingLattice ? gen_ring_lattice(spec) : gen_erdos_renyi(spec);
}

}  // namespace pathcover
