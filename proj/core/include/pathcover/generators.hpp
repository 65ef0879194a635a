#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "pathcover/graph.hpp"

namespace pathcover {

enum class Family : std::uint8_t { RingLattice, ErdosRenyi };

[[nodiscard]] std::string to_string(Family f);
/// Accepts "ring", "ring-lattice", "watts-strogatz", "er", "erdos-renyi".
[[nodiscard]] Family parse_family(const std::string& s);

struct GenSpec {
  Family family = Family::RingLattice;
  std::size_t n = 0;
  std::size_t k = 4;    // ring degree, even
  double c = 2.0;       // ER coefficient, p = c ln(n) / n
  std::int64_t weight_lo = 1;
  std::int64_t weight_hi = 10;
  std::uint64_t seed = 1;

  [[nodiscard]] double edge_probability() const;
  /// Compact one-token description, e.g. "erdos-renyi;n=25806;c=3;w=1:10;seed=7".
  [[nodiscard]] std::string echo() const;
};

class GenError : public std::invalid_argument {
 public:
  enum class Kind { BadSpec, DegenerateProbability };

  GenError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  [[nodiscard]] Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Zero-rewiring Watts-Strogatz: vertex i joins i+1 .. i+k/2 (mod n).
/// Edges are emitted vertex-major, n*k/2 in total.
Graph gen_ring_lattice(const GenSpec& spec);

/// G(n, p) with p = c ln(n) / n, pairs sampled by geometric skipping.
Graph gen_erdos_renyi(const GenSpec& spec);

/// Dispatches on spec.family.
Graph generate(const GenSpec& spec);

}  // namespace pathcover
