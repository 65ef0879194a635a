#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathcover/cover.hpp"
#include "pathcover/generators.hpp"
#include "pathcover/io.hpp"
#include "pathcover/oracle.hpp"
#include "pathcover/random.hpp"
#include "pathcover/stats.hpp"

namespace pathcover {

/// Where a benchmark graph comes from: a generator spec or an edge-list file.
struct GraphSource {
  std::optional<GenSpec> gen;
  std::optional<EdgeListFile> file;
  WeightPolicy policy;  // file sources only
};

struct SourcedGraph {
  Graph graph;
  std::string label;
  std::uint64_t seed = 0;
  std::string spec;
};

/// Builds or loads the graph. Errors propagate from the generator or loader.
SourcedGraph materialize(const GraphSource& source);

struct RunPlan {
  std::vector<GraphSource> sources;
  std::size_t repetitions = 5;
  std::size_t warmup = 1;
  bool verify = false;
  bool trace = false;
  SequenceMode sequence = SequenceMode::Bucketed;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Traces from one untimed traced run of each algorithm.
using TraceSink = std::function<void(const BenchRecord&, const Graph&, const CoverTrace& baseline,
                                     const CoverTrace& optimized)>;

/// Times both algorithms on one graph: `warmup` untimed runs each, then
/// `repetitions` interleaved timed runs; the median of each is reported.
/// With verify, both covers are validated and compared and H = N - K is
/// checked; a failure throws VerificationFailed. Throws
/// std::invalid_argument when repetitions == 0.
BenchRecord bench_graph(const SourcedGraph& sg, const RunPlan& plan, const TraceSink& sink = {});

/// bench_graph over every source in plan order.
std::vector<BenchRecord> run_bench(const RunPlan& plan, const TraceSink& sink = {});

struct VerifyOptions {
  std::size_t oracle_limit = kDefaultOracleLimit;
  bool require_bound = false;  // TooLarge instead of skipping on big graphs
  SequenceMode sequence = SequenceMode::Bucketed;
};

struct VerifyReport {
  bool invariants_ok = true;
  std::vector<std::string> failures;
  std::size_t n = 0;
  std::size_t h = 0;
  std::size_t k = 0;
  double cover_weight = 0.0;
  bool bound_checked = false;
  bool bound_ok = true;
  std::optional<double> optimal_weight;
  std::optional<EdgeClassification> classification;
  std::string notice;

  [[nodiscard]] bool ok() const noexcept { return invariants_ok && bound_ok; }
};

/// Validity of both covers, equivalence, H = N - K, trace monotonicity and
/// removal soundness; when n <= oracle_limit also the 1/2 bound against the
/// exact optimum plus the E1/E2/E3 classification.
VerifyReport verify_graph(const Graph& g, const VerifyOptions& options = {});

/// Random small instance: n uniform in [1, max_n], edge density uniform in
/// [0, 1], integer weights uniform in [lo, hi].
Graph random_small_graph(Rng& rng, std::size_t max_n, std::int64_t lo = 1, std::int64_t hi = 10);

struct SweepReport {
  std::size_t graphs = 0;
  std::size_t bound_violations = 0;
  std::size_t invariant_failures = 0;
  double min_ratio = 1.0;  // cover / OPT over graphs with OPT > 0
  std::vector<std::string> first_failures;
};

/// verify_graph over `count` random_small_graph instances.
SweepReport verify_sweep(std::size_t count, std::size_t max_n, std::uint64_t seed,
                         const VerifyOptions& options = {});

}  // namespace pathcover
