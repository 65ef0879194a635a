#include "pathcover/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace pathcover {

namespace {

using Clock = std::chrono::steady_clock;

// Timer floor so tiny graphs still yield a finite ratio.
constexpr double kMinSeconds = 1e-9;

template <typename F>
double time_once(F&& f) {
  const auto start = Clock::now();
  f();
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  return std::max(s, kMinSeconds);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

bool non_increasing_accepts(const Graph& g, const CoverTrace& t) {
  double last = std::numeric_limits<double>::infinity();
  for (EdgeId id : t.accepted()) {
    if (g.edge(id).weight > last) return false;
    last = g.edge(id).weight;
  }
  return true;
}

// Core checks shared by bench --verify and verify.
std::vector<std::string> check_pair(const Graph& g, const PathCover& base, const PathCover& opt) {
  std::vector<std::string> failures;
  if (const auto r = validate_cover(g, base); !r) failures.push_back("baseline cover invalid: " + r.violation);
  if (const auto r = validate_cover(g, opt); !r) failures.push_back("optimized cover invalid: " + r.violation);
  if (base.edge_ids != opt.edge_ids) failures.push_back("baseline and optimized edge sets differ");
  if (!(base == opt)) failures.push_back("baseline and optimized covers differ");
  for (const PathCover* c : {&base, &opt}) {
    if (c->h + c->k != g.vertex_count()) {
      failures.push_back("H = N - K violated: H=" + std::to_string(c->h) + " K=" + std::to_string(c->k) +
                         " N=" + std::to_string(g.vertex_count()));
    }
  }
  return failures;
}

}  // namespace

SourcedGraph materialize(const GraphSource& source) {
  SourcedGraph out;
  if (source.gen) {
    out.graph = generate(*source.gen);
    out.label = to_string(source.gen->family);
    out.seed = source.gen->seed;
    out.spec = source.gen->echo();
    return out;
  }
  if (!source.file) throw std::invalid_argument("graph source has neither a generator spec nor a file");
  LoadedGraph loaded = load_edge_list(*source.file, source.policy);
  out.graph = std::move(loaded.graph);
  out.label = source.file->path.filename().string();
  out.seed = source.policy.kind == WeightPolicy::Kind::Random ? source.policy.seed : 0;
  out.spec = "file=" + source.file->path.string() + ";" + source.policy.echo() +
             ";duplicates=" + std::to_string(loaded.duplicates) +
             ";self_loops=" + std::to_string(loaded.self_loops);
  return out;
}

BenchRecord bench_graph(const SourcedGraph& sg, const RunPlan& plan, const TraceSink& sink) {
  if (plan.repetitions == 0) throw std::invalid_argument("repetitions must be at least 1");
  const Graph& g = sg.graph;

  for (std::size_t i = 0; i < plan.warmup; ++i) {
    (void)cover_baseline(g, TraceMode::Off, plan.sequence);
    (void)cover_optimized(g, TraceMode::Off, plan.sequence);
  }

  std::vector<double> t1;
  std::vector<double> t2;
  std::optional<PathCover> c1;
  std::optional<PathCover> c2;
  for (std::size_t i = 0; i < plan.repetitions; ++i) {
    CoverResult r1;
    CoverResult r2;
    t1.push_back(time_once([&] { r1 = cover_baseline(g, TraceMode::Off, plan.sequence); }));
    t2.push_back(time_once([&] { r2 = cover_optimized(g, TraceMode::Off, plan.sequence); }));
    if (!c1) {
      c1 = std::move(r1.cover);
      c2 = std::move(r2.cover);
    } else if (r1.cover.total_weight != c1->total_weight || r2.cover.total_weight != c2->total_weight) {
      throw VerificationFailed(sg.label + ": cover weight changed between repetitions");
    }
  }

  const DegreeStats stats = g.vertex_count() > 0 ? degree_stats(g) : DegreeStats{};
  BenchRecord rec;
  rec.label = sg.label;
  rec.n = g.vertex_count();
  rec.m = g.edge_count();
  rec.avg_degree = stats.avg_degree;
  rec.skewness = stats.skewness;
  rec.kurtosis_excess = stats.kurtosis_excess;
  rec.t_algo1_seconds = median(t1);
  rec.t_algo2_seconds = median(t2);
  rec.time_ratio = rec.t_algo2_seconds / rec.t_algo1_seconds;
  rec.cover_weight_1 = c1->total_weight;
  rec.cover_weight_2 = c2->total_weight;
  rec.h = c1->h;
  rec.k = c1->k;
  rec.seed = sg.seed;
  rec.spec = sg.spec + ";sequence=" + std::string(to_string(plan.sequence));

  if (plan.verify) {
    const auto failures = check_pair(g, *c1, *c2);
    if (!failures.empty()) throw VerificationFailed(sg.label + ": " + failures.front());
  }
  if (plan.trace) {
    const CoverResult traced1 = cover_baseline(g, TraceMode::On, plan.sequence);
    const CoverResult traced2 = cover_optimized(g, TraceMode::On, plan.sequence);
    if (plan.verify && (!(traced1.cover == *c1) || !(traced2.cover == *c2))) {
      throw VerificationFailed(sg.label + ": tracing changed the computed cover");
    }
    if (sink) sink(rec, g, *traced1.trace, *traced2.trace);
  }
  return rec;
}

std::vector<BenchRecord> run_bench(const RunPlan& plan, const TraceSink& sink) {
  std::vector<BenchRecord> out;
  out.reserve(plan.sources.size());
  for (const auto& source : plan.sources) out.push_back(bench_graph(materialize(source), plan, sink));
  return out;
}

VerifyReport verify_graph(const Graph& g, const VerifyOptions& options) {
  VerifyReport rep;
  rep.n = g.vertex_count();
  const bool oracle_fits = g.vertex_count() <= options.oracle_limit;
  if (options.require_bound && !oracle_fits) {
    throw OracleError(OracleError::Kind::TooLarge,
                      "bound check requested but n=" + std::to_string(g.vertex_count()) +
                          " exceeds oracle limit " + std::to_string(options.oracle_limit));
  }

  const CoverResult base = cover_baseline(g, TraceMode::On, options.sequence);
  const CoverResult opt = cover_optimized(g, TraceMode::On, options.sequence);
  rep.failures = check_pair(g, base.cover, opt.cover);
  rep.h = base.cover.h;
  rep.k = base.cover.k;
  rep.cover_weight = base.cover.total_weight;

  if (!non_increasing_accepts(g, *base.trace) || !non_increasing_accepts(g, *opt.trace)) {
    rep.failures.push_back("accepted edges not in non-increasing weight order");
  }
  std::vector<bool> in_base(g.edge_count(), false);
  for (EdgeId id : base.cover.edge_ids) in_base[id] = true;
  for (EdgeId id : opt.trace->removed()) {
    if (in_base[id]) {
      rep.failures.push_back("removed edge " + std::to_string(id) + " is in the baseline cover");
      break;
    }
  }
  if (!(cover_baseline(g, TraceMode::Off, options.sequence).cover == base.cover)) {
    rep.failures.push_back("tracing changed the baseline cover");
  }
  rep.invariants_ok = rep.failures.empty();

  if (!oracle_fits) {
    rep.notice = "bound check skipped: n=" + std::to_string(g.vertex_count()) + " exceeds oracle limit " +
                 std::to_string(options.oracle_limit);
    return rep;
  }
  const OptimalCover best = optimal_cover_bruteforce(g, options.oracle_limit);
  rep.bound_checked = true;
  rep.optimal_weight = best.weight;
  rep.bound_ok = base.cover.total_weight >= 0.5 * best.weight && best.weight >= base.cover.total_weight;
  if (!rep.bound_ok) {
    rep.failures.push_back("bound violated: cover " + format_g6(base.cover.total_weight) + " vs OPT " +
                           format_g6(best.weight));
  }
  if (rep.invariants_ok) rep.classification = classify_edges(g, base.cover, best);
  return rep;
}

Graph random_small_graph(Rng& rng, std::size_t max_n, std::int64_t lo, std::int64_t hi) {
  const auto n = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(std::max<std::size_t>(max_n, 1))));
  const double density = rng.uniform01();
  std::vector<EdgeTriple> triples;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.uniform01() < density) triples.push_back({u, v, static_cast<double>(rng.uniform_int(lo, hi))});
    }
  }
  return Graph::build(n, triples);
}

SweepReport verify_sweep(std::size_t count, std::size_t max_n, std::uint64_t seed, const VerifyOptions& options) {
  SweepReport rep;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = random_small_graph(rng, max_n);
    const VerifyReport r = verify_graph(g, options);
    ++rep.graphs;
    if (!r.invariants_ok) ++rep.invariant_failures;
    if (r.bound_checked && !r.bound_ok) ++rep.bound_violations;
    if (r.optimal_weight && *r.optimal_weight > 0.0) {
      rep.min_ratio = std::min(rep.min_ratio, r.cover_weight / *r.optimal_weight);
    }
    if (!r.ok() && rep.first_failures.size() < 5) {
      rep.first_failures.push_back("graph " + std::to_string(i) + ": " + r.failures.front());
    }
  }
  return rep;
}

}  // namespace pathcover
