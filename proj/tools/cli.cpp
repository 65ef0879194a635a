#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "pathcover/bench.hpp"

namespace pathcover::cli {

namespace {

struct SourceFlags {
  std::string family = "ring";
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> degree{4};
  std::vector<double> coef{2.0};
  std::string weights = "1:10";
  std::vector<std::uint64_t> seeds{1};
  std::vector<std::string> inputs;
  std::string weight_policy = "random";
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_source_flags(CLI::App* cmd, SourceFlags& f, bool lists) {
  cmd->add_option("--family", f.family, "Graph family: ring | er")->capture_default_str();
  auto* nodes = cmd->add_option("--nodes", f.nodes, "Vertex count");
  auto* degree = cmd->add_option("--degree", f.degree, "Ring degree k (even)")->capture_default_str();
  auto* coef = cmd->add_option("--coef", f.coef, "ER coefficient c, p = c ln(n)/n")->capture_default_str();
  cmd->add_option("--weights", f.weights, "Integer weight range lo:hi")->capture_default_str();
  auto* seed = cmd->add_option("--seed", f.seeds, "RNG seed")->capture_default_str();
  auto* input = cmd->add_option("--input", f.inputs, "Edge-list file instead of a generator");
  cmd->add_option("--weight-policy", f.weight_policy, "Weights for --input: file | random | unit")
      ->capture_default_str();
  for (auto* o : {nodes, degree, coef, seed, input}) {
    o->delimiter(',');
    if (!lists) o->expected(1);
  }
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw InputError("--weights expects lo:hi, got '" + s + "'");
  try {
    return {std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw InputError("--weights expects integers lo:hi, got '" + s + "'");
  }
}

std::vector<GraphSource> build_sources(const SourceFlags& f) {
  const auto [lo, hi] = parse_range(f.weights);
  std::vector<GraphSource> out;
  if (!f.inputs.empty()) {
    const auto kind = WeightPolicy::parse_kind(f.weight_policy);
    for (const auto& path : f.inputs) {
      for (std::uint64_t seed : f.seeds) {
        GraphSource s;
        s.file = EdgeListFile{path, std::nullopt};
        s.policy = WeightPolicy{kind, lo, hi, seed};
        out.push_back(s);
        if (kind != WeightPolicy::Kind::Random) break;
      }
    }
    return out;
  }
  if (f.nodes.empty()) throw InputError("either --nodes (generator) or --input (edge list) is required");
  const Family family = parse_family(f.family);
  for (std::size_t n : f.nodes) {
    const std::size_t params = family == Family::RingLattice ? f.degree.size() : f.coef.size();
    for (std::size_t p = 0; p < params; ++p) {
      for (std::uint64_t seed : f.seeds) {
        GenSpec spec;
        spec.family = family;
        spec.n = n;
        if (family == Family::RingLattice) {
          spec.k = f.degree[p];
        } else {
          spec.c = f.coef[p];
        }
        spec.weight_lo = lo;
        spec.weight_hi = hi;
        spec.seed = seed;
        GraphSource s;
        s.gen = spec;
        out.push_back(s);
      }
    }
  }
  return out;
}

// Opens --out, or falls back to `fallback` when empty.
struct Sink {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream;

  Sink(const std::string& path, std::ostream& fallback) : stream(&fallback) {
    if (path.empty()) return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw IoError(IoError::Kind::Io, "cannot write " + path);
    stream = file.get();
  }
};

std::string edge_text(const Graph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  return "{" + std::to_string(e.u) + ", " + std::to_string(e.v) + "}";
}

int cmd_generate(const SourceFlags& f, const std::string& out_path, std::ostream& out) {
  if (!f.inputs.empty()) throw InputError("generate takes generator flags, not --input");
  const auto sources = build_sources(f);
  const SourcedGraph sg = materialize(sources.front());
  Sink sink(out_path, out);
  write_edge_list(*sink.stream, sg.graph);
  return kExitOk;
}

int cmd_bench(const SourceFlags& f, RunPlan plan, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  plan.sources = build_sources(f);
  Sink csv(out_path, out);
  std::unique_ptr<std::ofstream> trace_file;
  std::ostream* trace_stream = &err;
  if (plan.trace && !out_path.empty()) {
    trace_file = std::make_unique<std::ofstream>(out_path + ".trace.csv");
    if (!*trace_file) throw IoError(IoError::Kind::Io, "cannot write " + out_path + ".trace.csv");
    trace_stream = trace_file.get();
  }
  if (plan.trace) *trace_stream << "label,algorithm,step,edge,u,v,weight,action\n";

  std::size_t record_no = 0;
  TraceSink sink = [&](const BenchRecord& rec, const Graph& g, const CoverTrace& t1, const CoverTrace& t2) {
    auto dump = [&](const char* algo, const CoverTrace& t) {
      std::size_t step = 0;
      for (const auto& ev : t.events) {
        const Edge& e = g.edge(ev.edge);
        *trace_stream << rec.label << '#' << record_no << ',' << algo << ',' << step++ << ',' << ev.edge << ','
                      << e.u << ',' << e.v << ',' << format_g6(e.weight) << ',' << to_string(ev.action) << '\n';
      }
    };
    dump("baseline", t1);
    dump("optimized", t2);
  };

  std::vector<BenchRecord> records;
  for (const auto& source : plan.sources) {
    records.push_back(bench_graph(materialize(source), plan, sink));
    ++record_no;
    const auto& r = records.back();
    err << r.label << " n=" << r.n << " m=" << r.m << " algo1=" << format_g6(r.t_algo1_seconds)
        << "s algo2=" << format_g6(r.t_algo2_seconds) << "s ratio=" << format_g6(r.time_ratio) << '\n';
  }
  write_bench_csv(*csv.stream, records);
  return kExitOk;
}

int cmd_verify(const SourceFlags& f, const VerifyOptions& opts, std::size_t sweep, std::size_t max_nodes,
               std::ostream& out) {
  if (sweep > 0) {
    const SweepReport rep = verify_sweep(sweep, max_nodes, f.seeds.front(), opts);
    out << "graphs: " << rep.graphs << '\n'
        << "invariant failures: " << rep.invariant_failures << '\n'
        << "bound violations: " << rep.bound_violations << '\n'
        << "min cover/OPT: " << format_g6(rep.min_ratio) << '\n';
    for (const auto& msg : rep.first_failures) out << "  " << msg << '\n';
    return rep.invariant_failures == 0 && rep.bound_violations == 0 ? kExitOk : kExitVerificationFailed;
  }

  const SourcedGraph sg = materialize(build_sources(f).front());
  const Graph& g = sg.graph;
  const VerifyReport rep = verify_graph(g, opts);
  out << "graph: " << sg.spec << '\n'
      << "N=" << rep.n << " H=" << rep.h << " K=" << rep.k << " weight=" << format_g6(rep.cover_weight) << '\n'
      << "invariants: " << (rep.invariants_ok ? "pass" : "FAIL") << '\n';
  for (const auto& msg : rep.failures) out << "  " << msg << '\n';
  if (!rep.bound_checked) {
    out << rep.notice << '\n';
  } else {
    const double opt = *rep.optimal_weight;
    out << "OPT=" << format_g6(opt) << " cover/OPT=" << (opt > 0 ? format_g6(rep.cover_weight / opt) : "n/a")
        << " bound: " << (rep.bound_ok ? "pass" : "FAIL") << '\n';
    if (rep.classification) {
      auto list = [&](const char* name, const std::vector<EdgeId>& ids) {
        out << name << ':';
        for (EdgeId id : ids) out << ' ' << edge_text(g, id);
        out << '\n';
      };
      list("E1", rep.classification->e1);
      list("E2", rep.classification->e2);
      list("E3", rep.classification->e3);
    }
  }
  return rep.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_stats(const SourceFlags& f, const std::string& out_path, std::ostream& out) {
  const SourcedGraph sg = materialize(build_sources(f).front());
  const DegreeStats s = degree_stats(sg.graph);
  out << "n=" << s.n << " m=" << s.m << " avg_degree=" << format_g6(s.avg_degree) << '\n';
  if (s.skewness) {
    out << "skewness=" << format_g6(*s.skewness) << " kurtosis_excess=" << format_g6(*s.kurtosis_excess) << '\n';
  } else {
    out << "skewness=undefined kurtosis_excess=undefined (zero degree variance)\n";
  }
  if (!out_path.empty()) {
    Sink sink(out_path, out);
    write_histogram_csv(*sink.stream, s);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy maximum-weight path cover: generators, benchmarks, verification"};
  app.name("pathcover");
  app.require_subcommand(1);

  SourceFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Write a generated graph as a weighted edge list");
  add_source_flags(gen, gen_flags, false);
  gen->add_option("--out", gen_out, "Output edge-list path (default stdout)");

  SourceFlags bench_flags;
  RunPlan plan;
  std::string bench_out;
  std::string bench_sequence = "bucketed";
  auto* bench = app.add_subcommand("bench", "Time both algorithms and emit benchmark CSV");
  add_source_flags(bench, bench_flags, true);
  bench->add_option("--reps", plan.repetitions, "Timed repetitions (median reported)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--warmup", plan.warmup, "Untimed warmup runs")->capture_default_str();
  bench->add_flag("--verify", plan.verify, "Validate covers and check equivalence");
  bench->add_flag("--trace", plan.trace, "Write per-edge traces (<out>.trace.csv or stderr)");
  bench->add_option("--sequence", bench_sequence, "Edge ordering: bucketed | eager")->capture_default_str();
  bench->add_option("--out", bench_out, "Output CSV path (default stdout)");

  SourceFlags verify_flags;
  VerifyOptions verify_opts;
  std::size_t sweep = 0;
  std::size_t max_nodes = 10;
  auto* verify = app.add_subcommand("verify", "Check cover invariants and the 1/2 bound");
  add_source_flags(verify, verify_flags, false);
  verify->add_option("--oracle-limit", verify_opts.oracle_limit, "Largest n for the exact oracle")
      ->capture_default_str();
  verify->add_flag("--require-bound", verify_opts.require_bound, "Fail if the graph exceeds the oracle limit");
  verify->add_option("--sweep", sweep, "Check this many random small graphs instead");
  verify->add_option("--max-nodes", max_nodes, "Largest n in a sweep")->capture_default_str();

  SourceFlags stats_flags;
  std::string stats_out;
  auto* stats = app.add_subcommand("stats", "Degree statistics and histogram CSV");
  add_source_flags(stats, stats_flags, false);
  stats->add_option("--out", stats_out, "Histogram CSV path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gen->parsed()) return cmd_generate(gen_flags, gen_out, out);
    if (bench->parsed()) {
      plan.sequence = parse_sequence_mode(bench_sequence);
      return cmd_bench(bench_flags, plan, bench_out, out, err);
    }
    if (verify->parsed()) return cmd_verify(verify_flags, verify_opts, sweep, max_nodes, out);
    if (stats->parsed()) return cmd_stats(stats_flags, stats_out, out);
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace pathcover::cli
