#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

class IoError : public std::runtime_error {
 public:
  enum class Kind { Io, Parse, EmptyFile };

  IoError(Kind kind, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  /// 1-based line number for parse errors, 0 otherwise.
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// SNAP-style edge list: fields separated by a run of spaces/tabs or by a
/// single comma, '#' or '%' comment lines, 2 fields (unweighted) or 3
/// (weighted). When `weighted` is unset it is taken from the first data line.
/// A first data line whose ids are not integers is skipped as a header.
struct EdgeListFile {
  std::filesystem::path path;
  std::optional<bool> weighted;
};

struct WeightPolicy {
  enum class Kind { UseFile, Random, Unit };

  Kind kind = Kind::Random;
  std::int64_t lo = 1;
  std::int64_t hi = 10;
  std::uint64_t seed = 1;

  /// "file", "random" or "unit"; bounds and seed come from the caller.
  static Kind parse_kind(const std::string& s);
  [[nodiscard]] std::string echo() const;
};

struct LoadedGraph {
  Graph graph;
  std::vector<std::uint64_t> labels;  // external id of each dense vertex
  std::size_t data_lines = 0;
  std::size_t duplicates = 0;
  std::size_t self_loops = 0;
  bool header_skipped = false;
};

/// External ids are remapped to [0, N) in order of first appearance;
/// repeated pairs (either orientation) keep the first occurrence; self-loops
/// are dropped. Every drop is counted, so
/// edge_count + duplicates + self_loops == data_lines.
LoadedGraph load_edge_list(const EdgeListFile& file, const WeightPolicy& policy);
LoadedGraph load_edge_list(std::istream& in, const EdgeListFile& file, const WeightPolicy& policy);

/// One "u v w" line per edge, in edge id order.
void write_edge_list(std::ostream& out, const Graph& g);

/// One benchmark row. Column order of the CSV follows field order.
struct BenchRecord {
  std::string label;
  std::size_t n = 0;
  std::size_t m = 0;
  double avg_degree = 0.0;
  std::optional<double> skewness;
  std::optional<double> kurtosis_excess;
  double t_algo1_seconds = 0.0;
  double t_algo2_seconds = 0.0;
  double time_ratio = 0.0;
  double cover_weight_1 = 0.0;
  double cover_weight_2 = 0.0;
  std::size_t h = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::string spec;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr const char* kBenchCsvHeader =
    "label,n,m,avg_degree,skewness,kurtosis_excess,t_algo1_seconds,t_algo2_seconds,time_ratio,"
    "cover_weight_1,cover_weight_2,H,K,seed,spec";

/// Floating fields use 6 significant digits; an undefined moment is an empty
/// field. Text fields are quoted only when they contain ',', '"' or newlines.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);
void write_bench_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& path);

std::vector<BenchRecord> read_bench_csv(std::istream& in);
std::vector<BenchRecord> read_bench_csv(const std::filesystem::path& path);

/// "%.6g" rendering used by the CSV writer.
[[nodiscard]] std::string format_g6(double x);

}  // namespace pathcover
