#include "pathcover/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "pathcover/random.hpp"

namespace pathcover {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  if (line.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      out.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

IoError parse_error(std::size_t line, const std::string& msg) {
  return IoError(IoError::Kind::Parse, "line " + std::to_string(line) + ": " + msg, line);
}

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

void write_text_field(std::ostream& out, const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

// Splits one CSV record; quoted fields may contain commas and doubled quotes.
std::vector<std::string> split_csv(const std::string& line, std::size_t line_no) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw parse_error(line_no, "unterminated quoted field");
  out.push_back(std::move(cur));
  return out;
}

}  // namespace

WeightPolicy::Kind WeightPolicy::parse_kind(const std::string& s) {
  if (s == "file" || s == "use-file") return Kind::UseFile;
  if (s == "random") return Kind::Random;
  if (s == "unit") return Kind::Unit;
  throw std::invalid_argument("unknown weight policy '" + s + "' (expected file, random or unit)");
}

std::string WeightPolicy::echo() const {
  switch (kind) {
    case Kind::UseFile:
      return "weights=file";
    case Kind::Unit:
      return "weights=unit";
    case Kind::Random:
      break;
  }
  return "weights=random:" + std::to_string(lo) + ":" + std::to_string(hi) + ";seed=" + std::to_string(seed);
}

LoadedGraph load_edge_list(const EdgeListFile& file, const WeightPolicy& policy) {
  std::ifstream in(file.path);
  if (!in) throw IoError(IoError::Kind::Io, "cannot open " + file.path.string());
  return load_edge_list(in, file, policy);
}

LoadedGraph load_edge_list(std::istream& in, const EdgeListFile& file, const WeightPolicy& policy) {
  if (policy.kind == WeightPolicy::Kind::Random && (policy.lo < 1 || policy.lo > policy.hi)) {
    throw std::invalid_argument("random weight bounds must satisfy 1 <= lo <= hi");
  }

  LoadedGraph out;
  std::unordered_map<std::uint64_t, VertexId> dense;
  std::unordered_set<std::uint64_t> seen_pairs;
  std::vector<EdgeTriple> triples;
  std::optional<bool> weighted = file.weighted;
  Rng rng(policy.seed);

  auto vertex_of = [&](std::uint64_t label) {
    auto [it, inserted] = dense.try_emplace(label, static_cast<VertexId>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };

  std::string raw;
  std::size_t line_no = 0;
  bool first_data = true;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == '%') continue;

    const auto fields = split_fields(line);
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    const bool ids_ok = fields.size() >= 2 && parse_number(fields[0], a) && parse_number(fields[1], b);
    if (first_data && !ids_ok && fields.size() >= 2) {
      out.header_skipped = true;
      first_data = false;
      continue;
    }
    first_data = false;

    if (!weighted) weighted = fields.size() == 3;
    const std::size_t expect = *weighted ? 3 : 2;
    if (fields.size() != expect) {
      throw parse_error(line_no, "expected " + std::to_string(expect) + " fields, found " +
                                     std::to_string(fields.size()));
    }
    if (!ids_ok) throw parse_error(line_no, "vertex ids must be non-negative integers");
    double file_weight = 1.0;
    if (*weighted && (!parse_number(fields[2], file_weight) || !(file_weight > 0.0) || !std::isfinite(file_weight))) {
      throw parse_error(line_no, "weight must be a positive number");
    }
    ++out.data_lines;

    const VertexId u = vertex_of(a);
    const VertexId v = vertex_of(b);
    if (u == v) {
      ++out.self_loops;
      continue;
    }
    if (!seen_pairs.insert(pair_key(u, v)).second) {
      ++out.duplicates;
      continue;
    }
    double w = 1.0;
    switch (policy.kind) {
      case WeightPolicy::Kind::UseFile:
        if (!*weighted) throw parse_error(line_no, "weight policy 'file' needs a weighted edge list");
        w = file_weight;
        break;
      case WeightPolicy::Kind::Random:
        w = static_cast<double>(rng.uniform_int(policy.lo, policy.hi));
        break;
      case WeightPolicy::Kind::Unit:
        break;
    }
    triples.push_back({u, v, w});
  }
  if (in.bad()) throw IoError(IoError::Kind::Io, "read failure");
  if (out.data_lines == 0) throw IoError(IoError::Kind::EmptyFile, "edge list has no data lines");

  out.graph = Graph::build(out.labels.size(), triples);
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof buf, "%u %u %.17g\n", e.u, e.v, e.weight);
    out << buf;
  }
}

std::string format_g6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchCsvHeader << '\n';
  auto opt = [](const std::optional<double>& x) { return x ? format_g6(*x) : std::string(); };
  for (const auto& r : records) {
    write_text_field(out, r.label);
    out << ',' << r.n << ',' << r.m << ',' << format_g6(r.avg_degree) << ',' << opt(r.skewness) << ','
        << opt(r.kurtosis_excess) << ',' << format_g6(r.t_algo1_seconds) << ',' << format_g6(r.t_algo2_seconds)
        << ',' << format_g6(r.time_ratio) << ',' << format_g6(r.cover_weight_1) << ','
        << format_g6(r.cover_weight_2) << ',' << r.h << ',' << r.k << ',' << r.seed << ',';
    write_text_field(out, r.spec);
    out << '\n';
  }
}

void write_bench_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError(IoError::Kind::Io, "cannot write " + path.string());
  write_bench_csv(out, records);
  if (!out) throw IoError(IoError::Kind::Io, "write failure on " + path.string());
}

std::vector<BenchRecord> read_bench_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw IoError(IoError::Kind::EmptyFile, "bench CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kBenchCsvHeader) throw parse_error(1, "unexpected bench CSV header");

  std::vector<BenchRecord> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv(line, line_no);
    if (f.size() != 15) throw parse_error(line_no, "expected 15 fields, found " + std::to_string(f.size()));

    auto num = [&](const std::string& s, auto& dst) {
      if (!parse_number(std::string_view(s), dst)) throw parse_error(line_no, "bad number '" + s + "'");
    };
    auto opt = [&](const std::string& s, std::optional<double>& dst) {
      if (s.empty()) {
        dst.reset();
        return;
      }
      double x = 0.0;
      num(s, x);
      dst = x;
    };
    BenchRecord r;
    r.label = f[0];
    num(f[1], r.n);
    num(f[2], r.m);
    num(f[3], r.avg_degree);
    opt(f[4], r.skewness);
    opt(f[5], r.kurtosis_excess);
    num(f[6], r.t_algo1_seconds);
    num(f[7], r.t_algo2_seconds);
    num(f[8], r.time_ratio);
    num(f[9], r.cover_weight_1);
    num(f[10], r.cover_weight_2);
    num(f[11], r.h);
    num(f[12], r.k);
    num(f[13], r.seed);
    r.spec = f[14];
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BenchRecord> read_bench_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(IoError::Kind::Io, "cannot open " + path.string());
  return read_bench_csv(in);
}

}  // namespace pathcover
