#include "pathcover/cover.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "pathcover/sorted_edges.hpp"

namespace pathcover {

namespace {

constexpr VertexId kNone = static_cast<VertexId>(-1);

enum class Step : std::uint8_t { NewPath, AppendAtU, AppendAtV, Merge, Reject };

// Growing set of vertex-disjoint paths. Each path is a doubly-linked chain
// through nbr_; paths_ keeps its two endpoints and size. Merging relabels
// the smaller chain.
class PathBuilder {
 public:
  explicit PathBuilder(std::size_t n) : nbr_(n, {kNone, kNone}), deg_(n, 0), path_of_(n, kNone) {}

  Step offer(VertexId u, VertexId v) {
    const std::uint8_t du = deg_[u];
    const std::uint8_t dv = deg_[v];
    if (du == 0 && dv == 0) {
      path_of_[u] = path_of_[v] = static_cast<std::uint32_t>(paths_.size());
      paths_.push_back(PathInfo{u, v, 2});
      link(u, v);
      return Step::NewPath;
    }
    if (du == 1 && dv == 0) {
      append(u, v);
      return Step::AppendAtU;
    }
    if (du == 0 && dv == 1) {
      append(v, u);
      return Step::AppendAtV;
    }
    if (du == 1 && dv == 1 && path_of_[u] != path_of_[v]) {
      merge(u, v);
      return Step::Merge;
    }
    return Step::Reject;
  }

  PathCover finish(const Graph& g, std::vector<EdgeId> accepted) const {
    const std::size_t n = deg_.size();
    PathCover c;
    c.vertex_state.resize(n);
    std::vector<bool> done(n, false);
    for (VertexId v = 0; v < n; ++v) {
      if (done[v]) continue;
      const auto pid = static_cast<std::uint32_t>(c.paths.size());
      std::vector<VertexId> seq;
      if (deg_[v] == 0) {
        seq.push_back(v);
        c.vertex_state[v] = {pid, VertexPosition::Singleton};
      } else {
        const PathInfo& p = paths_[path_of_[v]];
        VertexId cur = std::min(p.end_a, p.end_b);
        VertexId prev = kNone;
        seq.reserve(p.size);
        while (cur != kNone) {
          seq.push_back(cur);
          c.vertex_state[cur] = {pid, deg_[cur] == 2 ? VertexPosition::Interior : VertexPosition::Endpoint};
          const VertexId next = nbr_[cur][0] != prev ? nbr_[cur][0] : nbr_[cur][1];
          prev = cur;
          cur = next;
        }
      }
      for (VertexId x : seq) done[x] = true;
      c.paths.push_back(std::move(seq));
    }
    std::sort(accepted.begin(), accepted.end());
    c.h = accepted.size();
    c.k = c.paths.size();
    for (EdgeId id : accepted) c.total_weight += g.edge(id).weight;
    c.edge_ids = std::move(accepted);
    return c;
  }

 private:
  struct PathInfo {
    VertexId end_a;
    VertexId end_b;
    std::uint32_t size;
  };

  void link(VertexId a, VertexId b) {
    nbr_[a][deg_[a]++] = b;
    nbr_[b][deg_[b]++] = a;
  }

  // x is an endpoint of its path, y is free.
  void append(VertexId x, VertexId y) {
    const std::uint32_t pid = path_of_[x];
    PathInfo& p = paths_[pid];
    (p.end_a == x ? p.end_a : p.end_b) = y;
    ++p.size;
    path_of_[y] = pid;
    link(x, y);
  }

  // u and v are endpoints of different paths.
  void merge(VertexId u, VertexId v) {
    std::uint32_t keep = path_of_[u];
    std::uint32_t drop = path_of_[v];
    VertexId drop_start = v;
    if (paths_[keep].size < paths_[drop].size) {
      std::swap(keep, drop);
      drop_start = u;
    }
    // Relabel before linking so the walk stays inside the dropped chain.
    VertexId prev = kNone;
    for (VertexId cur = drop_start; cur != kNone;) {
      path_of_[cur] = keep;
      const VertexId next = nbr_[cur][0] != prev ? nbr_[cur][0] : nbr_[cur][1];
      prev = cur;
      cur = next;
    }
    PathInfo& k = paths_[keep];
    const PathInfo& d = paths_[drop];
    const VertexId keep_end = drop_start == v ? u : v;
    const VertexId keep_far = k.end_a == keep_end ? k.end_b : k.end_a;
    const VertexId drop_far = d.end_a == drop_start ? d.end_b : d.end_a;
    k.end_a = keep_far;
    k.end_b = drop_far;
    k.size += d.size;
    link(u, v);
  }

  std::vector<std::array<VertexId, 2>> nbr_;
  std::vector<std::uint8_t> deg_;
  std::vector<std::uint32_t> path_of_;
  std::vector<PathInfo> paths_;
};

TraceAction action_of(Step s) {
  switch (s) {
    case Step::NewPath:
      return TraceAction::AcceptedNew;
    case Step::AppendAtU:
    case Step::AppendAtV:
      return TraceAction::AcceptedAppend;
    case Step::Merge:
      return TraceAction::AcceptedMerge;
    case Step::Reject:
      break;
  }
  return TraceAction::Rejected;
}

std::vector<EdgeId> filter(const std::vector<TraceEvent>& events, auto pred) {
  std::vector<EdgeId> out;
  for (const auto& e : events) {
    if (pred(e.action)) out.push_back(e.edge);
  }
  return out;
}

}  // namespace

std::string_view to_string(TraceAction a) noexcept {
  switch (a) {
    case TraceAction::AcceptedNew:
      return "accepted-new";
    case TraceAction::AcceptedAppend:
      return "accepted-append";
    case TraceAction::AcceptedMerge:
      return "accepted-merge";
    case TraceAction::Rejected:
      return "rejected";
    case TraceAction::Removed:
      return "removed";
  }
  return "unknown";
}

std::vector<EdgeId> CoverTrace::accepted() const {
  return filter(events, [](TraceAction a) {
    return a == TraceAction::AcceptedNew || a == TraceAction::AcceptedAppend || a == TraceAction::AcceptedMerge;
  });
}

std::vector<EdgeId> CoverTrace::rejected() const {
  return filter(events, [](TraceAction a) { return a == TraceAction::Rejected; });
}

std::vector<EdgeId> CoverTrace::removed() const {
  return filter(events, [](TraceAction a) { return a == TraceAction::Removed; });
}

std::size_t PathCover::nonsingleton_paths() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(paths.begin(), paths.end(), [](const auto& p) { return p.size() > 1; }));
}

PathCover PathCover::from_paths(const Graph& g, std::vector<std::vector<VertexId>> paths) {
  const std::size_t n = g.vertex_count();
  PathCover c;
  c.vertex_state.resize(n);
  for (std::uint32_t pid = 0; pid < paths.size(); ++pid) {
    const auto& p = paths[pid];
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] >= n) throw std::invalid_argument("path vertex " + std::to_string(p[i]) + " out of range");
      VertexPosition pos = VertexPosition::Interior;
      if (p.size() == 1) {
        pos = VertexPosition::Singleton;
      } else if (i == 0 || i + 1 == p.size()) {
        pos = VertexPosition::Endpoint;
      }
      c.vertex_state[p[i]] = {pid, pos};
      if (i == 0) continue;
      const EdgeId id = g.find_edge(p[i - 1], p[i]);
      if (id == Graph::kNoEdge) {
        throw std::invalid_argument("no edge between " + std::to_string(p[i - 1]) + " and " +
                                    std::to_string(p[i]));
      }
      c.edge_ids.push_back(id);
    }
  }
  std::sort(c.edge_ids.begin(), c.edge_ids.end());
  c.h = c.edge_ids.size();
  c.k = paths.size();
  for (EdgeId id : c.edge_ids) c.total_weight += g.edge(id).weight;
  c.paths = std::move(paths);
  return c;
}

PathCover PathCover::from_edges(const Graph& g, std::span<const EdgeId> ids) {
  const std::size_t n = g.vertex_count();
  std::vector<std::array<VertexId, 2>> nbr(n, {kNone, kNone});
  std::vector<std::uint8_t> deg(n, 0);
  std::vector<EdgeId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("edge listed twice");
  }
  for (EdgeId id : sorted) {
    if (id >= g.edge_count()) throw std::invalid_argument("edge id " + std::to_string(id) + " out of range");
    const Edge& e = g.edge(id);
    if (deg[e.u] == 2 || deg[e.v] == 2) throw std::invalid_argument("vertex degree exceeds 2");
    nbr[e.u][deg[e.u]++] = e.v;
    nbr[e.v][deg[e.v]++] = e.u;
  }

  // Walk each component from its smaller endpoint; a component without
  // endpoints is a cycle.
  std::vector<bool> done(n, false);
  std::vector<std::vector<VertexId>> paths;
  auto walk = [&](VertexId start) {
    std::vector<VertexId> seq;
    VertexId prev = kNone;
    for (VertexId cur = start; cur != kNone;) {
      seq.push_back(cur);
      done[cur] = true;
      const VertexId next = nbr[cur][0] != prev ? nbr[cur][0] : nbr[cur][1];
      prev = cur;
      cur = next;
    }
    return seq;
  };
  std::vector<std::vector<VertexId>> by_start(n);
  for (VertexId v = 0; v < n; ++v) {
    if (done[v] || deg[v] == 2) continue;
    by_start[v] = walk(v);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!done[v]) throw std::invalid_argument("edges contain a cycle");
  }
  // Order paths by smallest vertex to match the scan output.
  std::vector<std::pair<VertexId, VertexId>> order;  // (min vertex, start)
  for (VertexId v = 0; v < n; ++v) {
    if (!by_start[v].empty()) {
      order.emplace_back(*std::min_element(by_start[v].begin(), by_start[v].end()), v);
    }
  }
  std::sort(order.begin(), order.end());
  paths.reserve(order.size());
  for (const auto& [lo, start] : order) paths.push_back(std::move(by_start[start]));
  return from_paths(g, std::move(paths));
}

namespace {

// Shared scan. Seq::next(id) yields pending edges in order; OnInterior is
// called with each vertex that just became interior.
template <typename Next, typename OnInterior>
CoverResult scan(const Graph& g, TraceMode trace, Next next, OnInterior on_interior,
                 std::optional<CoverTrace>& log) {
  PathBuilder builder(g.vertex_count());
  std::vector<EdgeId> accepted;
  accepted.reserve(g.vertex_count());
  if (trace == TraceMode::On) log.emplace();

  EdgeId id = 0;
  while (next(id)) {
    const Edge& e = g.edge(id);
    const Step step = builder.offer(e.u, e.v);
    if (step != Step::Reject) accepted.push_back(id);
    if (log) log->events.push_back({id, action_of(step)});
    switch (step) {
      case Step::AppendAtU:
        on_interior(e.u);
        break;
      case Step::AppendAtV:
        on_interior(e.v);
        break;
      case Step::Merge:
        on_interior(e.v);
        on_interior(e.u);
        break;
      case Step::NewPath:
      case Step::Reject:
        break;
    }
  }
  return {builder.finish(g, std::move(accepted)), std::nullopt};
}

CoverResult finish_with(CoverResult r, std::optional<CoverTrace>& log) {
  r.trace = std::move(log);
  return r;
}

}  // namespace

std::string_view to_string(SequenceMode m) noexcept {
  return m == SequenceMode::Bucketed ? "bucketed" : "eager";
}

SequenceMode parse_sequence_mode(std::string_view s) {
  if (s == "bucketed") return SequenceMode::Bucketed;
  if (s == "eager") return SequenceMode::Eager;
  throw std::invalid_argument("unknown sequence mode '" + std::string(s) + "'");
}

CoverResult cover_baseline(const Graph& g, TraceMode trace, SequenceMode sequence) {
  std::optional<CoverTrace> log;
  auto nothing = [](VertexId) {};
  if (sequence == SequenceMode::Eager) {
    const SortedEdgeSequence seq(g);
    const auto order = seq.order();
    std::size_t pos = 0;
    auto next = [&](EdgeId& id) {
      if (pos == order.size()) return false;
      id = order[pos++];
      return true;
    };
    return finish_with(scan(g, trace, next, nothing, log), log);
  }
  BucketedEdgeSequence seq(g);
  auto next = [&](EdgeId& id) { return seq.next(id); };
  return finish_with(scan(g, trace, next, nothing, log), log);
}

CoverResult cover_optimized(const Graph& g, TraceMode trace, SequenceMode sequence) {
  std::optional<CoverTrace> log;
  if (sequence == SequenceMode::Eager) {
    const SortedEdgeSequence seq(g);
    LiveEdgeList live(seq, g.edge_count());
    auto next = [&](EdgeId& id) {
      if (live.empty()) return false;
      id = live.pop_front();
      return true;
    };
    // x is interior: none of its pending edges can ever be accepted.
    auto purge = [&](VertexId x) {
      for (EdgeId e : g.incident(x)) {
        if (!live.live(e)) continue;
        live.unlink(e);
        if (log) log->events.push_back({e, TraceAction::Removed});
      }
    };
    return finish_with(scan(g, trace, next, purge, log), log);
  }
  BucketedEdgeSequence seq(g);
  auto next = [&](EdgeId& id) { return seq.next(id); };
  auto purge = [&](VertexId x) {
    for (EdgeId e : g.incident(x)) {
      if (!seq.pending(e)) continue;
      seq.remove(e);
      if (log) log->events.push_back({e, TraceAction::Removed});
    }
  };
  return finish_with(scan(g, trace, next, purge, log), log);
}

double cover_weight(const PathCover& c) noexcept { return c.total_weight; }

ValidationReport validate_cover(const Graph& g, const PathCover& c) {
  const std::size_t n = g.vertex_count();
  ValidationReport r;
  r.h = c.edge_ids.size();
  r.k = c.paths.size();
  r.nonsingleton_k = c.nonsingleton_paths();
  for (EdgeId id : c.edge_ids) {
    if (id < g.edge_count()) r.weight += g.edge(id).weight;
  }

  auto fail = [&r](std::string msg) {
    r.valid = false;
    r.violation = std::move(msg);
    return r;
  };

  constexpr std::uint32_t kUnseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> owner(n, kUnseen);
  std::vector<EdgeId> used;
  used.reserve(r.h);
  for (std::uint32_t pid = 0; pid < c.paths.size(); ++pid) {
    const auto& p = c.paths[pid];
    if (p.empty()) return fail("empty path " + std::to_string(pid));
    for (std::size_t i = 0; i < p.size(); ++i) {
      const VertexId v = p[i];
      if (v >= n) return fail("vertex " + std::to_string(v) + " out of range");
      if (owner[v] == pid) return fail("path not simple: vertex " + std::to_string(v) + " repeats");
      if (owner[v] != kUnseen) return fail("vertex multiply covered: " + std::to_string(v));
      owner[v] = pid;
      if (i == 0) continue;
      const EdgeId id = g.find_edge(p[i - 1], v);
      if (id == Graph::kNoEdge) {
        return fail("consecutive vertices " + std::to_string(p[i - 1]) + " and " + std::to_string(v) +
                    " not joined by an edge");
      }
      used.push_back(id);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (owner[v] == kUnseen) return fail("vertex uncovered: " + std::to_string(v));
  }

  std::sort(used.begin(), used.end());
  if (used != c.edge_ids) return fail("edge set inconsistent with paths");
  if (c.h != r.h || c.k != r.k) return fail("stored H/K disagree with paths");
  if (r.h + r.k != n) return fail("H != N - K");
  if (std::abs(c.total_weight - r.weight) > 1e-9 * std::max(1.0, std::abs(r.weight))) {
    return fail("total weight inconsistent with edge set");
  }
  if (c.vertex_state.size() != n) return fail("vertex state size mismatch");
  for (VertexId v = 0; v < n; ++v) {
    const auto& p = c.paths[owner[v]];
    VertexPosition expect = VertexPosition::Interior;
    if (p.size() == 1) {
      expect = VertexPosition::Singleton;
    } else if (p.front() == v || p.back() == v) {
      expect = VertexPosition::Endpoint;
    }
    if (c.vertex_state[v] != VertexState{owner[v], expect}) {
      return fail("vertex state inconsistent for " + std::to_string(v));
    }
  }
  return r;
}

}  // namespace pathcover
