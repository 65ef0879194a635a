#include "pathcover/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace pathcover {

namespace {

// Branch and bound over a linear-forest edge set. partner_[x] is the far
// endpoint of the path ending at x (x itself when x is free); an edge
// between two endpoints closes a cycle exactly when they are partners.
class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.vertex_count()), deg_(n_, 0), partner_(n_) {
    std::iota(partner_.begin(), partner_.end(), VertexId{0});
    order_.resize(g.edge_count());
    std::iota(order_.begin(), order_.end(), EdgeId{0});
    std::sort(order_.begin(), order_.end(), [&g](EdgeId a, EdgeId b) {
      if (g.edge(a).weight != g.edge(b).weight) return g.edge(a).weight > g.edge(b).weight;
      return a < b;
    });
    prefix_.assign(order_.size() + 1, 0.0);
    for (std::size_t i = 0; i < order_.size(); ++i) prefix_[i + 1] = prefix_[i] + g.edge(order_[i]).weight;
  }

  void run() { descend(0); }

  [[nodiscard]] double best_weight() const { return best_; }
  [[nodiscard]] const std::vector<EdgeId>& best_edges() const { return best_edges_; }

 private:
  void descend(std::size_t i) {
    if (weight_ > best_) {
      best_ = weight_;
      best_edges_ = chosen_;
    }
    if (i == order_.size()) return;

    // At most n-1-|chosen| more edges fit in a linear forest; the heaviest
    // remaining ones are next in order.
    const std::size_t room = n_ - 1 - chosen_.size();
    const std::size_t take = std::min(order_.size() - i, room);
    if (weight_ + (prefix_[i + take] - prefix_[i]) <= best_) return;

    const EdgeId id = order_[i];
    const Edge& e = g_.edge(id);
    if (deg_[e.u] < 2 && deg_[e.v] < 2 && partner_[e.u] != e.v) {
      const VertexId pu = partner_[e.u];
      const VertexId pv = partner_[e.v];
      ++deg_[e.u];
      ++deg_[e.v];
      partner_[pu] = pv;
      partner_[pv] = pu;
      chosen_.push_back(id);
      weight_ += e.weight;

      descend(i + 1);

      weight_ -= e.weight;
      chosen_.pop_back();
      partner_[pu] = e.u;
      partner_[pv] = e.v;
      --deg_[e.u];
      --deg_[e.v];
    }
    descend(i + 1);
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint8_t> deg_;
  std::vector<VertexId> partner_;
  std::vector<EdgeId> order_;
  std::vector<double> prefix_;
  std::vector<EdgeId> chosen_;
  double weight_ = 0.0;
  double best_ = 0.0;
  std::vector<EdgeId> best_edges_;
};

}  // namespace

OptimalCover optimal_cover_bruteforce(const Graph& g, std::size_t limit) {
  if (g.vertex_count() > limit) {
    throw OracleError(OracleError::Kind::TooLarge, "oracle limited to " + std::to_string(limit) +
                                                       " vertices, graph has " +
                                                       std::to_string(g.vertex_count()));
  }
  OptimalCover out;
  if (g.vertex_count() == 0) return out;
  Search search(g);
  search.run();
  out.cover = PathCover::from_edges(g, search.best_edges());
  out.weight = out.cover.total_weight;
  return out;
}

EdgeClassification classify_edges(const Graph& g, const PathCover& cover, const OptimalCover& opt) {
  if (const auto r = validate_cover(g, cover); !r) {
    throw OracleError(OracleError::Kind::InvalidCover, "cover invalid: " + r.violation);
  }
  if (const auto r = validate_cover(g, opt.cover); !r) {
    throw OracleError(OracleError::Kind::InvalidCover, "optimal cover invalid: " + r.violation);
  }

  EdgeClassification out;
  out.d_a.assign(g.vertex_count(), 0);
  std::vector<bool> in_cover(g.edge_count(), false);
  for (EdgeId id : cover.edge_ids) {
    in_cover[id] = true;
    ++out.d_a[g.edge(id).u];
    ++out.d_a[g.edge(id).v];
  }
  for (EdgeId id : opt.cover.edge_ids) {
    const Edge& e = g.edge(id);
    const std::uint8_t du = out.d_a[e.u];
    const std::uint8_t dv = out.d_a[e.v];
    if (in_cover[id]) {
      out.e1.push_back(id);
    } else if (du == 1 && dv == 1) {
      out.e2.push_back(id);
    } else if (std::max(du, dv) == 2) {
      out.e3.push_back(id);
    } else {
      throw OracleError(OracleError::Kind::InvalidCover,
                        "edge " + std::to_string(id) + " of OPT has an endpoint uncovered by the cover");
    }
  }
  return out;
}

}  // namespace pathcover
