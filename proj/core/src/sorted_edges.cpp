#include "pathcover/sorted_edges.hpp"

#include <algorithm>
#include <cstring>

namespace pathcover {

namespace {

// For positive weights, ~bits(w) increases along the scan order.
std::uint64_t weight_rank(double w) noexcept {
  std::uint64_t bits = 0;
  std::memcpy(&bits, &w, sizeof bits);
  return ~bits;
}

// Maps a key to its bucket: the number of splitters that scan no later than
// it. A table over the high bits of weight_rank narrows each lookup to the
// splitters sharing the key's digit. Keys outside the splitter range clamp
// to the first or last digit, whose search still lands on 0 or the end.
class SplitterIndex {
 public:
  explicit SplitterIndex(std::vector<EdgeKey> splitters) : splitters_(std::move(splitters)) {
    if (splitters_.empty()) return;
    lo_ = weight_rank(splitters_.front().weight);
    const std::uint64_t hi = weight_rank(splitters_.back().weight);
    while (((hi - lo_) >> shift_) >= kDigits) ++shift_;
    last_ = static_cast<std::size_t>((hi - lo_) >> shift_);
    first_.assign(last_ + 2, 0);
    for (const EdgeKey& k : splitters_) ++first_[digit(k.weight) + 1];
    for (std::size_t d = 1; d < first_.size(); ++d) first_[d] += first_[d - 1];
  }

  std::size_t operator()(const EdgeKey& key) const {
    if (splitters_.empty()) return 0;
    const std::size_t d = digit(key.weight);
    const auto begin = splitters_.begin() + first_[d];
    const auto end = splitters_.begin() + first_[d + 1];
    return static_cast<std::size_t>(std::upper_bound(begin, end, key, scans_before) - splitters_.begin());
  }

 private:
  static constexpr std::uint64_t kDigits = 1 << 16;

  std::size_t digit(double w) const noexcept {
    const std::uint64_t r = weight_rank(w);
    if (r <= lo_) return 0;
    return std::min(static_cast<std::size_t>((r - lo_) >> shift_), last_);
  }

  std::vector<EdgeKey> splitters_;
  std::vector<std::uint32_t> first_;  // first_[d]: splitters with a smaller digit
  std::uint64_t lo_ = 0;
  std::size_t last_ = 0;
  unsigned shift_ = 0;
};

}  // namespace

SortedEdgeSequence::SortedEdgeSequence(const Graph& g) {
  const auto edges = g.edges();
  std::vector<EdgeKey> keys(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) keys[i] = EdgeKey{edges[i].weight, edges[i].id};
  std::sort(keys.begin(), keys.end(), scans_before);
  order_.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) order_[i] = keys[i].id;
}

LiveEdgeList::LiveEdgeList(const SortedEdgeSequence& seq, std::size_t edge_count)
    : links_(edge_count) {
  const auto order = seq.order();
  EdgeId prev = kNil;
  for (EdgeId id : order) {
    links_[id].prev = prev;
    if (prev != kNil) links_[prev].next = id;
    prev = id;
  }
  if (prev != kNil) links_[prev].next = kNil;
  head_ = order.empty() ? kNil : order.front();
}

std::vector<EdgeId> LiveEdgeList::snapshot() const {
  std::vector<EdgeId> out;
  for (EdgeId id = head_; id != kNil; id = links_[id].next) out.push_back(id);
  return out;
}

BucketedEdgeSequence::BucketedEdgeSequence(const Graph& g, std::size_t bucket_target)
    : edges_(g.edges()), state_(g.edge_count(), kPending) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t target = std::max<std::size_t>(bucket_target, 1);
  const std::size_t buckets = std::clamp<std::size_t>((m + target - 1) / target, 1, kMaxBuckets);

  // Splitters at evenly spaced quantiles of an evenly spaced sample.
  std::vector<EdgeKey> splitters;
  if (buckets > 1) {
    const std::size_t samples = std::min(m, 32 * buckets);
    std::vector<EdgeKey> sample(samples);
    for (std::size_t i = 0; i < samples; ++i) {
      const Edge& e = edges[i * m / samples];
      sample[i] = EdgeKey{e.weight, e.id};
    }
    std::sort(sample.begin(), sample.end(), scans_before);
    splitters.reserve(buckets - 1);
    for (std::size_t b = 1; b < buckets; ++b) splitters.push_back(sample[b * samples / buckets]);
  }

  const SplitterIndex bucket_index(std::move(splitters));
  std::vector<std::uint16_t> bucket_of(m);
  std::vector<std::size_t> bounds(buckets + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const EdgeKey key{edges[i].weight, edges[i].id};
    const std::size_t b = bucket_index(key);
    bucket_of[i] = static_cast<std::uint16_t>(b);
    ++bounds[b + 1];
  }
  for (std::size_t b = 0; b < buckets; ++b) bounds[b + 1] += bounds[b];

  keys_.resize(m);
  std::vector<std::size_t> fill(bounds.begin(), bounds.end() - 1);
  for (std::size_t i = 0; i < m; ++i) keys_[fill[bucket_of[i]]++] = EdgeKey{edges[i].weight, edges[i].id};
  bounds_ = std::move(bounds);
}

bool BucketedEdgeSequence::open_next_bucket() {
  if (next_bucket_ + 1 >= bounds_.size()) return false;
  auto first = keys_.begin() + static_cast<std::ptrdiff_t>(bounds_[next_bucket_]);
  auto last = keys_.begin() + static_cast<std::ptrdiff_t>(bounds_[next_bucket_ + 1]);
  ++next_bucket_;
  // Unopened buckets hold only pending or removed edges.
  if (removed_ > 0) {
    last = std::remove_if(first, last, [this](const EdgeKey& k) { return state_[k.id] != kPending; });
  }
  std::sort(first, last, scans_before);
  cursor_ = static_cast<std::size_t>(first - keys_.begin());
  end_ = static_cast<std::size_t>(last - keys_.begin());
  return true;
}

}  // namespace pathcover
