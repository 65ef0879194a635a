#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

/// Sort key: descending weight, ties by ascending edge id. Total order.
struct EdgeKey {
  double weight;
  EdgeId id;
};

[[nodiscard]] inline bool scans_before(const EdgeKey& a, const EdgeKey& b) noexcept {
  if (a.weight != b.weight) return a.weight > b.weight;
  return a.id < b.id;
}

/// Edge ids in descending weight order, ties broken by ascending edge id.
class SortedEdgeSequence {
 public:
  explicit SortedEdgeSequence(const Graph& g);

  [[nodiscard]] std::span<const EdgeId> order() const noexcept { return order_; }
  [[nodiscard]] std::size_t size() const noexcept { return order_.size(); }
  [[nodiscard]] bool empty() const noexcept { return order_.empty(); }

 private:
  std::vector<EdgeId> order_;
};

/// Intrusive doubly-linked view over a SortedEdgeSequence.
///
/// Links are indexed by edge id, so a vertex's incidence list in the Graph
/// doubles as its list of handles into the sequence. Unlinking is O(1) and an
/// unlinked edge is never reached again by iteration. Consumed (popped) edges
/// count as not live.
class LiveEdgeList {
 public:
  static constexpr EdgeId kNil = Graph::kNoEdge;

  LiveEdgeList(const SortedEdgeSequence& seq, std::size_t edge_count);

  [[nodiscard]] bool empty() const noexcept { return head_ == kNil; }
  [[nodiscard]] EdgeId front() const noexcept { return head_; }
  [[nodiscard]] bool live(EdgeId id) const noexcept { return links_[id].prev != kDead; }

  /// Removes and returns the first live edge. Precondition: !empty().
  EdgeId pop_front() noexcept {
    const EdgeId id = head_;
    head_ = links_[id].next;
    if (head_ != kNil) links_[head_].prev = kNil;
    links_[id].prev = kDead;
    return id;
  }

  /// Unlinks a live edge. Precondition: live(id).
  void unlink(EdgeId id) noexcept {
    Link& l = links_[id];
    if (l.prev != kNil) {
      links_[l.prev].next = l.next;
    } else {
      head_ = l.next;
    }
    if (l.next != kNil) links_[l.next].prev = l.prev;
    l.prev = kDead;
  }

  /// Live edge ids in sequence order; O(live count).
  [[nodiscard]] std::vector<EdgeId> snapshot() const;

 private:
  static constexpr EdgeId kDead = kNil - 1;

  struct Link {
    EdgeId prev = kDead;
    EdgeId next = kNil;
  };

  std::vector<Link> links_;
  EdgeId head_ = kNil;
};

/// Lazily ordered edge sequence with O(1) removal.
///
/// Construction distributes the edges into key-range buckets of roughly
/// kBucketTarget edges, split at evenly spaced sample quantiles. A bucket
/// is sorted only when the scan reaches it, and edges removed before then
/// are dropped from it without ever being compared. Iteration order over
/// pending edges is identical to SortedEdgeSequence.
class BucketedEdgeSequence {
 public:
  static constexpr std::size_t kBucketTarget = 4096;
  static constexpr std::size_t kMaxBuckets = 1024;

  explicit BucketedEdgeSequence(const Graph& g, std::size_t bucket_target = kBucketTarget);

  [[nodiscard]] std::size_t bucket_count() const noexcept { return bounds_.size() - 1; }

  /// True when the edge has been neither consumed nor removed.
  [[nodiscard]] bool pending(EdgeId id) const noexcept { return state_[id] == kPending; }

  /// Next pending edge in scan order, marking it consumed. Returns false at
  /// the end.
  bool next(EdgeId& out) {
    for (;;) {
      while (cursor_ != end_) {
        // The caller reads the edge record right after; start both loads early.
        if (cursor_ + kLookahead < end_) {
          const EdgeId ahead = keys_[cursor_ + kLookahead].id;
          __builtin_prefetch(&state_[ahead]);
          __builtin_prefetch(&edges_[ahead]);
        }
        const EdgeId id = keys_[cursor_++].id;
        if (state_[id] == kPending) {
          state_[id] = kConsumed;
          out = id;
          return true;
        }
      }
      if (!open_next_bucket()) return false;
    }
  }

  /// Removes a pending edge. Precondition: pending(id).
  void remove(EdgeId id) noexcept {
    state_[id] = kRemoved;
    ++removed_;
  }

  [[nodiscard]] std::size_t removed_count() const noexcept { return removed_; }

 private:
  static constexpr std::uint8_t kPending = 0;
  static constexpr std::uint8_t kConsumed = 1;
  static constexpr std::uint8_t kRemoved = 2;
  static constexpr std::size_t kLookahead = 16;

  bool open_next_bucket();

  std::span<const Edge> edges_;      // prefetch target only
  std::vector<EdgeKey> keys_;        // bucket-major; each bucket sorted on open
  std::vector<std::size_t> bounds_;  // bucket b spans [bounds_[b], bounds_[b+1])
  std::vector<std::uint8_t> state_;  // per edge id
  std::size_t next_bucket_ = 0;
  std::size_t cursor_ = 0;
  std::size_t end_ = 0;
  std::size_t removed_ = 0;
};

}  // namespace pathcover
