#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "semitree/analysis.hpp"
#include "semitree/node.hpp"

namespace semitree {

enum class NodeFilter {
  kCountOnly,  // just count nodes per genus
  kEliahou,    // additionally record nodes with E < 0
  kWilf,       // additionally record nodes violating c <= L * p
};

struct EliahouHit {
  GapBitstream gaps;
  EliahouReport report;

  bool operator==(const EliahouHit&) const = default;
};

struct WilfViolation {
  GapBitstream gaps;
  WilfReport wilf;
  EliahouReport eliahou;

  bool operator==(const WilfViolation&) const = default;
};

// Commutative-monoid accumulator for a tree walk.  counts is indexed by
// absolute genus (size max_genus + 1); merging sums counts pointwise and
// concatenates the hit lists, and finalize() sorts hits into the canonical
// (genus, gap stream) order so any merge schedule yields identical results.
struct GenusStats {
  GenusStats() = default;
  explicit GenusStats(uint32_t max_genus) : counts(max_genus + 1, 0) {}

  std::vector<uint64_t> counts;
  std::vector<EliahouHit> eliahou_hits;
  std::vector<WilfViolation> wilf_violations;

  uint64_t total_nodes() const;
  void absorb(const GenusStats& other);
  void finalize();

  bool operator==(const GenusStats&) const = default;
};

struct ExplorationConfig {
  uint32_t max_genus = 80;
  uint32_t worker_count = 1;
  // Levels expanded sequentially before handing subtrees to workers;
  // 0 picks a depth automatically from the worker count.
  uint32_t frontier_depth = 0;
  NodeFilter filter = NodeFilter::kCountOnly;
  // Streaming callback, fired as hits are found.  Under multiple workers
  // invocations are serialized but their order is scheduling-dependent;
  // the returned GenusStats is deterministic regardless.
  std::function<void(const EliahouHit&)> on_eliahou_hit;
};

// Depth-first walk (explicit stack) of the subtree below start, visiting
// every descendant of genus <= max_genus exactly once.  Children are taken
// in ascending offset order, so hits and frontier listings come out in the
// canonical order without sorting.
GenusStats explore(const SemigroupNode& start, const ExplorationConfig& config);

// Same result as explore: expands a small frontier sequentially, then lets
// workers pull whole frontier subtrees from a shared queue.  Counts are
// exact sums, so the outcome is bit-identical for any worker count.
GenusStats explore_parallel(const SemigroupNode& start,
                            const ExplorationConfig& config);

// Parallel walk over an explicit list of disjoint subtree roots.
GenusStats explore_many(std::span<const SemigroupNode> roots,
                        const ExplorationConfig& config);

// All descendants at genus exactly start.genus + depth, canonical order.
std::vector<SemigroupNode> frontier(const SemigroupNode& start, uint32_t depth);

// Frontier file format: one node per line, "<conductor>:<hex gap stream>".
void write_frontier(std::ostream& out, std::span<const SemigroupNode> nodes);
std::vector<GapBitstream> read_frontier(std::istream& in);

}  // namespace semitree
