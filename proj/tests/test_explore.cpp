#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "semitree/errors.hpp"
#include "semitree/explore.hpp"

using namespace semitree;

namespace {

ExplorationConfig cfg_count(uint32_t max_genus, uint32_t workers = 1) {
  ExplorationConfig cfg;
  cfg.max_genus = max_genus;
  cfg.worker_count = workers;
  return cfg;
}

// First entries of the per-genus census.
const std::vector<uint64_t> kKnownCounts = {1,    1,    2,    4,    7,   12,
                                            23,   39,   67,   118,  204, 343,
                                            592,  1001, 1693, 2857, 4806};

}  // namespace

TEST_CASE("explore counts tiny genera") {
  GenusStats s = explore(SemigroupNode::root(), cfg_count(3));
  CHECK(s.counts == std::vector<uint64_t>{1, 1, 2, 4});
  CHECK(s.total_nodes() == 8);

  GenusStats s7 = explore(SemigroupNode::root(), cfg_count(7));
  CHECK(s7.counts == std::vector<uint64_t>{1, 1, 2, 4, 7, 12, 23, 39});
}

TEST_CASE("explore from an inner node") {
  SemigroupNode start = SemigroupNode::root().child(0);  // <2,3>
  GenusStats s = explore(start, cfg_count(3));
  CHECK(s.counts == std::vector<uint64_t>{0, 1, 2, 4});
}

TEST_CASE("explore rejects bad configurations") {
  SemigroupNode start = SemigroupNode::root().child(0);
  CHECK_THROWS_AS(explore(start, cfg_count(0)), std::invalid_argument);
  ExplorationConfig cfg = cfg_count(5);
  cfg.frontier_depth = 9;
  CHECK_THROWS_AS(explore_parallel(SemigroupNode::root(), cfg),
                  std::invalid_argument);
}

TEST_CASE("counts match the recursive oracle up to genus 16") {
  GenusStats s = explore(SemigroupNode::root(), cfg_count(16));
  CHECK(s.counts == oracle::count_by_genus(16));
  CHECK(s.counts == kKnownCounts);
}

TEST_CASE("every node is visited exactly once (genus <= 12)") {
  // Reconstruct the visit multiset from a manual walk and compare sizes.
  std::set<std::vector<uint32_t>> seen;
  uint64_t visits = 0;
  std::vector<SemigroupNode> stack{SemigroupNode::root()};
  while (!stack.empty()) {
    SemigroupNode n = stack.back();
    stack.pop_back();
    ++visits;
    CHECK(seen.insert(n.gaps().gap_values()).second);
    if (n.genus() == 12) continue;
    for (uint32_t k : n.right_primitive_offsets()) stack.push_back(n.child(k));
  }
  GenusStats s = explore(SemigroupNode::root(), cfg_count(12));
  CHECK(s.total_nodes() == visits);
  CHECK(s.total_nodes() == seen.size());
}

TEST_CASE("parallel explore equals sequential explore") {
  GenusStats seq = explore(SemigroupNode::root(), cfg_count(18));
  for (uint32_t workers : {1u, 4u, 8u}) {
    GenusStats par = explore_parallel(SemigroupNode::root(),
                                      cfg_count(18, workers));
    CHECK(par.counts == seq.counts);
    CHECK(par == seq);
  }
  // Fixed frontier depth, including depths past some leaves.
  for (uint32_t depth : {2u, 11u}) {
    ExplorationConfig cfg = cfg_count(18, 4);
    cfg.frontier_depth = depth;
    GenusStats par = explore_parallel(SemigroupNode::root(), cfg);
    CHECK(par.counts == seq.counts);
  }
}

TEST_CASE("merge is commutative") {
  ExplorationConfig cfg = cfg_count(10);
  GenusStats a = explore(SemigroupNode::root().child(0), cfg);
  GenusStats b = explore(SemigroupNode::root(), cfg_count(6));
  GenusStats ab = a;
  ab.absorb(b);
  ab.finalize();
  GenusStats ba = b;
  ba.absorb(a);
  ba.finalize();
  CHECK(ab == ba);
}

TEST_CASE("frontier levels") {
  std::vector<SemigroupNode> f0 = frontier(SemigroupNode::root(), 0);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0] == SemigroupNode::root());

  std::vector<SemigroupNode> f2 = frontier(SemigroupNode::root(), 2);
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].gaps().gap_values() == std::vector<uint32_t>{1, 2});
  CHECK(f2[1].gaps().gap_values() == std::vector<uint32_t>{1, 3});

  CHECK(frontier(SemigroupNode::root(), 4).size() == 7);
}

TEST_CASE("frontier partitions the deep counts") {
  GenusStats whole = explore(SemigroupNode::root(), cfg_count(14));
  for (uint32_t depth : {2u, 4u}) {
    std::vector<uint64_t> sum(15, 0);
    for (const SemigroupNode& n : frontier(SemigroupNode::root(), depth)) {
      GenusStats part = explore(n, cfg_count(14));
      for (size_t g = 0; g < sum.size(); ++g) sum[g] += part.counts[g];
    }
    for (uint32_t g = depth; g <= 14; ++g) CHECK(sum[g] == whole.counts[g]);
  }
}

TEST_CASE("frontier file round trip") {
  std::vector<SemigroupNode> nodes = frontier(SemigroupNode::root(), 2);
  std::ostringstream out;
  write_frontier(out, nodes);
  CHECK(out.str() == "3:c\n4:a\n");

  std::istringstream in(out.str());
  std::vector<GapBitstream> streams = read_frontier(in);
  REQUIRE(streams.size() == 2);
  CHECK(streams[0] == nodes[0].gaps());
  CHECK(streams[1] == nodes[1].gaps());

  // Deeper level, bit-exact both ways.
  std::vector<SemigroupNode> deep = frontier(SemigroupNode::root(), 9);
  std::ostringstream out2;
  write_frontier(out2, deep);
  std::istringstream in2(out2.str());
  std::vector<GapBitstream> streams2 = read_frontier(in2);
  REQUIRE(streams2.size() == deep.size());
  for (size_t i = 0; i < deep.size(); ++i)
    CHECK(streams2[i] == deep[i].gaps());
}

TEST_CASE("frontier file rejects malformed lines") {
  std::istringstream a("nonsense\n");
  CHECK_THROWS_AS(read_frontier(a), ParseError);
  std::istringstream b("4:zz\n");
  CHECK_THROWS_AS(read_frontier(b), ParseError);
  std::istringstream c("9999:aa\n");
  CHECK_THROWS_AS(read_frontier(c), ParseError);
  // Valid hex but not a semigroup: gaps {2} only.
  std::istringstream d("3:4\n");
  CHECK_THROWS_AS(read_frontier(d), ParseError);
}

TEST_CASE("explore_many over a frontier file") {
  std::vector<SemigroupNode> nodes = frontier(SemigroupNode::root(), 4);
  std::ostringstream out;
  write_frontier(out, nodes);
  std::istringstream in(out.str());
  std::vector<GapBitstream> streams = read_frontier(in);
  std::vector<SemigroupNode> roots;
  for (const GapBitstream& g : streams)
    roots.push_back(SemigroupNode::from_gaps(g));

  GenusStats merged = explore_many(roots, cfg_count(12, 4));
  GenusStats whole = explore(SemigroupNode::root(), cfg_count(12));
  for (uint32_t g = 4; g <= 12; ++g)
    CHECK(merged.counts[g] == whole.counts[g]);
}
