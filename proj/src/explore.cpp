#include "semitree/explore.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "semitree/errors.hpp"

namespace semitree {

namespace {

bool hit_less(const EliahouHit& a, const EliahouHit& b) {
  return GapBitstream::canonical_less(a.gaps, b.gaps);
}
bool violation_less(const WilfViolation& a, const WilfViolation& b) {
  return GapBitstream::canonical_less(a.gaps, b.gaps);
}

struct Sink {
  GenusStats* out;
  NodeFilter filter;
  const std::function<void(const EliahouHit&)>* on_hit;
  std::mutex* hit_mutex;  // null when single-threaded
};

EliahouReport make_report(const SemigroupStats& st, uint32_t p_left,
                          uint32_t p_right) {
  EliahouReport r;
  r.conductor = st.conductor;
  r.multiplicity = st.multiplicity;
  r.left_count = st.left_count;
  r.q = st.q();
  r.rho = st.rho();
  r.p_left = p_left;
  r.p_right = p_right;
  r.e = int64_t{p_left} * st.left_count -
        int64_t{r.q} * (int64_t{st.multiplicity} - p_right) + r.rho;
  return r;
}

// Per-node screening.  The right-primitive count is free (row 0 popcount);
// the left-primitive count is only computed when the cheap bound cannot
// already settle the question.
void analyze(const SemigroupNode& n, const Sink& sink) {
  if (sink.filter == NodeFilter::kCountOnly) return;
  const SemigroupStats& st = n.stats();
  const uint32_t pr = n.seeds().bits().count_below(n.row0_width());
  const int64_t L = st.left_count;
  const int64_t q = st.q();
  const int64_t rho = st.rho();
  const int64_t c = st.conductor;
  const int64_t m = st.multiplicity;

  if (sink.filter == NodeFilter::kEliahou) {
    // Any nonzero left element makes p_left >= 1 (the multiplicity is
    // primitive), so E >= L - q*(m - pr) + rho whenever L >= 2.
    if (L >= 2 && L - q * (m - pr) + rho >= 0) return;
    const uint32_t pl = n.gaps().left_primitive_count();
    EliahouReport r = make_report(st, pl, pr);
    if (r.e >= 0) return;
    EliahouHit hit{n.gaps(), r};
    if (sink.on_hit && *sink.on_hit) {
      if (sink.hit_mutex) {
        std::lock_guard<std::mutex> lock(*sink.hit_mutex);
        (*sink.on_hit)(hit);
      } else {
        (*sink.on_hit)(hit);
      }
    }
    sink.out->eliahou_hits.push_back(std::move(hit));
  } else {
    if (L * pr >= c) return;  // right primitives alone satisfy the bound
    const uint32_t pl = n.gaps().left_primitive_count();
    if (L * (pl + pr) >= c) return;
    WilfViolation v;
    v.gaps = n.gaps();
    v.eliahou = make_report(st, pl, pr);
    v.wilf.conductor = st.conductor;
    v.wilf.left_count = st.left_count;
    v.wilf.primitive_count = pl + pr;
    v.wilf.slack = L * (pl + pr) - c;
    v.wilf.holds = false;
    sink.out->wilf_violations.push_back(std::move(v));
  }
}

struct Frame {
  SemigroupNode node;
  uint32_t cursor = 0;
};

void visit(const SemigroupNode& n, const Sink& sink) {
  sink.out->counts[n.genus()] += 1;
  analyze(n, sink);
}

// Iterative depth-first walk; one preallocated frame per level.
void dfs(const SemigroupNode& start, uint32_t max_genus, const Sink& sink) {
  assert(start.genus() <= max_genus);
  visit(start, sink);
  if (start.genus() == max_genus) return;

  std::vector<Frame> stack(max_genus - start.genus() + 1);
  stack[0].node = start;
  stack[0].cursor = 0;
  int depth = 0;
  while (depth >= 0) {
    Frame& fr = stack[depth];
    const uint32_t width = fr.node.row0_width();
    const uint32_t k = fr.node.seeds().bits().next_set(fr.cursor);
    if (k == Bitset::kNpos || k >= width) {
      --depth;
      continue;
    }
    fr.cursor = k + 1;
    Frame& next = stack[depth + 1];
    next.node = fr.node.child(k);
    next.cursor = 0;
    visit(next.node, sink);
    if (next.node.genus() < max_genus) ++depth;
  }
}

void validate_config(const ExplorationConfig& cfg) {
  if (cfg.frontier_depth > cfg.max_genus)
    throw std::invalid_argument("frontier_depth exceeds max_genus");
  if (2 * uint64_t{cfg.max_genus} + 2 > kMaxBits)
    throw CapacityExceeded("max_genus exceeds supported range");
}

void validate(const SemigroupNode& start, const ExplorationConfig& cfg) {
  validate_config(cfg);
  if (start.genus() > cfg.max_genus)
    throw std::invalid_argument("start genus exceeds max_genus");
}

}  // namespace

uint64_t GenusStats::total_nodes() const {
  uint64_t t = 0;
  for (uint64_t c : counts) t += c;
  return t;
}

void GenusStats::absorb(const GenusStats& other) {
  if (counts.size() < other.counts.size()) counts.resize(other.counts.size(), 0);
  for (size_t i = 0; i < other.counts.size(); ++i) counts[i] += other.counts[i];
  eliahou_hits.insert(eliahou_hits.end(), other.eliahou_hits.begin(),
                      other.eliahou_hits.end());
  wilf_violations.insert(wilf_violations.end(), other.wilf_violations.begin(),
                         other.wilf_violations.end());
}

void GenusStats::finalize() {
  std::sort(eliahou_hits.begin(), eliahou_hits.end(), hit_less);
  std::sort(wilf_violations.begin(), wilf_violations.end(), violation_less);
}

GenusStats explore(const SemigroupNode& start, const ExplorationConfig& cfg) {
  validate(start, cfg);
  GenusStats out(cfg.max_genus);
  Sink sink{&out, cfg.filter, &cfg.on_eliahou_hit, nullptr};
  dfs(start, cfg.max_genus, sink);
  out.finalize();
  return out;
}

GenusStats explore_many(std::span<const SemigroupNode> roots,
                        const ExplorationConfig& cfg) {
  validate_config(cfg);
  for (const SemigroupNode& n : roots) validate(n, cfg);
  GenusStats out(cfg.max_genus);

  const uint32_t workers =
      std::max<uint32_t>(1, std::min<uint32_t>(cfg.worker_count,
                                               static_cast<uint32_t>(roots.size())));
  if (workers <= 1) {
    Sink sink{&out, cfg.filter, &cfg.on_eliahou_hit, nullptr};
    for (const SemigroupNode& n : roots) dfs(n, cfg.max_genus, sink);
    out.finalize();
    return out;
  }

  std::atomic<size_t> next_root{0};
  std::mutex hit_mutex;
  std::vector<GenusStats> parts(workers, GenusStats(cfg.max_genus));
  auto body = [&](uint32_t worker) {
    Sink sink{&parts[worker], cfg.filter, &cfg.on_eliahou_hit, &hit_mutex};
    for (;;) {
      const size_t i = next_root.fetch_add(1, std::memory_order_relaxed);
      if (i >= roots.size()) break;
      dfs(roots[i], cfg.max_genus, sink);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (uint32_t w = 0; w < workers; ++w) pool.emplace_back(body, w);
  for (auto& t : pool) t.join();
  for (const GenusStats& part : parts) out.absorb(part);
  out.finalize();
  return out;
}

GenusStats explore_parallel(const SemigroupNode& start,
                            const ExplorationConfig& cfg) {
  validate(start, cfg);
  if (cfg.worker_count <= 1) return explore(start, cfg);

  GenusStats out(cfg.max_genus);
  Sink sink{&out, cfg.filter, &cfg.on_eliahou_hit, nullptr};

  // Sequentially expand a frontier wide enough to keep the workers busy;
  // the expanded levels are visited here, the frontier itself by workers.
  const uint32_t depth_room = cfg.max_genus - start.genus();
  const bool automatic = cfg.frontier_depth == 0;
  const uint32_t target_depth =
      automatic ? std::min<uint32_t>(depth_room, 18)
                : std::min<uint32_t>(cfg.frontier_depth, depth_room);
  const size_t wide_enough = automatic ? size_t{24} * cfg.worker_count : SIZE_MAX;

  std::vector<SemigroupNode> level{start};
  uint32_t depth = 0;
  while (depth < target_depth && !level.empty() && level.size() < wide_enough) {
    std::vector<SemigroupNode> next;
    next.reserve(level.size() * 2);
    for (const SemigroupNode& n : level) {
      visit(n, sink);
      const uint32_t width = n.row0_width();
      for (uint32_t k = n.seeds().bits().next_set(0);
           k != Bitset::kNpos && k < width; k = n.seeds().bits().next_set(k + 1))
        next.push_back(n.child(k));
    }
    level = std::move(next);
    ++depth;
  }

  GenusStats below = explore_many(level, cfg);
  out.absorb(below);
  out.finalize();
  return out;
}

std::vector<SemigroupNode> frontier(const SemigroupNode& start, uint32_t depth) {
  std::vector<SemigroupNode> level{start};
  for (uint32_t d = 0; d < depth && !level.empty(); ++d) {
    std::vector<SemigroupNode> next;
    next.reserve(level.size() * 2);
    for (const SemigroupNode& n : level) {
      const uint32_t width = n.row0_width();
      for (uint32_t k = n.seeds().bits().next_set(0);
           k != Bitset::kNpos && k < width; k = n.seeds().bits().next_set(k + 1))
        next.push_back(n.child(k));
    }
    level = std::move(next);
  }
  return level;
}

void write_frontier(std::ostream& out, std::span<const SemigroupNode> nodes) {
  for (const SemigroupNode& n : nodes)
    out << n.gaps().conductor() << ':' << n.gaps().to_hex() << '\n';
}

std::vector<GapBitstream> read_frontier(std::istream& in) {
  std::vector<GapBitstream> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("frontier line " + std::to_string(lineno) +
                           ": missing ':'",
                       lineno);
    uint64_t conductor = 0;
    if (colon == 0)
      throw ParseError("frontier line " + std::to_string(lineno) +
                           ": missing conductor",
                       lineno);
    for (size_t i = 0; i < colon; ++i) {
      if (line[i] < '0' || line[i] > '9')
        throw ParseError("frontier line " + std::to_string(lineno) +
                             ": bad conductor",
                         lineno);
      conductor = conductor * 10 + (line[i] - '0');
      if (conductor > kMaxBits)
        throw ParseError("frontier line " + std::to_string(lineno) +
                             ": conductor out of range",
                         lineno);
    }
    try {
      out.push_back(GapBitstream::from_hex(static_cast<uint32_t>(conductor),
                                           std::string_view(line).substr(colon + 1)));
    } catch (const ParseError& e) {
      throw ParseError("frontier line " + std::to_string(lineno) + ": " +
                           e.what(),
                       lineno);
    } catch (const NotASemigroup& e) {
      throw ParseError("frontier line " + std::to_string(lineno) + ": " +
                           e.what(),
                       lineno);
    }
  }
  return out;
}

}  // namespace semitree
