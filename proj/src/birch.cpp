#include "tvb/birch.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "tvb/geometry.hpp"

namespace tvb {

namespace {

using clock_t_ = std::chrono::steady_clock;

double ms_since(clock_t_::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_t_::now() - t0).count();
}

// A precomputed admissible block: indices sorted, bitmask for overlap tests.
struct CandBlock {
  uint64_t mask = 0;
  std::vector<int> idx;
};

void require_counting_input(const Config& cfg) {
  cfg.validate_shape();
  if (cfg.points.size() > 64) throw std::invalid_argument("too many points (limit 64)");
  if (!cfg.general_position) {
    Config tmp = cfg;  // verify without mutating the caller's copy
    if (!tmp.verify_general_position()) throw std::runtime_error("general position violated");
  }
}

std::vector<std::vector<int>> color_classes(const Config& cfg) {
  std::vector<std::vector<int>> classes(cfg.color_count());
  for (size_t i = 0; i < cfg.colors.size(); ++i) classes[cfg.colors[i]].push_back(static_cast<int>(i));
  return classes;
}

CandBlock make_cand(std::vector<int> idx) {
  CandBlock cb;
  cb.idx = std::move(idx);
  std::sort(cb.idx.begin(), cb.idx.end());
  for (int v : cb.idx) cb.mask |= uint64_t(1) << v;
  return cb;
}

// Rainbow blocks through `anchor` (color 0) strictly containing the query:
// one point from each of the classes 1..d, containment-filtered.
std::vector<CandBlock> colored_candidates(const Config& cfg, int anchor,
                                          const std::vector<std::vector<int>>& classes) {
  const int d = cfg.dim;
  const Point& q = *cfg.query;
  std::vector<CandBlock> out;
  std::vector<size_t> pos(d, 0);
  std::vector<int> idx(d + 1);
  std::vector<Point> simplex(d + 1);
  for (;;) {
    idx[0] = anchor;
    for (int c = 1; c <= d; ++c) idx[c] = classes[c][pos[c - 1]];
    for (int j = 0; j <= d; ++j) simplex[j] = cfg.points[idx[j]];
    if (simplex_contains(simplex, q)) out.push_back(make_cand(idx));
    int c = 0;
    while (c < d && ++pos[c] == classes[c + 1].size()) pos[c] = 0, ++c;
    if (c == d) break;
  }
  return out;
}

// (d+1)-blocks {x} + d higher-index points strictly containing the query.
// Anchors are always the lowest unused index, so higher-only suffices.
std::vector<CandBlock> uncolored_candidates(const Config& cfg, int anchor) {
  const int d = cfg.dim;
  const int n = static_cast<int>(cfg.points.size());
  const Point& q = *cfg.query;
  std::vector<CandBlock> out;
  if (n - anchor - 1 < d) return out;
  std::vector<int> pick(d);
  for (int j = 0; j < d; ++j) pick[j] = anchor + 1 + j;
  std::vector<Point> simplex(d + 1);
  std::vector<int> idx(d + 1);
  for (;;) {
    idx[0] = anchor;
    for (int j = 0; j < d; ++j) idx[j + 1] = pick[j];
    for (int j = 0; j <= d; ++j) simplex[j] = cfg.points[idx[j]];
    if (simplex_contains(simplex, q)) out.push_back(make_cand(idx));
    int j = d - 1;
    while (j >= 0 && pick[j] == n - d + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < d; ++t) pick[t] = pick[t - 1] + 1;
  }
  return out;
}

struct WorkerOut {
  mpz_class count = 0;
  uint64_t nodes = 0, pruned = 0;
  std::vector<Partition> partitions;
};

void emit_chosen(const std::vector<const CandBlock*>& chosen, std::vector<Partition>& sink) {
  Partition p;
  p.blocks.reserve(chosen.size());
  for (const CandBlock* cb : chosen) p.blocks.push_back(cb->idx);
  p.canonicalize();
  sink.push_back(std::move(p));
}

// Colored search: depth i extends anchor i (the i-th color-0 point; blocks
// are rainbow, so anchors are consumed in fixed ascending order).
void dfs_colored(const std::vector<std::vector<CandBlock>>& cands, size_t depth, uint64_t used,
                 std::vector<const CandBlock*>& chosen, bool emit, WorkerOut& out) {
  ++out.nodes;
  if (depth == cands.size()) {
    ++out.count;
    if (emit) emit_chosen(chosen, out.partitions);
    return;
  }
  for (const auto& cb : cands[depth]) {
    if (cb.mask & used) {
      ++out.pruned;
      continue;
    }
    chosen.push_back(&cb);
    dfs_colored(cands, depth + 1, used | cb.mask, chosen, emit, out);
    chosen.pop_back();
  }
}

// Uncolored search: the next anchor is the lowest unused index.
void dfs_uncolored(const std::vector<std::vector<CandBlock>>& cand_by_point, int placed, int k,
                   uint64_t used, std::vector<const CandBlock*>& chosen, bool emit,
                   WorkerOut& out) {
  ++out.nodes;
  if (placed == k) {
    ++out.count;
    if (emit) emit_chosen(chosen, out.partitions);
    return;
  }
  int anchor = std::countr_zero(~used);
  for (const auto& cb : cand_by_point[anchor]) {
    if (cb.mask & used) {
      ++out.pruned;
      continue;
    }
    chosen.push_back(&cb);
    dfs_uncolored(cand_by_point, placed + 1, k, used | cb.mask, chosen, emit, out);
    chosen.pop_back();
  }
}

// Fan out the top-level candidate loop across workers; totals and the
// sorted partition list are independent of the chunking.
template <typename RunChunk>
CountReport run_chunked(const Config& cfg, const BirchOptions& opts, size_t top_size,
                        clock_t_::time_point t0, RunChunk run_chunk) {
  int jobs = std::max(1, opts.jobs);
  size_t nchunks = std::min<size_t>(jobs, std::max<size_t>(top_size, 1));
  std::vector<WorkerOut> outs(nchunks);
  if (nchunks <= 1) {
    run_chunk(0, top_size, outs[0]);
  } else {
    std::vector<std::thread> threads;
    size_t per = (top_size + nchunks - 1) / nchunks;
    for (size_t c = 0; c < nchunks; ++c) {
      size_t lo = c * per, hi = std::min(top_size, lo + per);
      threads.emplace_back([&, lo, hi, c] { run_chunk(lo, hi, outs[c]); });
    }
    for (auto& t : threads) t.join();
  }

  CountReport rep;
  rep.dim = cfg.dim;
  rep.mode = cfg.mode;
  rep.blocks = cfg.blocks;
  rep.fingerprint = cfg.fingerprint();
  if (opts.emit) rep.partitions.emplace();
  for (auto& w : outs) {
    rep.count += w.count;
    rep.nodes += w.nodes;
    rep.pruned += w.pruned;
    if (opts.emit)
      rep.partitions->insert(rep.partitions->end(),
                             std::make_move_iterator(w.partitions.begin()),
                             std::make_move_iterator(w.partitions.end()));
  }
  if (opts.emit)
    std::sort(rep.partitions->begin(), rep.partitions->end(),
              [](const Partition& a, const Partition& b) { return a.blocks < b.blocks; });
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

}  // namespace

CountReport count_colored_birch(const Config& cfg, const BirchOptions& opts) {
  auto t0 = clock_t_::now();
  require_counting_input(cfg);
  if (cfg.mode != Mode::Birch) throw std::invalid_argument("count_colored_birch needs a birch configuration");

  auto classes = color_classes(cfg);
  const int k = cfg.blocks;
  std::vector<std::vector<CandBlock>> cands(k);
  for (int i = 0; i < k; ++i) cands[i] = colored_candidates(cfg, classes[0][i], classes);

  return run_chunked(cfg, opts, cands[0].size(), t0,
                     [&](size_t lo, size_t hi, WorkerOut& out) {
                       std::vector<const CandBlock*> chosen;
                       for (size_t c = lo; c < hi; ++c) {
                         const auto& cb = cands[0][c];
                         chosen.push_back(&cb);
                         dfs_colored(cands, 1, cb.mask, chosen, opts.emit, out);
                         chosen.pop_back();
                       }
                     });
}

CountReport count_uncolored_birch(const Config& cfg, const BirchOptions& opts) {
  auto t0 = clock_t_::now();
  require_counting_input(cfg);
  if (cfg.mode != Mode::Birch) throw std::invalid_argument("count_uncolored_birch needs a birch configuration");

  const int n = static_cast<int>(cfg.points.size());
  const int k = cfg.blocks;
  std::vector<std::vector<CandBlock>> cand_by_point(n);
  for (int x = 0; x < n; ++x) cand_by_point[x] = uncolored_candidates(cfg, x);

  return run_chunked(cfg, opts, cand_by_point[0].size(), t0,
                     [&](size_t lo, size_t hi, WorkerOut& out) {
                       std::vector<const CandBlock*> chosen;
                       for (size_t c = lo; c < hi; ++c) {
                         const auto& cb = cand_by_point[0][c];
                         chosen.push_back(&cb);
                         dfs_uncolored(cand_by_point, 1, k, cb.mask, chosen, opts.emit, out);
                         chosen.pop_back();
                       }
                     });
}

bool verify_birch_partition(const Config& cfg, const Partition& p, bool colored) {
  cfg.validate_shape();
  if (cfg.mode != Mode::Birch) return false;
  const int d = cfg.dim;
  const int n = static_cast<int>(cfg.points.size());
  if (static_cast<int>(p.blocks.size()) != cfg.blocks) return false;

  std::vector<char> seen(n, 0);
  for (const auto& blk : p.blocks) {
    if (static_cast<int>(blk.size()) != d + 1) return false;
    std::vector<char> col_seen(d + 1, 0);
    std::vector<Point> simplex;
    simplex.reserve(d + 1);
    for (int v : blk) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
      if (colored) {
        int c = cfg.colors[v];
        if (col_seen[c]) return false;
        col_seen[c] = 1;
      }
      simplex.push_back(cfg.points[v]);
    }
    if (!simplex_contains(simplex, *cfg.query)) return false;
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) return false;
  return true;
}

long count_rainbow_simplices(const Config& cfg) {
  require_counting_input(cfg);
  if (cfg.mode != Mode::Birch || cfg.blocks != 2)
    throw std::invalid_argument("rainbow simplex counting needs each color exactly twice");

  auto classes = color_classes(cfg);
  const int d = cfg.dim;
  const Point& q = *cfg.query;
  long total = 0;
  for (int combo = 0; combo < (1 << (d + 1)); ++combo) {
    std::vector<Point> simplex(d + 1);
    for (int c = 0; c <= d; ++c) simplex[c] = cfg.points[classes[c][(combo >> c) & 1]];
    if (simplex_contains(simplex, q)) ++total;
  }
  return total;
}

}  // namespace tvb
