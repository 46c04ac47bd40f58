#include "tvb/tverberg.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "tvb/geometry.hpp"
#include "tvb/lp.hpp"

namespace tvb {

namespace {

using clock_t_ = std::chrono::steady_clock;

double ms_since(clock_t_::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_t_::now() - t0).count();
}

// Feasibility of a small family of blocks is memoized by the sorted block
// masks. Up to 5 masks covers the (d+1)-tuples used for d <= 4; larger
// dimensions skip memoization and test the whole closed family directly.
struct MemoKey {
  std::array<uint64_t, 5> m{};
  bool operator==(const MemoKey& o) const { return m == o.m; }
};

struct MemoKeyHash {
  size_t operator()(const MemoKey& k) const {
    uint64_t h = 0x9E3779B97F4A7C15ull;
    for (uint64_t v : k.m) {
      v += h;
      v = (v ^ (v >> 30)) * 0xBF58476D1CE4E5B9ull;
      v = (v ^ (v >> 27)) * 0x94D049BB133111EBull;
      h = v ^ (v >> 31);
    }
    return static_cast<size_t>(h);
  }
};

struct Block {
  std::vector<int> pts;
  uint64_t mask = 0;
  uint32_t cmask = 0;
  bool closed = false;
};

struct Stats {
  uint64_t nodes = 0, feas = 0, lp = 0, pruned = 0;
};

class Engine {
 public:
  Engine(const Config& cfg, bool colored, const TverbergOptions& opts, bool verify_emitted)
      : cfg_(cfg),
        colored_(colored),
        emit_(opts.emit),
        verify_emitted_(verify_emitted),
        n_(static_cast<int>(cfg.points.size())),
        d_(cfg.dim),
        r_(cfg.blocks),
        cap_(opts.allow_large_blocks ? static_cast<int>(cfg.points.size()) : cfg.dim + 1),
        helly_(cfg.dim + 1 <= 5) {
    colors_left_.assign(cfg.color_count(), 0);
    for (int c : cfg_.colors) ++colors_left_[c];
    blocks_.reserve(r_);
  }

  void run() { rec(0); }

  // Deterministic fan-out: enumerate surviving choice prefixes of the
  // first `depth_limit` points; workers replay a prefix and search below.
  void collect_tasks(int depth_limit, std::vector<std::vector<int>>& out) {
    limit_ = depth_limit;
    task_sink_ = &out;
    rec(0);
    task_sink_ = nullptr;
    limit_ = -1;
  }

  // Rebuild the search state of a collected prefix. The prefix survived
  // all checks during collection, so none are repeated here.
  void replay(const std::vector<int>& choices) {
    for (int i = 0; i < static_cast<int>(choices.size()); ++i) {
      int c = cfg_.colors[i];
      --colors_left_[c];
      int b = choices[i];
      if (b < 0) {
        blocks_.push_back(Block{{i}, uint64_t(1) << i, uint32_t(1) << c, false});
        b = static_cast<int>(blocks_.size()) - 1;
      } else {
        Block& blk = blocks_[b];
        blk.pts.push_back(i);
        blk.mask |= uint64_t(1) << i;
        blk.cmask |= uint32_t(1) << c;
      }
      if (static_cast<int>(blocks_[b].pts.size()) == cap_) {
        closed_order_.push_back(b);
        blocks_[b].closed = true;
      }
    }
  }

  void run_from(int depth) { rec(depth); }

  mpz_class count_;
  std::vector<Partition> partitions_;
  Stats st_;

 private:
  // Capacity and per-color slot pruning. `remaining` counts point i too.
  bool prunes(int i) {
    const int remaining = n_ - i;
    const int nb = static_cast<int>(blocks_.size());
    const int need_new = r_ - nb;
    if (need_new > remaining) {
      ++st_.pruned;
      return true;
    }
    const int ncol = cfg_.color_count();
    long room = static_cast<long>(need_new) * (colored_ ? std::min(cap_, ncol) : cap_);
    if (colored_) {
      int slots[8];
      for (int c = 0; c < ncol; ++c) slots[c] = need_new;
      for (const Block& blk : blocks_) {
        int free_sz = cap_ - static_cast<int>(blk.pts.size());
        if (free_sz <= 0) continue;
        int free_col = ncol - std::popcount(blk.cmask);
        room += std::min(free_sz, free_col);
        for (int c = 0; c < ncol; ++c)
          if (!((blk.cmask >> c) & 1)) ++slots[c];
      }
      if (room < remaining) {
        ++st_.pruned;
        return true;
      }
      for (int c = 0; c < ncol; ++c) {
        if (colors_left_[c] > slots[c]) {
          ++st_.pruned;
          return true;
        }
      }
    } else {
      for (const Block& blk : blocks_) room += cap_ - static_cast<int>(blk.pts.size());
      if (room < remaining) {
        ++st_.pruned;
        return true;
      }
    }
    return false;
  }

  bool feasible_blocks(const std::vector<int>& ids) {
    ++st_.feas;
    MemoKey key{};
    const bool use_memo = helly_ && ids.size() <= key.m.size();
    if (use_memo) {
      for (size_t j = 0; j < ids.size(); ++j) key.m[j] = blocks_[ids[j]].mask;
      std::sort(key.m.begin(), key.m.begin() + ids.size());
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    ++st_.lp;
    std::vector<std::vector<int>> fam;
    fam.reserve(ids.size());
    for (int id : ids) fam.push_back(blocks_[id].pts);
    bool ok = hulls_intersect(cfg_, fam);
    if (use_memo) memo_.emplace(key, ok);
    return ok;
  }

  // Invariant: after every close, all (d+1)-subfamilies of closed blocks
  // are feasible; by Helly's theorem the whole closed family then has a
  // common point. Small families are checked whole.
  bool check_new_closed() {
    const int c = static_cast<int>(closed_order_.size());
    if (c <= 1) return true;
    const int t = d_ + 1;
    if (c <= t || !helly_) return feasible_blocks(closed_order_);
    const int last = closed_order_.back();
    const int m = c - 1;  // candidates for the other t-1 slots
    std::vector<int> pick(t - 1);
    for (int j = 0; j < t - 1; ++j) pick[j] = j;
    std::vector<int> ids(t);
    for (;;) {
      for (int j = 0; j < t - 1; ++j) ids[j] = closed_order_[pick[j]];
      ids[t - 1] = last;
      if (!feasible_blocks(ids)) return false;
      int j = t - 2;
      while (j >= 0 && pick[j] == m - (t - 1) + j) --j;
      if (j < 0) break;
      ++pick[j];
      for (int s = j + 1; s < t - 1; ++s) pick[s] = pick[s - 1] + 1;
    }
    return true;
  }

  bool push_closed(int b) {
    closed_order_.push_back(b);
    blocks_[b].closed = true;
    if (check_new_closed()) return true;
    blocks_[b].closed = false;
    closed_order_.pop_back();
    ++st_.pruned;
    return false;
  }

  void pop_closed() {
    blocks_[closed_order_.back()].closed = false;
    closed_order_.pop_back();
  }

  void leaf() {
    if (static_cast<int>(blocks_.size()) != r_) return;
    int added = 0;
    bool ok = true;
    for (int b = 0; b < r_ && ok; ++b) {
      if (blocks_[b].closed) continue;
      if (push_closed(b))
        ++added;
      else
        ok = false;
    }
    if (ok) {
      ++count_;
      if (emit_) {
        Partition p;
        p.blocks.reserve(r_);
        for (const Block& blk : blocks_) p.blocks.push_back(blk.pts);
        p.canonicalize();
        if (verify_emitted_ &&
            !verify_tverberg_partition(cfg_, p, colored_, cap_ > d_ + 1))
          throw std::logic_error("emitted partition failed independent recheck");
        partitions_.push_back(std::move(p));
      }
    }
    while (added-- > 0) pop_closed();
  }

  void rec(int i) {
    ++st_.nodes;
    if (task_sink_ && i == limit_) {
      task_sink_->push_back(choice_stack_);
      return;
    }
    if (i == n_) {
      leaf();
      return;
    }
    if (prunes(i)) return;
    const int c = cfg_.colors[i];
    --colors_left_[c];
    const int nb = static_cast<int>(blocks_.size());
    for (int b = 0; b < nb; ++b) {
      Block& blk = blocks_[b];
      if (static_cast<int>(blk.pts.size()) >= cap_) continue;
      if (colored_ && ((blk.cmask >> c) & 1)) continue;
      blk.pts.push_back(i);
      blk.mask |= uint64_t(1) << i;
      const uint32_t old_cmask = blk.cmask;
      blk.cmask |= uint32_t(1) << c;
      const bool closes = (static_cast<int>(blk.pts.size()) == cap_);
      bool ok = true;
      if (closes) ok = push_closed(b);
      if (ok) {
        if (task_sink_) choice_stack_.push_back(b);
        rec(i + 1);
        if (task_sink_) choice_stack_.pop_back();
        if (closes) pop_closed();
      }
      blk.cmask = old_cmask;
      blk.mask &= ~(uint64_t(1) << i);
      blk.pts.pop_back();
    }
    if (nb < r_) {
      blocks_.push_back(Block{{i}, uint64_t(1) << i, uint32_t(1) << c, false});
      const bool closes = (cap_ == 1);
      bool ok = true;
      if (closes) ok = push_closed(nb);
      if (ok) {
        if (task_sink_) choice_stack_.push_back(-1);
        rec(i + 1);
        if (task_sink_) choice_stack_.pop_back();
        if (closes) pop_closed();
      }
      blocks_.pop_back();
    }
    ++colors_left_[c];
  }

  const Config& cfg_;
  bool colored_, emit_, verify_emitted_;
  int n_, d_, r_, cap_;
  bool helly_;
  std::vector<Block> blocks_;
  std::vector<int> closed_order_;
  std::vector<int> colors_left_;
  std::unordered_map<MemoKey, bool, MemoKeyHash> memo_;
  int limit_ = -1;
  std::vector<int> choice_stack_;
  std::vector<std::vector<int>>* task_sink_ = nullptr;
};

CountReport run_engine(const Config& cfg, bool colored, const TverbergOptions& opts,
                       bool verify_emitted) {
  auto t0 = clock_t_::now();
  cfg.validate_shape();
  if (cfg.mode != Mode::Tverberg)
    throw std::invalid_argument("tverberg counting needs a tverberg configuration");
  if (cfg.points.size() > 64) throw std::invalid_argument("too many points (limit 64)");
  if (!cfg.general_position) {
    Config tmp = cfg;
    if (!tmp.verify_general_position()) throw std::runtime_error("general position violated");
  }

  CountReport rep;
  rep.dim = cfg.dim;
  rep.mode = cfg.mode;
  rep.blocks = cfg.blocks;
  rep.fingerprint = cfg.fingerprint();
  if (opts.emit) rep.partitions.emplace();

  const int jobs = std::max(1, opts.jobs);
  auto absorb = [&](Engine& e) {
    rep.count += e.count_;
    rep.nodes += e.st_.nodes;
    rep.feas_checks += e.st_.feas;
    rep.lp_calls += e.st_.lp;
    rep.pruned += e.st_.pruned;
    if (opts.emit)
      rep.partitions->insert(rep.partitions->end(),
                             std::make_move_iterator(e.partitions_.begin()),
                             std::make_move_iterator(e.partitions_.end()));
  };

  if (jobs == 1) {
    Engine e(cfg, colored, opts, verify_emitted);
    e.run();
    absorb(e);
  } else {
    const int n = static_cast<int>(cfg.points.size());
    std::vector<std::vector<int>> tasks;
    int depth = std::min(n, 2);
    for (;;) {
      tasks.clear();
      Engine collector(cfg, colored, opts, verify_emitted);
      collector.collect_tasks(depth, tasks);
      if (static_cast<int>(tasks.size()) >= 4 * jobs || depth >= n) break;
      ++depth;
    }
    const size_t nchunks = std::min<size_t>(jobs, std::max<size_t>(tasks.size(), 1));
    struct ChunkOut {
      mpz_class count;
      Stats st;
      std::vector<Partition> partitions;
    };
    std::vector<ChunkOut> outs(nchunks);
    std::vector<std::thread> threads;
    const size_t per = (tasks.size() + nchunks - 1) / nchunks;
    for (size_t w = 0; w < nchunks; ++w) {
      size_t lo = w * per, hi = std::min(tasks.size(), lo + per);
      threads.emplace_back([&, lo, hi, w] {
        for (size_t ti = lo; ti < hi; ++ti) {
          Engine e(cfg, colored, opts, verify_emitted);
          e.replay(tasks[ti]);
          e.run_from(static_cast<int>(tasks[ti].size()));
          outs[w].count += e.count_;
          outs[w].st.nodes += e.st_.nodes;
          outs[w].st.feas += e.st_.feas;
          outs[w].st.lp += e.st_.lp;
          outs[w].st.pruned += e.st_.pruned;
          if (opts.emit)
            outs[w].partitions.insert(outs[w].partitions.end(),
                                      std::make_move_iterator(e.partitions_.begin()),
                                      std::make_move_iterator(e.partitions_.end()));
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& o : outs) {
      rep.count += o.count;
      rep.nodes += o.st.nodes;
      rep.feas_checks += o.st.feas;
      rep.lp_calls += o.st.lp;
      rep.pruned += o.st.pruned;
      if (opts.emit)
        rep.partitions->insert(rep.partitions->end(),
                               std::make_move_iterator(o.partitions.begin()),
                               std::make_move_iterator(o.partitions.end()));
    }
  }

  if (opts.emit)
    std::sort(rep.partitions->begin(), rep.partitions->end(),
              [](const Partition& a, const Partition& b) { return a.blocks < b.blocks; });
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

Rat rat_det(std::vector<std::vector<Rat>> m) {
  const int s = static_cast<int>(m.size());
  Rat det(1);
  int sign = 1;
  for (int col = 0; col < s; ++col) {
    int piv = -1;
    for (int rw = col; rw < s; ++rw) {
      if (!m[rw][col].is_zero()) {
        piv = rw;
        break;
      }
    }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      sign = -sign;
    }
    det *= m[col][col];
    for (int rw = col + 1; rw < s; ++rw) {
      if (m[rw][col].is_zero()) continue;
      Rat f = m[rw][col] / m[col][col];
      for (int cc = col; cc < s; ++cc) m[rw][cc] -= f * m[col][cc];
    }
  }
  return sign < 0 ? -det : det;
}

std::optional<Point> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const int s = static_cast<int>(a.size());
  for (int col = 0; col < s; ++col) {
    int piv = -1;
    for (int rw = col; rw < s; ++rw) {
      if (!a[rw][col].is_zero()) {
        piv = rw;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int rw = 0; rw < s; ++rw) {
      if (rw == col || a[rw][col].is_zero()) continue;
      Rat f = a[rw][col] / a[col][col];
      for (int cc = col; cc < s; ++cc) a[rw][cc] -= f * a[col][cc];
      b[rw] -= f * b[col];
    }
  }
  Point x(s);
  for (int i = 0; i < s; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

CountReport count_colored_tverberg(const Config& cfg, const TverbergOptions& opts) {
  return run_engine(cfg, true, opts, true);
}

CountReport count_uncolored_tverberg(const Config& cfg, const TverbergOptions& opts) {
  // Bulk enumeration (the min-coloring scan) rechecks winners separately;
  // skipping the per-partition LP recheck here keeps it linear-time.
  return run_engine(cfg, false, opts, false);
}

bool verify_tverberg_partition(const Config& cfg, const Partition& p, bool colored,
                               bool allow_large_blocks) {
  const int n = static_cast<int>(cfg.points.size());
  if (static_cast<int>(p.blocks.size()) != cfg.blocks) return false;
  const int cap = allow_large_blocks ? n : cfg.dim + 1;
  std::vector<char> seen(n, 0);
  for (const auto& blk : p.blocks) {
    if (blk.empty() || static_cast<int>(blk.size()) > cap) return false;
    uint32_t cmask = 0;
    for (int idx : blk) {
      if (idx < 0 || idx >= n || seen[idx]) return false;
      seen[idx] = 1;
      if (colored) {
        uint32_t bit = uint32_t(1) << cfg.colors[idx];
        if (cmask & bit) return false;
        cmask |= bit;
      }
    }
  }
  for (char s : seen)
    if (!s) return false;
  return hulls_intersect(cfg, p.blocks);
}

std::optional<BirchView> birch_view_of_tverberg(const Partition& p, const Config& cfg) {
  if (cfg.mode != Mode::Tverberg) return std::nullopt;
  const int d = cfg.dim;
  const int r = cfg.blocks;

  std::vector<const std::vector<int>*> small, full;
  for (const auto& blk : p.blocks) {
    if (static_cast<int>(blk.size()) == d)
      small.push_back(&blk);
    else if (static_cast<int>(blk.size()) == d + 1)
      full.push_back(&blk);
    else
      return std::nullopt;
  }
  if (static_cast<int>(small.size()) != d || static_cast<int>(full.size()) != r - d)
    return std::nullopt;

  // Witness: the common point of the small blocks' affine hulls. Each
  // block of d points spans a hyperplane; its equation comes from
  // expanding det(x - q0, q1 - q0, ..., q_{d-1} - q0) = 0 along the x row.
  std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d));
  std::vector<Rat> rhs(d);
  for (int sb = 0; sb < d; ++sb) {
    const auto& blk = *small[sb];
    const Point& q0 = cfg.points[blk[0]];
    std::vector<std::vector<Rat>> v;
    for (int j = 1; j < d; ++j) {
      std::vector<Rat> row(d);
      for (int t = 0; t < d; ++t) row[t] = cfg.points[blk[j]][t] - q0[t];
      v.push_back(std::move(row));
    }
    Rat b_acc;
    for (int t = 0; t < d; ++t) {
      std::vector<std::vector<Rat>> sub(v.size(), std::vector<Rat>(d - 1));
      for (size_t rw = 0; rw < v.size(); ++rw) {
        int cc = 0;
        for (int u = 0; u < d; ++u)
          if (u != t) sub[rw][cc++] = v[rw][u];
      }
      Rat coeff = rat_det(std::move(sub));
      if (t % 2 == 1) coeff = -coeff;
      a[sb][t] = coeff;
      b_acc += coeff * q0[t];
    }
    rhs[sb] = b_acc;
  }
  auto w = solve_linear(std::move(a), std::move(rhs));
  if (!w) return std::nullopt;
  for (const auto& blk : p.blocks)
    if (!point_in_hull(cfg, blk, *w)) return std::nullopt;

  // Induced birch instance over the full blocks' points.
  std::vector<int> pmap;
  for (const auto* blk : full)
    for (int idx : *blk) pmap.push_back(idx);
  std::sort(pmap.begin(), pmap.end());

  int singleton = -1;
  for (size_t i = 0; i < cfg.colors.size(); ++i)
    if (cfg.colors[i] == d + 1) singleton = static_cast<int>(i);

  const int k = r - d;
  std::vector<int> colors(pmap.size());
  std::vector<int> hist(d + 1, 0);
  bool has_singleton = false;
  for (size_t i = 0; i < pmap.size(); ++i) {
    if (pmap[i] == singleton) {
      has_singleton = true;
      colors[i] = -1;
    } else {
      colors[i] = cfg.colors[pmap[i]];
      ++hist[colors[i]];
    }
  }
  if (has_singleton) {
    // The singleton inherits the unique color appearing k-1 times among
    // the full blocks' points.
    int missing = -1;
    for (int c = 0; c <= d; ++c) {
      if (hist[c] == k - 1) {
        if (missing >= 0) return std::nullopt;
        missing = c;
      }
    }
    if (missing < 0) return std::nullopt;
    for (int& c : colors)
      if (c < 0) c = missing;
  } else {
    for (int c = 0; c <= d; ++c)
      if (hist[c] != k) return std::nullopt;
  }

  BirchView view;
  view.witness = *w;
  view.point_map = pmap;
  Config b;
  b.dim = d;
  b.mode = Mode::Birch;
  b.blocks = k;
  b.points.reserve(pmap.size());
  for (int idx : pmap) b.points.push_back(cfg.points[idx]);
  b.colors = std::move(colors);
  b.query = *w;
  try {
    b.validate_shape();
  } catch (const std::exception&) {
    return std::nullopt;
  }
  b.verify_general_position();
  view.birch = std::move(b);
  return view;
}

}  // namespace tvb
