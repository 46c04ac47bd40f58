#pragma once

// Brute-force reference implementations used only by tests: enumerate
// every partition of the index set and filter by first principles. Slow
// on purpose — these are the independent second route the fast counters
// are checked against.

#include <algorithm>
#include <vector>

#include "tvb/config.hpp"
#include "tvb/geometry.hpp"
#include "tvb/lp.hpp"
#include "tvb/partition.hpp"

namespace tvb::oracle {

// All partitions of {0..n-1} into blocks of size exactly bs, unordered
// (anchor-first recursion: the lowest unplaced index starts each block).
inline void fixed_size_partitions(int n, int bs, std::vector<Partition>& out) {
  std::vector<int> free_idx;
  std::vector<std::vector<int>> blocks;
  std::vector<bool> used(n, false);

  auto rec = [&](auto&& self, int placed) -> void {
    if (placed == n) {
      Partition p;
      p.blocks = blocks;
      p.canonicalize();
      out.push_back(std::move(p));
      return;
    }
    int anchor = 0;
    while (used[anchor]) ++anchor;
    used[anchor] = true;
    std::vector<int> rest;
    for (int i = anchor + 1; i < n; ++i)
      if (!used[i]) rest.push_back(i);
    const int need = bs - 1;
    std::vector<int> pick(need);
    auto choose = [&](auto&& inner, int from, int got) -> void {
      if (got == need) {
        std::vector<int> blk{anchor};
        for (int j = 0; j < need; ++j) blk.push_back(rest[pick[j]]);
        for (int j = 0; j < need; ++j) used[rest[pick[j]]] = true;
        blocks.push_back(blk);
        self(self, placed + bs);
        blocks.pop_back();
        for (int j = 0; j < need; ++j) used[rest[pick[j]]] = false;
        return;
      }
      for (int i = from; i < static_cast<int>(rest.size()); ++i) {
        pick[got] = i;
        inner(inner, i + 1, got + 1);
      }
    };
    if (need == 0) {
      blocks.push_back({anchor});
      self(self, placed + 1);
      blocks.pop_back();
    } else {
      choose(choose, 0, 0);
    }
    used[anchor] = false;
  };
  rec(rec, 0);
}

inline bool rainbow(const Config& cfg, const std::vector<int>& blk) {
  std::vector<bool> seen(cfg.color_count(), false);
  for (int v : blk) {
    if (seen[cfg.colors[v]]) return false;
    seen[cfg.colors[v]] = true;
  }
  return true;
}

// Birch reference count: filter all partitions into (d+1)-blocks.
inline mpz_class naive_birch_count(const Config& cfg, bool colored,
                                   std::vector<Partition>* keep = nullptr) {
  const int n = static_cast<int>(cfg.points.size());
  std::vector<Partition> all;
  fixed_size_partitions(n, cfg.dim + 1, all);
  mpz_class count = 0;
  for (const Partition& p : all) {
    bool ok = true;
    for (const auto& blk : p.blocks) {
      if (colored && !rainbow(cfg, blk)) {
        ok = false;
        break;
      }
      std::vector<Point> simplex;
      for (int v : blk) simplex.push_back(cfg.points[v]);
      if (!simplex_contains(simplex, *cfg.query)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++count;
      if (keep) keep->push_back(p);
    }
  }
  return count;
}

// All partitions of {0..n-1} into exactly r nonempty unordered blocks,
// via restricted growth strings.
inline void exact_r_partitions(int n, int r, std::vector<Partition>& out) {
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, int i, int maxv) -> void {
    if (i == n) {
      if (maxv + 1 != r) return;
      Partition p;
      p.blocks.assign(r, {});
      for (int j = 0; j < n; ++j) p.blocks[a[j]].push_back(j);
      p.canonicalize();
      out.push_back(std::move(p));
      return;
    }
    for (int v = 0; v <= std::min(maxv + 1, r - 1); ++v) {
      a[i] = v;
      self(self, i + 1, std::max(maxv, v));
    }
  };
  rec(rec, 0, -1);
}

// Tverberg reference count: filter all r-block partitions on size cap
// (when capped), rainbow (when colored), and direct LP hull intersection.
inline mpz_class naive_tverberg_count(const Config& cfg, bool colored, bool cap_block_size,
                                      std::vector<Partition>* keep = nullptr) {
  const int n = static_cast<int>(cfg.points.size());
  std::vector<Partition> all;
  exact_r_partitions(n, cfg.blocks, all);
  mpz_class count = 0;
  for (const Partition& p : all) {
    bool ok = true;
    for (const auto& blk : p.blocks) {
      if (cap_block_size && static_cast<int>(blk.size()) > cfg.dim + 1) ok = false;
      if (colored && !rainbow(cfg, blk)) ok = false;
      if (!ok) break;
    }
    if (ok && !hulls_intersect(cfg, p.blocks)) ok = false;
    if (ok) {
      ++count;
      if (keep) keep->push_back(p);
    }
  }
  return count;
}

// ---- exact 2d convex-hull intersection for blocks of <= 3 points ----

inline int ori2(const Point& a, const Point& b, const Point& c) {
  return ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])).sign();
}

inline bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (ori2(a, b, p) != 0) return false;
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

inline bool segments_intersect(const Point& p1, const Point& p2, const Point& q1,
                               const Point& q2) {
  int o1 = ori2(p1, p2, q1), o2 = ori2(p1, p2, q2);
  int o3 = ori2(q1, q2, p1), o4 = ori2(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

inline bool point_in_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  int o1 = ori2(a, b, p), o2 = ori2(b, c, p), o3 = ori2(c, a, p);
  bool has_pos = o1 > 0 || o2 > 0 || o3 > 0;
  bool has_neg = o1 < 0 || o2 < 0 || o3 < 0;
  return !(has_pos && has_neg);  // closed containment
}

// Normal form of the hull of <= 3 planar points: 1 = point, 2 = segment
// endpoints, 3 = proper triangle. Collinear triples collapse to their
// extreme pair; duplicate points collapse.
inline std::vector<Point> hull_normal_form(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point& a, const Point& b) { return a == b; }),
            pts.end());
  if (pts.size() == 3 && ori2(pts[0], pts[1], pts[2]) == 0)
    return {pts.front(), pts.back()};  // lexicographic extremes of a collinear triple
  return pts;
}

// Closed intersection test for two planar hulls of <= 3 points each, by
// exhaustive case analysis: two convex sets meet iff one contains a
// vertex of the other or some pair of edges crosses.
inline bool hulls2_intersect_oracle(const std::vector<Point>& raw_a,
                                    const std::vector<Point>& raw_b) {
  std::vector<Point> A = hull_normal_form(raw_a);
  std::vector<Point> B = hull_normal_form(raw_b);
  if (A.size() > B.size()) std::swap(A, B);

  auto contains = [](const std::vector<Point>& h, const Point& p) {
    if (h.size() == 1) return h[0] == p;
    if (h.size() == 2) return on_segment(h[0], h[1], p);
    return point_in_triangle(h[0], h[1], h[2], p);
  };
  for (const Point& p : A)
    if (contains(B, p)) return true;
  for (const Point& p : B)
    if (contains(A, p)) return true;

  auto edges = [](const std::vector<Point>& h) {
    std::vector<std::pair<Point, Point>> e;
    if (h.size() == 2) e.push_back({h[0], h[1]});
    if (h.size() == 3) {
      e.push_back({h[0], h[1]});
      e.push_back({h[1], h[2]});
      e.push_back({h[2], h[0]});
    }
    return e;
  };
  for (const auto& ea : edges(A))
    for (const auto& eb : edges(B))
      if (segments_intersect(ea.first, ea.second, eb.first, eb.second)) return true;
  return false;
}

}  // namespace tvb::oracle
