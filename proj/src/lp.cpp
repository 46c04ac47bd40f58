#include "tvb/lp.hpp"

#include <stdexcept>

namespace tvb {

namespace {

// Phase-1 simplex on the tableau [A | I | b] with b >= 0, minimizing the
// sum of artificial variables. Bland's rule both ways (smallest entering
// column index, smallest basis index on ratio ties) guarantees
// termination without any cycling heuristics.
bool phase1(std::vector<std::vector<Rat>> t, int n_vars) {
  const int m = static_cast<int>(t.size());
  const int n_cols = n_vars + m;  // columns excluding rhs
  const int rhs = n_cols;

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n_vars + i;

  // Reduced costs: c_j minus the column sum weighted by basic costs (all
  // artificials are basic with cost 1).
  std::vector<Rat> obj(n_cols);
  for (int j = 0; j < n_cols; ++j) {
    Rat colsum;
    for (int i = 0; i < m; ++i) colsum += t[i][j];
    obj[j] = (j >= n_vars ? Rat(1) : Rat(0)) - colsum;
  }

  for (;;) {
    int enter = -1;
    for (int j = 0; j < n_cols; ++j) {
      if (obj[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    Rat best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rat ratio = t[i][rhs] / t[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-1 objective unbounded");

    // Pivot at (leave, enter).
    Rat piv = t[leave][enter];
    for (int j = 0; j <= rhs; ++j) t[leave][j] = t[leave][j] / piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      Rat f = t[i][enter];
      for (int j = 0; j <= rhs; ++j) t[i][j] -= f * t[leave][j];
    }
    Rat f = obj[enter];
    if (!f.is_zero()) {
      for (int j = 0; j < n_cols; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  // Optimal artificial mass: rhs entries of rows still basic in an
  // artificial column. Zero iff the original system is feasible.
  Rat w;
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= n_vars) w += t[i][rhs];
  }
  return w.is_zero();
}

}  // namespace

bool lp_equality_feasible(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
  const int m = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("lp: row count mismatch");
  const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
  if (m == 0) return true;

  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw std::invalid_argument("lp: ragged matrix");
    bool flip = b[i].sign() < 0;
    for (int j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
    t[i][n + i] = Rat(1);
    t[i][n + m] = flip ? -b[i] : b[i];
  }
  return phase1(std::move(t), n);
}

bool hulls_intersect(const Config& cfg, const std::vector<std::vector<int>>& blocks) {
  const int nb = static_cast<int>(blocks.size());
  for (const auto& blk : blocks) {
    if (blk.empty()) return false;  // empty hull
    for (int idx : blk) {
      if (idx < 0 || idx >= static_cast<int>(cfg.points.size()))
        throw std::out_of_range("hulls_intersect: point index out of range");
    }
  }
  if (nb <= 1) return true;

  const int d = cfg.dim;
  int n_vars = 0;
  std::vector<int> base(nb);
  for (int j = 0; j < nb; ++j) {
    base[j] = n_vars;
    n_vars += static_cast<int>(blocks[j].size());
  }

  // One convexity row per block; d linkage rows tying block j's weighted
  // sum to block 0's, for j >= 1.
  const int m = nb + d * (nb - 1);
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n_vars));
  std::vector<Rat> b(m);
  for (int j = 0; j < nb; ++j) {
    for (size_t s = 0; s < blocks[j].size(); ++s) a[j][base[j] + s] = Rat(1);
    b[j] = Rat(1);
  }
  int row = nb;
  for (int j = 1; j < nb; ++j) {
    for (int tcoord = 0; tcoord < d; ++tcoord, ++row) {
      for (size_t s = 0; s < blocks[0].size(); ++s)
        a[row][base[0] + s] = cfg.points[blocks[0][s]][tcoord];
      for (size_t s = 0; s < blocks[j].size(); ++s)
        a[row][base[j] + s] = -cfg.points[blocks[j][s]][tcoord];
    }
  }
  return lp_equality_feasible(a, b);
}

bool point_in_hull(const Config& cfg, const std::vector<int>& block, const Point& x) {
  if (block.empty()) return false;
  const int d = cfg.dim;
  if (static_cast<int>(x.size()) != d) throw std::invalid_argument("point_in_hull: dimension mismatch");
  const int n = static_cast<int>(block.size());
  std::vector<std::vector<Rat>> a(d + 1, std::vector<Rat>(n));
  std::vector<Rat> b(d + 1);
  for (int t = 0; t < d; ++t) {
    for (int s = 0; s < n; ++s) a[t][s] = cfg.points[block[s]][t];
    b[t] = x[t];
  }
  for (int s = 0; s < n; ++s) a[d][s] = Rat(1);
  b[d] = Rat(1);
  return lp_equality_feasible(a, b);
}

}  // namespace tvb
