#include "tvb/geometry.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace tvb {

namespace {

using int128 = __int128;

int sign_of(const int128& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sign_of(const mpz_class& v) { return sgn(v); }

// Fraction-free Bareiss elimination; exact over any integer type whose
// divisions below are exact (guaranteed by the algorithm). Returns the
// sign of the determinant.
template <typename I>
int bareiss_det_sign(std::vector<std::vector<I>>& m) {
  const size_t n = m.size();
  int sign = 1;
  I prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && sign_of(m[piv][k]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * sign_of(m[n - 1][n - 1]);
}

// Clears denominators row by row (scaling a row by its positive common
// denominator preserves det sign and rank). Keeps per-row max |entry|
// so the caller can certify the int128 fast path.
struct IntRows {
  std::vector<std::vector<mpz_class>> rows;
  std::vector<mpz_class> row_max;
};

IntRows integerize(const std::vector<std::vector<Rat>>& rows) {
  IntRows out;
  out.rows.reserve(rows.size());
  out.row_max.reserve(rows.size());
  for (const auto& row : rows) {
    mpz_class l = 1;
    for (const Rat& x : row) l = lcm(l, x.den());
    std::vector<mpz_class> irow;
    irow.reserve(row.size());
    mpz_class mx = 0;
    for (const Rat& x : row) {
      mpz_class e = x.num() * (l / x.den());
      if (cmp(abs(e), mx) > 0) mx = abs(e);
      irow.push_back(std::move(e));
    }
    out.rows.push_back(std::move(irow));
    out.row_max.push_back(std::move(mx));
  }
  return out;
}

// Overflow certificate for the int128 Bareiss path. Entries at stage k
// are (k+1)x(k+1) minors of the input; a k-minor over rows S is bounded
// by prod_{i in S} (s * (row_max_i + 1)) with s = matrix size. The update
// multiplies two (s-1)-minors, so it suffices that the product P of the
// s-1 largest row factors satisfies 2*P^2 < 2^127; we require P < 2^62.
bool fits_int128(const IntRows& ir) {
  const size_t s = ir.rows.size();
  std::vector<mpz_class> factors;
  factors.reserve(s);
  for (const mpz_class& mx : ir.row_max)
    factors.push_back(mpz_class(static_cast<unsigned long>(s)) * (mx + 1));
  std::sort(factors.begin(), factors.end(),
            [](const mpz_class& a, const mpz_class& b) { return cmp(a, b) > 0; });
  mpz_class p = 1;
  for (size_t i = 0; i + 1 < s || (s == 1 && i < 1); ++i) p *= factors[i];
  return cmp(p, mpz_class(1) << 62) < 0;
}

std::vector<std::vector<int128>> to_int128(const IntRows& ir) {
  std::vector<std::vector<int128>> m;
  m.reserve(ir.rows.size());
  for (const auto& row : ir.rows) {
    std::vector<int128> r;
    r.reserve(row.size());
    for (const mpz_class& e : row) {
      mpz_class a = abs(e);
      uint64_t lo = mpz_get_ui(mpz_class(a & mpz_class("18446744073709551615")).get_mpz_t());
      uint64_t hi = mpz_get_ui(mpz_class(a >> 64).get_mpz_t());
      int128 v = (static_cast<int128>(hi) << 64) | static_cast<int128>(lo);
      r.push_back(sgn(e) < 0 ? -v : v);
    }
    m.push_back(std::move(r));
  }
  return m;
}

int int_rows_det_sign(const IntRows& ir) {
  if (fits_int128(ir)) {
    auto m = to_int128(ir);
    return bareiss_det_sign(m);
  }
  auto m = ir.rows;
  return bareiss_det_sign(m);
}

void require_same_dim(const std::vector<Point>& pts) {
  for (const Point& p : pts)
    if (p.size() != pts[0].size()) throw std::invalid_argument("dimension mismatch");
}

std::vector<std::vector<Rat>> difference_rows(const std::vector<Point>& pts) {
  std::vector<std::vector<Rat>> rows;
  rows.reserve(pts.size() - 1);
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rat> row;
    row.reserve(pts[0].size());
    for (size_t j = 0; j < pts[0].size(); ++j) row.push_back(pts[i][j] - pts[0][j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int det_sign(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 1;  // empty product convention
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw std::invalid_argument("dimension mismatch");
  return int_rows_det_sign(integerize(rows));
}

int orientation(const std::vector<Point>& pts) {
  if (pts.empty() || pts[0].empty()) throw std::invalid_argument("dimension mismatch");
  const size_t d = pts[0].size();
  if (pts.size() != d + 1) throw std::invalid_argument("dimension mismatch");
  require_same_dim(pts);
  return det_sign(difference_rows(pts));
}

bool affinely_independent(const std::vector<Point>& pts) {
  if (pts.empty()) return true;
  require_same_dim(pts);
  const size_t m = pts.size();
  if (m == 1) return true;
  const size_t d = pts[0].size();
  if (m - 1 > d) return false;  // more directions than the dimension allows
  auto rows = difference_rows(pts);
  if (m - 1 == d) return int_rows_det_sign(integerize(rows)) != 0;
  // Non-square: full row rank iff some (m-1)x(m-1) column minor is
  // nonzero. Only tiny cases reach this (m-1 < d <= 4).
  std::vector<size_t> idx(m - 1);
  for (size_t i = 0; i < m - 1; ++i) idx[i] = i;
  while (true) {
    std::vector<std::vector<Rat>> sq(m - 1, std::vector<Rat>(m - 1));
    for (size_t i = 0; i < m - 1; ++i)
      for (size_t j = 0; j < m - 1; ++j) sq[i][j] = rows[i][idx[j]];
    if (int_rows_det_sign(integerize(sq)) != 0) return true;
    size_t i = m - 1;
    while (i > 0 && idx[i - 1] == d - (m - 1) + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (size_t t = i; t < m - 1; ++t) idx[t] = idx[t - 1] + 1;
  }
  return false;
}

bool in_general_position(const std::vector<Point>& pts, int d) {
  if (d < 1) throw std::invalid_argument("dimension mismatch");
  for (const Point& p : pts)
    if (static_cast<int>(p.size()) != d) throw std::invalid_argument("dimension mismatch");
  const size_t n = pts.size();
  const size_t maxsub = std::min(n, static_cast<size_t>(d) + 1);
  // Subset sizes in increasing order: cheap failures (duplicate points,
  // collinear triples) surface before any larger determinant runs.
  for (size_t j = 2; j <= maxsub; ++j) {
    std::vector<size_t> idx(j);
    for (size_t i = 0; i < j; ++i) idx[i] = i;
    while (true) {
      std::vector<Point> sub;
      sub.reserve(j);
      for (size_t i : idx) sub.push_back(pts[i]);
      if (!affinely_independent(sub)) return false;
      size_t i = j;
      while (i > 0 && idx[i - 1] == n - j + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t t = i; t < j; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return true;
}

bool simplex_contains(const std::vector<Point>& simplex, const Point& p) {
  if (simplex.empty() || simplex[0].empty()) throw std::invalid_argument("dimension mismatch");
  const size_t d = simplex[0].size();
  if (simplex.size() != d + 1 || p.size() != d) throw std::invalid_argument("dimension mismatch");
  require_same_dim(simplex);
  const int base = orientation(simplex);
  if (base == 0) throw std::runtime_error("degenerate input");
  std::vector<Point> work = simplex;
  for (size_t i = 0; i <= d; ++i) {
    Point saved = work[i];
    work[i] = p;
    int s = orientation(work);
    work[i] = saved;
    if (s == 0) throw std::runtime_error("degenerate input");
    if (s != base) return false;
  }
  return true;
}

bool cone_member(const std::vector<Point>& span, const Point& q) {
  if (span.empty()) throw std::invalid_argument("dimension mismatch");
  const size_t d = span[0].size();
  if (span.size() != d || q.size() != d) throw std::invalid_argument("dimension mismatch");
  require_same_dim(span);
  // Solve M mu = q where the columns of M are the span vectors, by
  // Gaussian elimination over exact rationals (d <= 4, size is no concern).
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d + 1));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) m[i][j] = span[j][i];
    m[i][d] = q[i];
  }
  for (size_t col = 0; col < d; ++col) {
    size_t piv = col;
    while (piv < d && m[piv][col].is_zero()) ++piv;
    if (piv == d) throw std::runtime_error("degenerate input");
    std::swap(m[piv], m[col]);
    for (size_t i = 0; i < d; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      Rat f = m[i][col] / m[col][col];
      for (size_t j = col; j <= d; ++j) m[i][j] -= f * m[col][j];
    }
  }
  for (size_t i = 0; i < d; ++i) {
    Rat mu = m[i][d] / m[i][i];
    if (mu.sign() <= 0) return false;  // open cone: boundary is out
  }
  return true;
}

}  // namespace tvb
