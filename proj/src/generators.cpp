#include "tvb/generators.hpp"

#include <mpfr.h>

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tvb/rng.hpp"

namespace tvb {

namespace {

constexpr int kRetryBudget = 100;

[[noreturn]] void gp_exhausted() {
  throw std::runtime_error("cannot achieve general position");
}

}  // namespace

Config make_sierksma(int d, int r, const Rat& epsilon, uint64_t seed) {
  if (d < 1 || r < 2) throw std::invalid_argument("make_sierksma: need d >= 1, r >= 2");
  if (epsilon.sign() <= 0) throw std::invalid_argument("make_sierksma: epsilon must be positive");

  // Standard simplex vertices: origin and unit vectors; centroid inside.
  std::vector<Point> vertices;
  for (int i = 0; i <= d; ++i) {
    Point v(d, Rat(0));
    if (i > 0) v[i - 1] = Rat(1);
    vertices.push_back(std::move(v));
  }
  Point centroid(d, Rat(1, d + 1));

  SplitMix64 rng = substream(seed, 0x5153);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    Config cfg;
    cfg.dim = d;
    cfg.mode = Mode::Tverberg;
    cfg.blocks = r;
    for (int i = 0; i <= d; ++i) {
      for (int m = 0; m < r - 1; ++m) {
        Point p(d);
        for (int t = 0; t < d; ++t) {
          // offset component in [-1, 1] with denominator 1000
          Rat u(rng.range(-1000, 1000), 1000);
          p[t] = vertices[i][t] + epsilon * u;
        }
        cfg.points.push_back(std::move(p));
        // cyclic coloring: cluster i's surplus starts at color i
        cfg.colors.push_back((i + m) % (d + 1));
      }
    }
    cfg.points.push_back(centroid);
    cfg.colors.push_back(d + 1);
    cfg.validate_shape();
    if (cfg.verify_general_position()) return cfg;
  }
  gp_exhausted();
}

namespace {

// cos/sin of 2*pi*num/den, rounded to the nearest multiple of 1/denom.
// 256-bit MPFR leaves rounding ambiguity no realistic chance; exact
// rational ties (special angles) round to even, deterministically.
Rat rounded_trig(bool want_sin, long num, long den, long denom) {
  mpfr_t angle, val;
  mpfr_init2(angle, 256);
  mpfr_init2(val, 256);
  mpfr_const_pi(angle, MPFR_RNDN);
  mpfr_mul_si(angle, angle, 2 * num, MPFR_RNDN);
  mpfr_div_si(angle, angle, den, MPFR_RNDN);
  if (want_sin) mpfr_sin(val, angle, MPFR_RNDN);
  else mpfr_cos(val, angle, MPFR_RNDN);
  mpfr_mul_si(val, val, denom, MPFR_RNDN);
  mpz_class scaled;
  mpfr_get_z(scaled.get_mpz_t(), val, MPFR_RNDN);
  mpfr_clear(angle);
  mpfr_clear(val);
  return Rat(scaled, mpz_class(denom));
}

}  // namespace

Config make_polygon(int r, long denom) {
  if (r < 2) throw std::invalid_argument("make_polygon: need r >= 2");
  if (denom < 1) throw std::invalid_argument("make_polygon: denom must be positive");
  const int n = 3 * (r - 1);

  // Plain denominator bumps cannot help even n-gons: nearest rounding is
  // an odd function, so exactly antipodal vertex pairs stay exactly
  // antipodal (and hence collinear with the center) for every denominator.
  // Attempt t therefore also rotates the whole polygon by the tiny angle
  // t * 2pi/(1000 n) and staggers the per-vertex denominator by t*(j+1).
  // Attempt 0 is the unperturbed construction.
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    Config cfg;
    cfg.dim = 2;
    cfg.mode = Mode::Tverberg;
    cfg.blocks = r;
    for (int j = 0; j < n; ++j) {
      // angle = 2pi * (1000*j + attempt) / (1000*n)
      long num = 1000L * j + attempt;
      long den = 1000L * n;
      long dj = denom + static_cast<long>(attempt) * (j + 1);
      Point p{rounded_trig(false, num, den, dj), rounded_trig(true, num, den, dj)};
      cfg.points.push_back(std::move(p));
      cfg.colors.push_back(j % 3);  // placeholder coloring, valid class sizes
    }
    cfg.points.push_back(Point{Rat(0), Rat(0)});  // exact center
    cfg.colors.push_back(3);
    cfg.validate_shape();
    if (cfg.verify_general_position()) return cfg;
  }
  gp_exhausted();
}

Config make_random(int d, Mode mode, int blocks, uint64_t seed, long coord_range) {
  if (d < 1) throw std::invalid_argument("make_random: need d >= 1");
  if (coord_range < 1) throw std::invalid_argument("make_random: empty coordinate range");
  constexpr long kDen = 1000000;

  Config proto;
  proto.dim = d;
  proto.mode = mode;
  proto.blocks = blocks;
  std::vector<int> palette;  // the color multiset to shuffle
  {
    Config shape = proto;
    const std::vector<int> sizes = shape.expected_class_sizes();
    for (size_t c = 0; c < sizes.size(); ++c)
      for (int i = 0; i < sizes[c]; ++i) palette.push_back(static_cast<int>(c));
  }

  SplitMix64 rng = substream(seed, 0x524E44);
  const int npts = proto.expected_points();
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    Config cfg = proto;
    auto draw_point = [&] {
      Point p(d);
      for (int t = 0; t < d; ++t) p[t] = Rat(rng.range(-coord_range, coord_range), kDen);
      return p;
    };
    for (int i = 0; i < npts; ++i) cfg.points.push_back(draw_point());
    if (mode == Mode::Birch) cfg.query = draw_point();
    std::vector<int> colors = palette;
    rng.shuffle(colors);
    cfg.colors = std::move(colors);
    cfg.validate_shape();
    if (cfg.verify_general_position()) return cfg;
  }
  gp_exhausted();
}

namespace {

// Lexicographically smallest representative test under the dihedral group
// of the n-gon (center = last point, fixed by every symmetry).
bool dihedral_lexmin(const std::vector<int>& coloring, int n) {
  std::vector<int> image(coloring.size());
  image.back() = coloring.back();
  for (int refl = 0; refl < 2; ++refl) {
    for (int shift = 0; shift < n; ++shift) {
      if (refl == 0 && shift == 0) continue;  // identity
      for (int j = 0; j < n; ++j) {
        int src = refl ? (n - 1 - j + shift) % n : (j + shift) % n;
        image[j] = coloring[src];
      }
      if (std::lexicographical_compare(image.begin(), image.end() - 1,
                                       coloring.begin(), coloring.end() - 1))
        return false;
    }
  }
  return true;
}

}  // namespace

uint64_t enumerate_colorings(size_t n_points, const std::vector<int>& class_sizes,
                             const std::function<bool(const std::vector<int>&)>& visit,
                             const ColoringEnumOptions& opts) {
  long total = std::accumulate(class_sizes.begin(), class_sizes.end(), 0L);
  if (total != static_cast<long>(n_points))
    throw std::runtime_error("class sizes sum to " + std::to_string(total) + ", expected " +
                             std::to_string(n_points) + " points");
  if (opts.dihedral_n < 0 || (opts.dihedral_n > 0 &&
                              static_cast<size_t>(opts.dihedral_n) + 1 != n_points))
    throw std::runtime_error("dihedral dedup needs n polygon vertices plus the center");

  std::vector<int> remaining = class_sizes;
  std::vector<int> coloring(n_points, -1);
  uint64_t visited = 0;
  bool stop = false;

  // Lexicographic DFS over positions; trying colors in increasing order
  // makes the output order the lexicographic one.
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (stop) return;
    if (pos == n_points) {
      if (opts.dihedral_n > 0 && !dihedral_lexmin(coloring, opts.dihedral_n)) return;
      ++visited;
      if (!visit(coloring)) stop = true;
      return;
    }
    for (size_t c = 0; c < remaining.size() && !stop; ++c) {
      if (remaining[c] == 0) continue;
      --remaining[c];
      coloring[pos] = static_cast<int>(c);
      self(self, pos + 1);
      coloring[pos] = -1;
      ++remaining[c];
    }
  };
  rec(rec, 0);
  return visited;
}

mpz_class count_colorings(size_t n_points, const std::vector<int>& class_sizes) {
  long total = std::accumulate(class_sizes.begin(), class_sizes.end(), 0L);
  if (total != static_cast<long>(n_points))
    throw std::runtime_error("class sizes sum to " + std::to_string(total) + ", expected " +
                             std::to_string(n_points) + " points");
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), n_points);
  for (int s : class_sizes) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(s));
    result /= f;
  }
  return result;
}

}  // namespace tvb
