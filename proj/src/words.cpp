#include "tvb/words.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace tvb {

Word Word::parse(const std::string& s) {
  if (s.empty() || s.size() % 2 != 0)
    throw std::runtime_error("bad word: '" + s + "'");
  Word w;
  for (size_t i = 0; i < s.size(); i += 2) {
    Letter l;
    if (s[i] == '+') l.sign = 1;
    else if (s[i] == '-') l.sign = -1;
    else throw std::runtime_error("bad word sign at position " + std::to_string(i));
    if (s[i + 1] < '0' || s[i + 1] > '9')
      throw std::runtime_error("bad word color at position " + std::to_string(i + 1));
    l.color = s[i + 1] - '0';
    w.letters.push_back(l);
  }
  w.validate(false);
  return w;
}

std::string Word::str() const {
  std::string s;
  for (const Letter& l : letters) {
    s.push_back(l.sign > 0 ? '+' : '-');
    s.push_back(static_cast<char>('0' + l.color));
  }
  return s;
}

void Word::validate(bool strict) const {
  if (letters.empty() || letters.size() % 3 != 0)
    throw std::runtime_error("word length must be a positive multiple of 3");
  if (!strict) return;
  int counts[3] = {0, 0, 0};
  for (const Letter& l : letters) {
    if (l.color < 0 || l.color > 2)
      throw std::runtime_error("strict word: colors must be 0, 1, 2");
    ++counts[l.color];
  }
  for (int c = 0; c < 3; ++c)
    if (counts[c] != k())
      throw std::runtime_error("strict word: color " + std::to_string(c) + " appears " +
                               std::to_string(counts[c]) + " times, expected " +
                               std::to_string(k()));
}

Word Word::flipped() const {
  Word w = *this;
  for (Letter& l : w.letters) l.sign = -l.sign;
  return w;
}

Word Word::canonical() const {
  return letters.front().sign > 0 ? *this : flipped();
}

mpz_class count_word_partitions(const Word& w, std::vector<Partition>* out) {
  w.validate(false);
  const int n = static_cast<int>(w.letters.size());
  std::vector<bool> used(n, false);
  std::vector<std::array<int, 3>> chosen;
  mpz_class count = 0;

  // Backtracking on the lowest unassigned position: it must be the first
  // letter of its triple, so its sign fixes the pattern (+-+ or -+-).
  auto rec = [&](auto&& self, int assigned) -> void {
    if (assigned == n) {
      ++count;
      if (out) {
        Partition p;
        for (const auto& t : chosen) p.blocks.push_back({t[0], t[1], t[2]});
        p.canonicalize();
        out->push_back(std::move(p));
      }
      return;
    }
    int first = 0;
    while (used[first]) ++first;
    const Letter& a = w.letters[first];
    used[first] = true;
    for (int mid = first + 1; mid < n; ++mid) {
      if (used[mid] || w.letters[mid].sign != -a.sign) continue;
      if (w.letters[mid].color == a.color) continue;
      used[mid] = true;
      for (int last = mid + 1; last < n; ++last) {
        if (used[last] || w.letters[last].sign != a.sign) continue;
        if (w.letters[last].color == a.color || w.letters[last].color == w.letters[mid].color)
          continue;
        used[last] = true;
        chosen.push_back({first, mid, last});
        self(self, assigned + 3);
        chosen.pop_back();
        used[last] = false;
      }
      used[mid] = false;
    }
    used[first] = false;
  };
  rec(rec, 0);
  return count;
}

namespace {

using Vec2 = std::array<Rat, 2>;

int cross_sign(const Vec2& a, const Vec2& b) {
  return (a[0] * b[1] - a[1] * b[0]).sign();
}

// 0 for the closed upper half (angle in [0, pi)), 1 for the lower.
int angular_half(const Vec2& u) {
  int sy = u[1].sign();
  if (sy > 0) return 0;
  if (sy < 0) return 1;
  return u[0].sign() > 0 ? 0 : 1;
}

// Strict angular order starting at the +x axis, counter-clockwise.
bool angular_less(const Vec2& a, const Vec2& b) {
  int ha = angular_half(a), hb = angular_half(b);
  if (ha != hb) return ha < hb;
  return cross_sign(a, b) > 0;
}

// Compares the CCW angles of two direction pairs, both known to lie in
// (0, pi): angle(a1->b1) < angle(a2->b2) iff cot1 > cot2, an exact
// cross/dot comparison that never touches transcendentals.
int compare_gap(const Vec2& a1, const Vec2& b1, const Vec2& a2, const Vec2& b2) {
  Rat cross1 = a1[0] * b1[1] - a1[1] * b1[0];
  Rat cross2 = a2[0] * b2[1] - a2[1] * b2[0];
  Rat dot1 = a1[0] * b1[0] + a1[1] * b1[1];
  Rat dot2 = a2[0] * b2[0] + a2[1] * b2[1];
  Rat lhs = dot1 * cross2, rhs = dot2 * cross1;
  if (lhs == rhs) return 0;
  return lhs > rhs ? -1 : 1;  // bigger cotangent = smaller angle
}

}  // namespace

Word sweep_encode(const Config& cfg, int halfspace_choice) {
  if (cfg.dim != 2 || cfg.mode != Mode::Birch)
    throw std::runtime_error("sweep encoding needs a planar birch configuration");
  const int n = static_cast<int>(cfg.points.size());
  const Point& p = *cfg.query;

  std::vector<Vec2> v(n);
  for (int i = 0; i < n; ++i) v[i] = {cfg.points[i][0] - p[0], cfg.points[i][1] - p[1]};

  // The 2n directions {v_i} and {-v_i}; in general position all distinct.
  std::vector<Vec2> dirs;
  dirs.reserve(2 * n);
  for (const Vec2& u : v) dirs.push_back(u);
  for (const Vec2& u : v) dirs.push_back(Vec2{-u[0], -u[1]});
  std::sort(dirs.begin(), dirs.end(), [](const Vec2& a, const Vec2& b) {
    if (angular_half(a) == angular_half(b) && cross_sign(a, b) == 0)
      throw std::runtime_error("degenerate input");
    return angular_less(a, b);
  });

  // Widest angular gap between consecutive directions; earliest start
  // direction wins ties (the +x-then-+y angular order starts the scan).
  size_t best = 0;
  for (size_t i = 1; i < dirs.size(); ++i) {
    const Vec2& a = dirs[i];
    const Vec2& b = dirs[(i + 1) % dirs.size()];
    if (compare_gap(dirs[best], dirs[(best + 1) % dirs.size()], a, b) < 0) best = i;
  }
  const Vec2& ga = dirs[best];
  const Vec2& gb = dirs[(best + 1) % dirs.size()];
  Vec2 c{ga[0] + gb[0], ga[1] + gb[1]};  // interior direction of the gap

  // Hit order: angle of the point's line mod pi, measured from c. The
  // representative w_i is whichever of +-v_i lies CCW-within-pi of c;
  // the raw sign records whether that representative is v_i itself.
  struct Rep {
    Vec2 w;
    int raw;  // +1 when w == v_i
    int index;
  };
  std::vector<Rep> reps(n);
  for (int i = 0; i < n; ++i) {
    int cs = cross_sign(c, v[i]);
    if (cs == 0) throw std::runtime_error("degenerate input");
    reps[i] = cs > 0 ? Rep{v[i], 1, i} : Rep{Vec2{-v[i][0], -v[i][1]}, -1, i};
  }
  std::sort(reps.begin(), reps.end(), [](const Rep& a, const Rep& b) {
    int cs = cross_sign(a.w, b.w);
    if (cs == 0) throw std::runtime_error("degenerate input");
    return cs > 0;
  });

  Word w;
  for (const Rep& r : reps) w.letters.push_back(Letter{r.raw, cfg.colors[r.index]});
  if (w.letters.front().sign < 0) w = w.flipped();  // '+' = first-hit halfplane
  if (halfspace_choice < 0) w = w.flipped();
  return w;
}

Config realize_word(const Word& w) {
  w.validate(true);
  const int n = static_cast<int>(w.letters.size());

  // Directions fanned over angles 2*atan(t), t in [1/2, 2] — a span
  // under a quarter turn, so the wrap-around gap of the +-direction set
  // is the strictly widest and the canonical sweep hits the points in
  // index order (see the header note).
  std::vector<Vec2> dir(n);
  for (int i = 0; i < n; ++i) {
    Rat t = Rat(1, 2) + (n == 1 ? Rat(0) : Rat(3 * i, 2 * (n - 1)));
    dir[i] = {Rat(1) - t * t, Rat(2) * t};
  }

  for (int attempt = 0; attempt < 100; ++attempt) {
    Config cfg;
    cfg.dim = 2;
    cfg.mode = Mode::Birch;
    cfg.blocks = n / 3;
    cfg.query = Point{Rat(0), Rat(0)};
    for (int i = 0; i < n; ++i) {
      // distinct radii, staggered a little more on every retry
      Rat rho = Rat(1) + Rat(i + 1, n + 2) + Rat(attempt * (i + 1), 1009 * (n + 2));
      Rat s = w.letters[i].sign > 0 ? rho : -rho;
      cfg.points.push_back(Point{s * dir[i][0], s * dir[i][1]});
      cfg.colors.push_back(w.letters[i].color);
    }
    cfg.validate_shape();
    if (cfg.verify_general_position()) return cfg;
  }
  throw std::runtime_error("cannot achieve general position");
}

}  // namespace tvb
