#pragma once

#include <string>
#include <vector>

#include "tvb/config.hpp"
#include "tvb/partition.hpp"

namespace tvb {

// A colored +/- word: the planar sweep encoding of a birch(k) instance.
struct Letter {
  int sign;   // +1 or -1
  int color;  // 0..9 (0..2 for realizable words)
  bool operator==(const Letter& o) const { return sign == o.sign && color == o.color; }
};

struct Word {
  std::vector<Letter> letters;

  // Compact string form: sign then color digit per letter, e.g. "+0-1+2".
  static Word parse(const std::string& s);
  std::string str() const;

  int k() const { return static_cast<int>(letters.size()) / 3; }

  // Length divisible by 3; in strict mode additionally colors are 0..2,
  // each appearing exactly k times. Throws naming the violation.
  void validate(bool strict) const;

  // All signs flipped (+-+ patterns and -+- patterns trade places).
  Word flipped() const;
  // Representative with a '+' first letter (flip-normalized).
  Word canonical() const;

  bool operator==(const Word& o) const { return letters == o.letters; }
};

// Number of unordered partitions of the word's positions into triples
// that read +-+ or -+- in position order and carry three distinct
// colors. Backtracks on the lowest unassigned position. If out is given,
// the partitions themselves are appended in discovery order (canonical:
// triples sorted by smallest position).
mpz_class count_word_partitions(const Word& w, std::vector<Partition>* out = nullptr);

// Sweep encoding of a planar birch configuration: points ordered by the
// moment a rotating line through the query point hits them, signed by
// the halfplane they are in. The starting direction is canonical (widest
// angular gap of the point directions and their negatives, ties toward
// the +x-then-+y angular order); halfspace_choice=+1 names the halfplane
// of the first-hit point '+', -1 names it '-'.
Word sweep_encode(const Config& cfg, int halfspace_choice = +1);

// A planar birch(k) configuration with query point at the origin whose
// canonical sweep encoding is canonical(w): directions fanned across a
// quarter-plane so the wrap-around gap is the widest, '+' letters on the
// ray, '-' letters antipodal, staggered radii. General position is
// verified and deterministically retried.
Config realize_word(const Word& w);

}  // namespace tvb
