#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tvb/geometry.hpp"

namespace tvb {

enum class Mode { Birch, Tverberg };

const char* mode_name(Mode m);

// A colored point configuration, either
//   birch(k):    k*(d+1) points, d+1 colors with k points each, plus a
//                query point; partitions are k rainbow (d+1)-blocks
//                whose simplices all contain the query point, or
//   tverberg(r): (d+1)*(r-1)+1 points, d+2 colors with sizes
//                (r-1, ..., r-1, 1); partitions are r rainbow blocks with
//                intersecting convex hulls.
struct Config {
  int dim = 0;
  Mode mode = Mode::Birch;
  int blocks = 0;  // k (birch) or r (tverberg)
  std::vector<Point> points;
  std::vector<int> colors;      // colors[i] colors points[i]
  std::optional<Point> query;   // birch only
  bool general_position = false;  // cached result of verify_general_position()

  int color_count() const { return mode == Mode::Birch ? dim + 1 : dim + 2; }
  int expected_points() const {
    return mode == Mode::Birch ? blocks * (dim + 1) : (dim + 1) * (blocks - 1) + 1;
  }
  std::vector<int> expected_class_sizes() const;

  // Shape invariants: counts, class sizes, dimensions, query presence.
  // Throws std::runtime_error naming the violated constraint.
  void validate_shape() const;

  // Runs the exact general-position check over the relevant point set
  // (points plus query in birch mode), caches and returns the result.
  bool verify_general_position();

  // Same geometry, new coloring. Keeps the cached general-position flag:
  // colors play no role in that predicate.
  Config with_colors(std::vector<int> new_colors) const;

  // Canonical text form == file format body. Equal configurations produce
  // byte-identical text; the fingerprint is FNV-1a 64 over these bytes.
  std::string canonical_text() const;
  std::string fingerprint() const;

  // File round-trip. Loading validates shape AND general position
  // ("general position violated" on failure), so a loaded config is
  // always safe to feed to the counting routines.
  static Config parse(std::istream& in, const std::string& source_name);
  static Config load(const std::string& path);
  void save(const std::string& path) const;
};

uint64_t fnv1a64(const std::string& bytes);

}  // namespace tvb
