#pragma once

#include <cstdint>
#include <functional>

#include "tvb/config.hpp"

namespace tvb {

// Clustered configuration: r-1 points around each vertex of the standard
// d-simplex (origin + unit vectors) at offset scale epsilon, plus the
// centroid as the lone point of color d+1. Cluster i's surplus colors run
// cyclically starting from color i. Offsets are drawn from the seed; if
// general position fails, offsets are re-drawn (budget 100, then error
// "cannot achieve general position").
Config make_sierksma(int d, int r, const Rat& epsilon, uint64_t seed);

// Rational approximation of the regular 3(r-1)-gon (unit circle, cos/sin
// rounded to nearest multiple of 1/denom) plus the exact center, with a
// valid placeholder coloring (vertex j -> j mod 3, center -> 3). Retries
// deterministically until general position holds; see README for why a
// plain denominator bump cannot fix even n-gons.
Config make_polygon(int r, long denom);

// Seed-deterministic random configuration: numerators uniform in
// [-coord_range, coord_range], fixed denominator 10^6, colors a
// seed-derived shuffle of the mode's class multiset. Re-drawn until
// general position holds (budget 100).
Config make_random(int d, Mode mode, int blocks, uint64_t seed, long coord_range = 1000000);

struct ColoringEnumOptions {
  // 0 = plain enumeration. Otherwise the number of polygon vertices: the
  // points are taken as vertices 0..n-1 in circular order plus a fixed
  // last point (the center), and only colorings lexicographically minimal
  // in their dihedral orbit are yielded.
  int dihedral_n = 0;
};

// Yields every coloring with the prescribed class sizes exactly once, in
// lexicographic order; visit returns false to stop early. Returns the
// number of colorings visited. Throws on size mismatch.
uint64_t enumerate_colorings(size_t n_points, const std::vector<int>& class_sizes,
                             const std::function<bool(const std::vector<int>&)>& visit,
                             const ColoringEnumOptions& opts = {});

// Number of colorings with the given class sizes (multinomial).
mpz_class count_colorings(size_t n_points, const std::vector<int>& class_sizes);

}  // namespace tvb
