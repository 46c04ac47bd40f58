#pragma once

#include "tvb/config.hpp"
#include "tvb/report.hpp"

namespace tvb {

struct BirchOptions {
  bool emit = false;  // collect canonical partitions in the report
  int jobs = 1;       // worker threads; totals are order-independent
};

// Number of unordered partitions of a birch(k) configuration into k
// rainbow (d+1)-blocks whose simplices all strictly contain the query
// point. Anchored backtracking: the block of the lowest-index unused
// color-0 point is chosen next, so each unordered partition appears
// exactly once. Candidate blocks per anchor are precomputed with the
// containment test hoisted out of the search loop.
CountReport count_colored_birch(const Config& cfg, const BirchOptions& opts = {});

// Same but colors are ignored: blocks are arbitrary (d+1)-subsets, each
// containing the query. Anchor = lowest-index unused point.
CountReport count_uncolored_birch(const Config& cfg, const BirchOptions& opts = {});

// For a configuration of 2(d+1) points with every color appearing exactly
// twice: the number of rainbow (d+1)-subsets whose simplex strictly
// contains the query. (There are 2^(d+1) rainbow subsets in total.)
long count_rainbow_simplices(const Config& cfg);

// Independent recheck of one partition against first principles: k
// disjoint blocks of size d+1 covering all indices, each block rainbow
// (when colored) and its simplex strictly containing the query.
bool verify_birch_partition(const Config& cfg, const Partition& p, bool colored = true);

}  // namespace tvb
