#pragma once

#include <optional>

#include "tvb/config.hpp"
#include "tvb/partition.hpp"
#include "tvb/report.hpp"

namespace tvb {

struct TverbergOptions {
  bool emit = false;              // collect canonical partitions
  bool allow_large_blocks = false;  // audit flag: lift the d+1 size cap
  int jobs = 1;                   // worker threads; totals are order-independent
};

// Number of unordered partitions of a tverberg(r) configuration into r
// rainbow blocks with pairwise-common hull intersection. Points are
// assigned in index order to existing blocks (in creation order) or to a
// new block, which makes block minima increase and kills the r!
// overcount. Feasibility is tested when a block closes (reaches the size
// cap), via memoized checks on small sub-families of closed blocks;
// adding blocks only shrinks the common intersection, so the prune is
// safe.
CountReport count_colored_tverberg(const Config& cfg, const TverbergOptions& opts = {});

// Same search with the rainbow constraint switched off.
CountReport count_uncolored_tverberg(const Config& cfg, const TverbergOptions& opts = {});

// Independent recheck used on every emitted partition and by tests:
// disjoint, exhaustive, nonempty, size cap, rainbow (when colored), and
// one direct hull-intersection LP over all blocks (no memoization).
bool verify_tverberg_partition(const Config& cfg, const Partition& p, bool colored,
                               bool allow_large_blocks = false);

struct BirchView {
  Config birch;                // induced birch(k) instance, k = r - d
  Point witness;               // common point of the small blocks' hulls
  std::vector<int> point_map;  // birch point index -> original point index
};

// Reduction to a birch instance for partitions in worst-case shape: d
// blocks of exactly d points whose affine hulls meet in a single witness
// point, plus r-d full (d+1)-blocks whose hulls contain it. The full
// blocks become the birch points with the witness as query; if the
// singleton-color point sits in a full block it is recolored with the
// unique color appearing r-d-1 times among full-block points. Returns
// absent on any shape mismatch. Diagnostic only — not used by counting.
std::optional<BirchView> birch_view_of_tverberg(const Partition& p, const Config& cfg);

}  // namespace tvb
