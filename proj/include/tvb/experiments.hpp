#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvb/bounds.hpp"
#include "tvb/config.hpp"
#include "tvb/report.hpp"

namespace tvb {

enum class OutFormat { Table, Csv, Json };

OutFormat parse_format(const std::string& name);  // "table" | "csv" | "json"

// What the count command should count. Exactly one source is active.
struct CountSource {
  enum class Kind { Generator, Word, File };
  Kind kind = Kind::Generator;
  // generator source
  std::string gen = "sierksma";  // "sierksma" | "polygon" | "random"
  int dim = 2;
  Mode mode = Mode::Tverberg;
  int blocks = 2;
  Rat epsilon = Rat(1, 1000);
  long denom = 1000000;
  long coord_range = 1000000;
  uint64_t seed = 1;
  // word / file source
  std::string word;
  std::string path;
};

struct CountRunOptions {
  bool emit = false;
  bool allow_large_blocks = false;
  int jobs = 1;
};

// Builds the configuration (generator, word realization, or file load).
Config build_config(const CountSource& src);

// Counts and checks the theorem clauses. Word sources are additionally
// cross-checked against the combinatorial word count (mismatch is a bug,
// reported as an error).
std::pair<CountReport, BoundsVerdict> run_count(const CountSource& src,
                                                const CountRunOptions& opts);

struct ScanParams {
  int dim = 2;
  Mode mode = Mode::Birch;
  int blocks = 3;
  uint64_t seed = 1;       // first seed
  uint64_t num_seeds = 100;  // seeds seed .. seed+num_seeds-1
  long coord_range = 1000000;
  int jobs = 1;
};

// Random-configuration scan: per-seed counts, clause verdicts, violation
// lists, minimum witness. Generator failures are recorded in the note and
// skipped. Rows come out sorted by seed regardless of jobs.
ScanSummary run_scan(const ScanParams& params);

struct MinColoringParams {
  // base geometry: polygon generator or config file
  bool use_polygon = true;
  int r = 4;
  long denom = 1000000;
  std::string path;  // file source when use_polygon is false
  bool dedup_symmetry = false;  // dihedral dedup for the polygon
  uint64_t budget = 10000000;   // max colorings to test
  int jobs = 1;
};

struct MinColoringResult {
  mpz_class min_count;
  std::vector<int> best_colors;  // witness coloring (first minimum found)
  uint64_t colorings_tested = 0;
  uint64_t feasible_partitions = 0;  // uncolored feasible partitions of the base
  Config best_config;
  mpz_class direct_recount;  // independent count of the winner; == min_count
};

// Minimum colored count over every coloring with the mode's class sizes.
// Feasible uncolored partitions are enumerated once; each coloring is then
// scored by bitset algebra over monochromatic point pairs, and the winner
// is re-verified by a direct colored count. Throws when the coloring
// space exceeds the budget (the message advises the symmetry-dedup flag).
MinColoringResult run_min_coloring(const MinColoringParams& params);

struct TightnessParams {
  int dim = 2;
  int k = 4;
  uint64_t seed = 1;
  uint64_t budget = 100000;  // attempts (words for d=2, then random configs)
  long coord_range = 1000000;
  int jobs = 1;
};

struct TightnessResult {
  bool found = false;
  uint64_t attempts = 0;
  mpz_class target;  // the largest applicable lower bound
  std::optional<Config> witness;
  mpz_class witness_count;
  std::string how;  // "word-realization" or "random-config"
};

// Searches for a configuration whose colored birch count equals the
// applicable lower bound exactly. d=2 tries seeded random words first
// (realized and re-counted geometrically); d=3 samples random
// configurations. "not found" within budget is a valid outcome.
TightnessResult run_tightness(const TightnessParams& params);

struct TableParams {
  int r_min = 2, r_max = 8;
  bool heavy = false;  // unlocks the expensive cells
  uint64_t seed = 1;
  uint64_t random_samples = 20;
  Rat epsilon = Rat(1, 1000);
  long denom = 1000000;
  int jobs = 1;
};

struct TableRow {
  int r = 0;
  std::string sierksma, kleist, random_min, bound;
};

struct TableResult {
  std::vector<TableRow> rows;
  std::string note;
};

// Desk-scale reproduction of the d=2 survey table: exact Sierksma counts
// (r <= 6 by default, 7 and 8 behind heavy), Kleist minima via
// min-coloring (r <= 5 default, 6 behind heavy with symmetry dedup, 7 and
// 8 are blank), observed random minima (r <= 6 default, 7 behind heavy),
// and the analytic bound column (bracketed for non-prime r).
TableResult run_table(const TableParams& params);

// Renderers for the composite results (count/scan renderings live in
// report.hpp). `echo` is the provenance line; CSV embeds it as leading
// '#' comments so reruns stay byte-identical.
std::string render_table(const TableResult& t, OutFormat f, const std::string& echo);
std::string render_min_coloring(const MinColoringResult& m, OutFormat f, const std::string& echo);
std::string render_tightness(const TightnessResult& t, OutFormat f, const std::string& echo);
std::string csv_provenance(const std::string& echo);

}  // namespace tvb
