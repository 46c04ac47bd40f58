#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvb/config.hpp"
#include "tvb/partition.hpp"

namespace tvb {

inline constexpr const char* kToolName = "tvb";
inline constexpr const char* kToolVersion = "1.0.0";

// Result of one counting run.
struct CountReport {
  mpz_class count = 0;
  int dim = 0;
  Mode mode = Mode::Birch;
  int blocks = 0;
  std::string fingerprint;
  uint64_t seed = 0;  // seed that generated the config, 0 for file/word inputs
  std::optional<std::vector<Partition>> partitions;

  // diagnostics (not part of deterministic outputs)
  double elapsed_ms = 0.0;
  uint64_t nodes = 0;          // search tree nodes visited
  uint64_t feas_checks = 0;    // feasibility queries (LP or memoized)
  uint64_t lp_calls = 0;       // actual LP solves (cache misses)
  uint64_t pruned = 0;         // subtrees cut by feasibility/capacity pruning
};

// Theorem clause verdict for one count.
struct ClauseVerdict {
  std::string clause;     // short stable name, e.g. "evenness"
  bool applicable = false;  // side conditions (d, k/r ranges, primality) met
  bool conditional = false; // holds only under count > 0 (vacuous at 0)
  bool passed = true;
  std::string note;
};

struct BoundsVerdict {
  std::vector<ClauseVerdict> clauses;
  bool ok() const {
    for (const auto& c : clauses)
      if (c.applicable && !c.passed) return false;
    return true;
  }
};

// One row of a seed scan.
struct SeedResult {
  uint64_t seed = 0;
  mpz_class count = 0;
  bool even_ok = true;
  bool bound_ok = true;
  std::string fingerprint;
  double elapsed_ms = 0.0;
};

struct ScanSummary {
  std::vector<SeedResult> rows;  // sorted by seed
  mpz_class min_count = 0, max_count = 0;
  std::vector<uint64_t> parity_violations;
  std::vector<uint64_t> bound_violations;
  uint64_t min_seed = 0;
  std::string min_fingerprint;
  std::string min_config_text;  // canonical text of a minimum witness
  std::string note;             // free-form consistency remarks
};

// Machine CSV (stable schema; elapsed_ms always 0 so reruns are
// byte-identical — wall time lives in table/JSON output only).
std::string csv_report(const std::vector<SeedResult>& rows);
std::string csv_report(const CountReport& r, const BoundsVerdict& v);

// Human/JSON renderings. command_echo is the provenance line embedded
// into every report.
std::string json_report(const CountReport& r, const BoundsVerdict& v,
                        const std::string& command_echo, bool with_timing);
std::string json_report(const ScanSummary& s, const std::string& command_echo,
                        bool with_timing);
std::string table_report(const CountReport& r, const BoundsVerdict& v);
std::string table_report(const ScanSummary& s);

}  // namespace tvb
