#include "tvb/experiments.hpp"

#include <algorithm>
#include <bit>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tvb/birch.hpp"
#include "tvb/generators.hpp"
#include "tvb/rng.hpp"
#include "tvb/tverberg.hpp"
#include "tvb/words.hpp"

namespace tvb {

namespace {
using nlohmann::json;
}

OutFormat parse_format(const std::string& name) {
  if (name == "table") return OutFormat::Table;
  if (name == "csv") return OutFormat::Csv;
  if (name == "json") return OutFormat::Json;
  throw std::invalid_argument("unknown format: " + name);
}

Config build_config(const CountSource& src) {
  switch (src.kind) {
    case CountSource::Kind::Generator:
      if (src.gen == "sierksma") return make_sierksma(src.dim, src.blocks, src.epsilon, src.seed);
      if (src.gen == "polygon") return make_polygon(src.blocks, src.denom);
      if (src.gen == "random")
        return make_random(src.dim, src.mode, src.blocks, src.seed, src.coord_range);
      throw std::invalid_argument("unknown generator: " + src.gen);
    case CountSource::Kind::Word:
      return realize_word(Word::parse(src.word));
    case CountSource::Kind::File:
      return Config::load(src.path);
  }
  throw std::logic_error("unreachable");
}

namespace {

std::pair<CountReport, BoundsVerdict> count_and_check(const Config& cfg,
                                                      const CountRunOptions& o) {
  if (cfg.mode == Mode::Birch) {
    BirchOptions bo;
    bo.emit = o.emit;
    bo.jobs = o.jobs;
    CountReport rep = count_colored_birch(cfg, bo);
    return {std::move(rep), check_birch_bounds(rep.count, cfg.dim, cfg.blocks)};
  }
  TverbergOptions to;
  to.emit = o.emit;
  to.allow_large_blocks = o.allow_large_blocks;
  to.jobs = o.jobs;
  CountReport rep = count_colored_tverberg(cfg, to);
  return {std::move(rep), check_tverberg_bounds(rep.count, cfg.dim, cfg.blocks)};
}

}  // namespace

std::pair<CountReport, BoundsVerdict> run_count(const CountSource& src,
                                                const CountRunOptions& opts) {
  Config cfg = build_config(src);
  auto result = count_and_check(cfg, opts);
  if (src.kind == CountSource::Kind::Generator && src.gen != "polygon")
    result.first.seed = src.seed;
  if (src.kind == CountSource::Kind::Word) {
    // Dual route: the combinatorial word count must agree with the
    // geometric count of the realization.
    mpz_class wc = count_word_partitions(Word::parse(src.word));
    if (wc != result.first.count)
      throw std::logic_error("word count " + wc.get_str() + " disagrees with geometric count " +
                             result.first.count.get_str());
  }
  return result;
}

ScanSummary run_scan(const ScanParams& params) {
  struct Row {
    SeedResult sr;
    bool failed = false;
    std::string fail_msg;
  };
  const uint64_t n = params.num_seeds;
  std::vector<Row> rows(n);

  auto work = [&](uint64_t lo, uint64_t hi) {
    for (uint64_t i = lo; i < hi; ++i) {
      const uint64_t seed = params.seed + i;
      Row& row = rows[i];
      row.sr.seed = seed;
      try {
        Config cfg = make_random(params.dim, params.mode, params.blocks, seed,
                                 params.coord_range);
        CountRunOptions co;
        co.jobs = 1;  // parallelism lives at the seed level
        auto [rep, verdict] = count_and_check(cfg, co);
        row.sr.count = rep.count;
        row.sr.fingerprint = rep.fingerprint;
        row.sr.elapsed_ms = rep.elapsed_ms;
        row.sr.even_ok = evenness_ok(verdict);
        row.sr.bound_ok = lower_bounds_ok(verdict);
      } catch (const std::exception& e) {
        row.failed = true;
        row.fail_msg = e.what();
      }
    }
  };

  const int jobs = std::max(1, params.jobs);
  if (jobs == 1 || n <= 1) {
    work(0, n);
  } else {
    const uint64_t nchunks = std::min<uint64_t>(jobs, n);
    const uint64_t per = (n + nchunks - 1) / nchunks;
    std::vector<std::thread> threads;
    for (uint64_t c = 0; c < nchunks; ++c) {
      uint64_t lo = c * per, hi = std::min(n, lo + per);
      threads.emplace_back([&, lo, hi] { work(lo, hi); });
    }
    for (auto& t : threads) t.join();
  }

  ScanSummary s;
  std::string fail_notes;
  bool have = false;
  for (const Row& row : rows) {
    if (row.failed) {
      fail_notes += "seed " + std::to_string(row.sr.seed) + ": " + row.fail_msg + "; ";
      continue;
    }
    s.rows.push_back(row.sr);
    if (!row.sr.even_ok) s.parity_violations.push_back(row.sr.seed);
    if (!row.sr.bound_ok) s.bound_violations.push_back(row.sr.seed);
    if (!have || row.sr.count < s.min_count) {
      s.min_count = row.sr.count;
      s.min_seed = row.sr.seed;
      s.min_fingerprint = row.sr.fingerprint;
      have = true;
    }
    if (s.rows.size() == 1 || row.sr.count > s.max_count) s.max_count = row.sr.count;
  }
  if (have) {
    Config witness = make_random(params.dim, params.mode, params.blocks, s.min_seed,
                                 params.coord_range);
    s.min_config_text = witness.canonical_text();
  }
  std::ostringstream note;
  if (params.mode == Mode::Tverberg && params.dim == 2 && params.blocks == 5 && have) {
    note << "observed minimum " << s.min_count.get_str()
         << (s.min_count <= 12 ? " <= 12: consistent" : " > 12: flagged");
  }
  if (!fail_notes.empty()) {
    if (note.tellp() > 0) note << " | ";
    note << "generator failures: " << fail_notes;
  }
  s.note = note.str();
  return s;
}

MinColoringResult run_min_coloring(const MinColoringParams& params) {
  Config base = params.use_polygon ? make_polygon(params.r, params.denom)
                                   : Config::load(params.path);
  if (base.mode != Mode::Tverberg)
    throw std::invalid_argument("min-coloring needs a tverberg configuration");
  if (params.dedup_symmetry && !params.use_polygon)
    throw std::invalid_argument("symmetry dedup assumes the polygon layout");

  const int n = static_cast<int>(base.points.size());
  const std::vector<int> sizes = base.expected_class_sizes();

  ColoringEnumOptions copts;
  if (params.dedup_symmetry) copts.dihedral_n = n - 1;  // vertices; center is fixed

  const mpz_class space = count_colorings(n, sizes);
  mpz_class effective = space;
  if (copts.dihedral_n > 0) effective /= 2 * copts.dihedral_n;
  if (effective > params.budget) {
    std::string advice = params.dedup_symmetry
                             ? "raise --budget"
                             : "enable --dedup-symmetry or raise --budget";
    throw std::runtime_error("coloring space " + space.get_str() + " exceeds budget " +
                             std::to_string(params.budget) + "; " + advice);
  }

  // One uncolored enumeration of all feasible partitions; colorings are
  // then scored by bitset algebra over their monochromatic pairs.
  TverbergOptions topts;
  topts.emit = true;
  topts.jobs = params.jobs;
  CountReport ur = count_uncolored_tverberg(base, topts);
  const std::vector<Partition>& parts = *ur.partitions;
  const size_t np = parts.size();
  const size_t nwords = (np + 63) / 64;

  std::vector<std::vector<uint64_t>> pairbits(static_cast<size_t>(n) * n);
  for (size_t pi = 0; pi < np; ++pi) {
    for (const auto& blk : parts[pi].blocks) {
      for (size_t a = 0; a < blk.size(); ++a) {
        for (size_t b = a + 1; b < blk.size(); ++b) {
          auto& bits = pairbits[static_cast<size_t>(blk[a]) * n + blk[b]];
          if (bits.empty()) bits.assign(nwords, 0);
          bits[pi >> 6] |= uint64_t(1) << (pi & 63);
        }
      }
    }
  }
  std::vector<uint64_t> tail(nwords, ~uint64_t(0));
  if (nwords > 0 && (np & 63) != 0) tail[nwords - 1] = (uint64_t(1) << (np & 63)) - 1;

  MinColoringResult res;
  res.feasible_partitions = np;
  bool have = false;
  bool over_budget = false;
  uint64_t visited = 0;
  mpz_class best_count;
  std::vector<int> best;
  std::vector<uint64_t> acc(nwords);
  std::vector<std::vector<int>> byc(sizes.size());

  enumerate_colorings(
      static_cast<size_t>(n), sizes,
      [&](const std::vector<int>& cols) {
        if (++visited > params.budget) {
          over_budget = true;
          return false;
        }
        for (auto& v : byc) v.clear();
        for (int i = 0; i < n; ++i) byc[cols[i]].push_back(i);
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& cls : byc) {
          for (size_t a = 0; a < cls.size(); ++a) {
            for (size_t b = a + 1; b < cls.size(); ++b) {
              const auto& bits = pairbits[static_cast<size_t>(cls[a]) * n + cls[b]];
              if (bits.empty()) continue;
              for (size_t w = 0; w < nwords; ++w) acc[w] |= bits[w];
            }
          }
        }
        uint64_t rainbow = 0;
        for (size_t w = 0; w < nwords; ++w)
          rainbow += static_cast<uint64_t>(std::popcount(~acc[w] & tail[w]));
        if (!have || mpz_class(rainbow) < best_count) {
          best_count = rainbow;
          best = cols;
          have = true;
        }
        return best_count != 0;  // nothing beats zero
      },
      copts);

  if (over_budget)
    throw std::runtime_error(
        "coloring enumeration exceeded budget " + std::to_string(params.budget) +
        (params.dedup_symmetry ? "; raise --budget" : "; enable --dedup-symmetry or raise --budget"));
  if (!have) throw std::logic_error("no coloring enumerated");

  res.min_count = best_count;
  res.best_colors = best;
  res.colorings_tested = visited;
  res.best_config = base.with_colors(best);

  TverbergOptions vopts;
  vopts.jobs = params.jobs;
  res.direct_recount = count_colored_tverberg(res.best_config, vopts).count;
  if (res.direct_recount != res.min_count)
    throw std::logic_error("min-coloring winner failed the direct recount: scan said " +
                           res.min_count.get_str() + ", direct count is " +
                           res.direct_recount.get_str());
  return res;
}

TightnessResult run_tightness(const TightnessParams& params) {
  if (params.dim != 2 && params.dim != 3)
    throw std::invalid_argument("tightness search supports d=2 and d=3");
  TightnessResult res;
  res.target = birch_bound_value(params.dim, params.k);

  auto try_config = [&](const Config& cfg, const char* how) {
    BirchOptions bo;
    bo.jobs = params.jobs;
    CountReport rep = count_colored_birch(cfg, bo);
    if (rep.count == res.target) {
      res.found = true;
      res.witness = cfg;
      res.witness_count = rep.count;
      res.how = how;
      return true;
    }
    return false;
  };

  uint64_t word_budget = 0;
  if (params.dim == 2) {
    // Words are cheap to score combinatorially, so try them first and
    // only realize candidates that already hit the target.
    word_budget = params.budget / 2;
    SplitMix64 rng = substream(params.seed, 0x574F5244ull);
    const int k = params.k;
    const int len = 3 * k;
    std::vector<int> palette;
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < k; ++i) palette.push_back(c);
    for (uint64_t a = 0; a < word_budget && !res.found; ++a) {
      ++res.attempts;
      uint64_t bits = rng.next();
      std::vector<int> perm = palette;
      rng.shuffle(perm);
      Word w;
      w.letters.resize(len);
      for (int i = 0; i < len; ++i)
        w.letters[i] = Letter{((bits >> (i % 64)) & 1) ? +1 : -1, perm[i]};
      if (count_word_partitions(w) != res.target) continue;
      try {
        Config cfg = realize_word(w);
        if (try_config(cfg, "word-realization")) break;
      } catch (const std::exception&) {
        continue;  // unrealizable draw; keep searching
      }
    }
  }

  const uint64_t config_budget = params.budget - word_budget;
  for (uint64_t i = 0; i < config_budget && !res.found; ++i) {
    ++res.attempts;
    try {
      Config cfg =
          make_random(params.dim, Mode::Birch, params.k, params.seed + i, params.coord_range);
      if (try_config(cfg, "random-config")) break;
    } catch (const std::exception&) {
      continue;
    }
  }
  return res;
}

TableResult run_table(const TableParams& params) {
  TableResult t;
  for (int r = params.r_min; r <= params.r_max; ++r) {
    TableRow row;
    row.r = r;

    const bool sier_ok = r <= 6 || params.heavy;
    if (sier_ok) {
      Config cfg = make_sierksma(2, r, params.epsilon, params.seed);
      TverbergOptions o;
      o.jobs = params.jobs;
      row.sierksma = count_colored_tverberg(cfg, o).count.get_str();
    } else {
      row.sierksma = "skipped(budget)";
    }

    if (r >= 7) {
      row.kleist = "-";  // coloring scan out of reach at this size
    } else if (r <= 5 || params.heavy) {
      MinColoringParams mp;
      mp.use_polygon = true;
      mp.r = r;
      mp.denom = params.denom;
      mp.dedup_symmetry = (r >= 6);
      mp.jobs = params.jobs;
      row.kleist = run_min_coloring(mp).min_count.get_str();
    } else {
      row.kleist = "skipped(budget)";
    }

    const bool rnd_ok = r <= 6 || (params.heavy && r == 7);
    if (rnd_ok) {
      mpz_class mn;
      bool have = false;
      for (uint64_t i = 0; i < params.random_samples; ++i) {
        try {
          Config cfg = make_random(2, Mode::Tverberg, r, params.seed + i, 1000000);
          TverbergOptions o;
          o.jobs = params.jobs;
          mpz_class c = count_colored_tverberg(cfg, o).count;
          if (!have || c < mn) {
            mn = c;
            have = true;
          }
        } catch (const std::exception&) {
        }
      }
      row.random_min = have ? mn.get_str() : "skipped(budget)";
    } else {
      row.random_min = "skipped(budget)";
    }

    bool bracketed = false;
    mpz_class b = tverberg_bound_value(2, r, &bracketed);
    row.bound = bracketed ? "(" + b.get_str() + ")" : b.get_str();
    t.rows.push_back(row);
  }
  t.note = "random column: observed minimum over " + std::to_string(params.random_samples) +
           " samples per r, not an exact minimum";
  return t;
}

std::string csv_provenance(const std::string& echo) {
  return std::string("# tool: ") + kToolName + " " + kToolVersion + "\n# spec: " + echo + "\n";
}

std::string render_table(const TableResult& t, OutFormat f, const std::string& echo) {
  if (f == OutFormat::Json) {
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = echo;
    json rows = json::array();
    for (const auto& r : t.rows)
      rows.push_back({{"r", r.r},
                      {"sierksma", r.sierksma},
                      {"kleist", r.kleist},
                      {"random_min", r.random_min},
                      {"bound", r.bound}});
    j["rows"] = rows;
    j["note"] = t.note;
    return j.dump(2) + "\n";
  }
  if (f == OutFormat::Csv) {
    std::ostringstream os;
    os << csv_provenance(echo);
    os << "r,sierksma,kleist,random_min,bound\n";
    for (const auto& r : t.rows)
      os << r.r << ',' << r.sierksma << ',' << r.kleist << ',' << r.random_min << ',' << r.bound
         << "\n";
    os << "# note: " << t.note << "\n";
    return os.str();
  }
  std::ostringstream os;
  auto col = [](const std::string& s, size_t w) {
    std::string out = s;
    while (out.size() < w) out += ' ';
    return out;
  };
  os << col("r", 4) << col("sierksma", 18) << col("kleist", 18) << col("random_min", 18)
     << "bound\n";
  for (const auto& r : t.rows)
    os << col(std::to_string(r.r), 4) << col(r.sierksma, 18) << col(r.kleist, 18)
       << col(r.random_min, 18) << r.bound << "\n";
  os << "note: " << t.note << "\n";
  return os.str();
}

std::string render_min_coloring(const MinColoringResult& m, OutFormat f,
                                const std::string& echo) {
  std::string colors;
  for (size_t i = 0; i < m.best_colors.size(); ++i) {
    if (i) colors += ' ';
    colors += std::to_string(m.best_colors[i]);
  }
  if (f == OutFormat::Json) {
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = echo;
    j["min_count"] = m.min_count.get_str();
    j["colorings_tested"] = m.colorings_tested;
    j["feasible_partitions"] = m.feasible_partitions;
    j["direct_recount"] = m.direct_recount.get_str();
    j["witness_colors"] = m.best_colors;
    j["witness_fingerprint"] = m.best_config.fingerprint();
    j["witness_config"] = m.best_config.canonical_text();
    return j.dump(2) + "\n";
  }
  if (f == OutFormat::Csv) {
    std::ostringstream os;
    os << csv_provenance(echo);
    os << "min_count,colorings_tested,feasible_partitions,direct_recount,witness_fingerprint\n";
    os << m.min_count.get_str() << ',' << m.colorings_tested << ',' << m.feasible_partitions
       << ',' << m.direct_recount.get_str() << ',' << m.best_config.fingerprint() << "\n";
    return os.str();
  }
  std::ostringstream os;
  os << "min count            " << m.min_count.get_str() << "\n";
  os << "colorings tested     " << m.colorings_tested << "\n";
  os << "feasible partitions  " << m.feasible_partitions << "\n";
  os << "direct recount       " << m.direct_recount.get_str() << "\n";
  os << "witness colors       " << colors << "\n";
  os << "witness fingerprint  " << m.best_config.fingerprint() << "\n";
  return os.str();
}

std::string render_tightness(const TightnessResult& t, OutFormat f, const std::string& echo) {
  if (f == OutFormat::Json) {
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = echo;
    j["found"] = t.found;
    j["attempts"] = t.attempts;
    j["target"] = t.target.get_str();
    if (t.found) {
      j["how"] = t.how;
      j["count"] = t.witness_count.get_str();
      j["witness_fingerprint"] = t.witness->fingerprint();
      j["witness_config"] = t.witness->canonical_text();
    }
    return j.dump(2) + "\n";
  }
  if (f == OutFormat::Csv) {
    std::ostringstream os;
    os << csv_provenance(echo);
    os << "found,attempts,target,how,count,witness_fingerprint\n";
    os << (t.found ? 1 : 0) << ',' << t.attempts << ',' << t.target.get_str() << ','
       << (t.found ? t.how : "-") << ',' << (t.found ? t.witness_count.get_str() : "-") << ','
       << (t.found ? t.witness->fingerprint() : "-") << "\n";
    return os.str();
  }
  std::ostringstream os;
  os << "target    " << t.target.get_str() << "\n";
  os << "attempts  " << t.attempts << "\n";
  if (t.found) {
    os << "found     yes (" << t.how << ")\n";
    os << "count     " << t.witness_count.get_str() << "\n";
    os << "witness   " << t.witness->fingerprint() << "\n";
  } else {
    os << "found     no (within budget)\n";
  }
  return os.str();
}

}  // namespace tvb
