#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tvb/birch.hpp"
#include "tvb/bounds.hpp"
#include "tvb/experiments.hpp"
#include "tvb/partition.hpp"
#include "tvb/report.hpp"
#include "tvb/tverberg.hpp"

namespace {

using namespace tvb;

struct Globals {
  uint64_t seed = 1;
  int jobs = 1;
  std::string out_path;
  std::string format = "table";
  bool emit = false;
  bool heavy = false;
  bool allow_large = false;
};

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + out_path);
  os << text;
}

// Provenance line: tool name + the arguments as typed (argv[0] elided so
// the echo does not depend on how the binary was invoked).
std::string make_echo(int argc, char** argv) {
  std::string echo = kToolName;
  for (int i = 1; i < argc; ++i) {
    echo += ' ';
    echo += argv[i];
  }
  return echo;
}

// Shared -d/-k/-r triple. Exactly one of -k/-r picks the mode.
struct ModeArgs {
  int dim = 2;
  int k = 0, r = 0;

  void attach(CLI::App* cmd, bool need_blocks) {
    cmd->add_option("-d,--dim", dim, "dimension")->check(CLI::Range(1, 8));
    auto* ko = cmd->add_option("-k", k, "birch blocks (k rainbow (d+1)-blocks)");
    auto* ro = cmd->add_option("-r", r, "tverberg blocks");
    ko->excludes(ro);
    if (need_blocks) {
      // CLI11 has no "exactly one of" group across two options that is
      // also mutually exclusive; validated in resolve().
      (void)0;
    }
  }

  Mode mode() const { return k > 0 ? Mode::Birch : Mode::Tverberg; }
  int blocks() const { return k > 0 ? k : r; }
  void require_one() const {
    if ((k > 0) == (r > 0))
      throw CLI::ValidationError("mode", "give exactly one of -k (birch) or -r (tverberg)");
  }
};

int run_count_cmd(const Globals& g, const CountSource& src_in, const ModeArgs& margs,
                  const std::string& echo) {
  CountSource src = src_in;
  if (src.kind == CountSource::Kind::Generator) {
    margs.require_one();
    src.dim = margs.dim;
    src.mode = margs.mode();
    src.blocks = margs.blocks();
    if (src.gen == "sierksma" && src.mode != Mode::Tverberg)
      throw CLI::ValidationError("--gen", "sierksma is a tverberg generator (use -r)");
    if (src.gen == "polygon" && src.mode != Mode::Tverberg)
      throw CLI::ValidationError("--gen", "polygon is a tverberg generator (use -r)");
  }
  src.seed = g.seed;

  CountRunOptions opts;
  opts.emit = g.emit;
  opts.allow_large_blocks = g.allow_large;
  opts.jobs = g.jobs;
  auto [rep, verdict] = run_count(src, opts);

  OutFormat f = parse_format(g.format);
  std::string text;
  if (f == OutFormat::Csv)
    text = csv_provenance(echo) + csv_report(rep, verdict);
  else if (f == OutFormat::Json)
    text = json_report(rep, verdict, echo, /*with_timing=*/true);
  else
    text = table_report(rep, verdict);
  write_output(text, g.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting of colored birch and tverberg partitions"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "base RNG seed");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--out", g.out_path, "write the report to a file instead of stdout");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_flag("--emit-partitions", g.emit, "list the partitions in the report");
  app.add_flag("--heavy", g.heavy, "unlock the expensive table cells");
  app.add_flag("--allow-large-blocks", g.allow_large,
               "tverberg: lift the d+1 block-size cap (audit mode)");

  // count
  auto* count = app.add_subcommand("count", "count partitions of one configuration");
  count->fallthrough();
  ModeArgs count_margs;
  count_margs.attach(count, true);
  CountSource src;
  std::string gen_name, word_text, in_path;
  std::string eps_text = "1/1000";
  count->add_option("--gen", gen_name, "generator: sierksma | polygon | random")
      ->check(CLI::IsMember({"sierksma", "polygon", "random"}));
  count->add_option("--word", word_text, "colored sign word, e.g. +0-1+2-0+1-2+0-1+2");
  count->add_option("--in", in_path, "configuration file");
  count->add_option("--epsilon", eps_text, "sierksma cluster scale (rational)");
  count->add_option("--denom", src.denom, "polygon coordinate denominator");
  count->add_option("--coord-range", src.coord_range, "random numerator range");

  // scan
  auto* scan = app.add_subcommand("scan", "per-seed counts and theorem checks over random configurations");
  scan->fallthrough();
  ModeArgs scan_margs;
  scan_margs.attach(scan, true);
  ScanParams sp;
  scan->add_option("--seeds", sp.num_seeds, "number of seeds (base .. base+n-1)");
  scan->add_option("--coord-range", sp.coord_range, "random numerator range");

  // table
  auto* table = app.add_subcommand("table", "reproduce the d=2 survey table");
  table->fallthrough();
  TableParams tp;
  std::string table_eps = "1/1000";
  table->add_option("--r-min", tp.r_min)->check(CLI::Range(2, 8));
  table->add_option("--r-max", tp.r_max)->check(CLI::Range(2, 8));
  table->add_option("--samples", tp.random_samples, "random-column sample count");
  table->add_option("--epsilon", table_eps, "sierksma cluster scale (rational)");
  table->add_option("--denom", tp.denom, "polygon coordinate denominator");

  // min-coloring
  auto* minc = app.add_subcommand("min-coloring",
                                  "minimum colored count over all colorings of a base configuration");
  minc->fallthrough();
  MinColoringParams mp;
  std::string minc_in;
  minc->add_option("-r", mp.r, "polygon parameter (3(r-1)-gon + center)");
  minc->add_option("--in", minc_in, "configuration file instead of the polygon");
  minc->add_option("--denom", mp.denom, "polygon coordinate denominator");
  minc->add_flag("--dedup-symmetry", mp.dedup_symmetry,
                 "test one coloring per dihedral orbit (polygon only)");
  minc->add_option("--budget", mp.budget, "max colorings to test");

  // tightness
  auto* tight = app.add_subcommand("tightness",
                                   "search for a configuration meeting its lower bound exactly");
  tight->fallthrough();
  TightnessParams xp;
  std::string witness_out;
  tight->add_option("-d,--dim", xp.dim)->check(CLI::IsMember({2, 3}));
  tight->add_option("-k", xp.k, "birch blocks")->required();
  tight->add_option("--budget", xp.budget, "total attempts");
  tight->add_option("--coord-range", xp.coord_range, "random numerator range");
  tight->add_option("--witness-out", witness_out, "save the witness configuration here");

  // generate
  auto* gen = app.add_subcommand("generate", "write a configuration file");
  gen->fallthrough();
  ModeArgs gen_margs;
  gen_margs.attach(gen, true);
  CountSource gsrc;
  std::string gen_gen = "random", gen_eps = "1/1000";
  gen->add_option("--gen", gen_gen, "generator: sierksma | polygon | random")
      ->check(CLI::IsMember({"sierksma", "polygon", "random"}));
  gen->add_option("--epsilon", gen_eps, "sierksma cluster scale (rational)");
  gen->add_option("--denom", gsrc.denom, "polygon coordinate denominator");
  gen->add_option("--coord-range", gsrc.coord_range, "random numerator range");

  // verify
  auto* verify = app.add_subcommand("verify", "re-check a partition list against a configuration");
  verify->fallthrough();
  std::string v_config, v_parts;
  bool v_uncolored = false;
  verify->add_option("--in", v_config, "configuration file")->required();
  verify->add_option("--partitions", v_parts, "partition list file (one per line)")->required();
  verify->add_flag("--uncolored", v_uncolored, "skip the rainbow constraint");

  CLI11_PARSE(app, argc, argv);
  const std::string echo = make_echo(argc, argv);

  try {
    if (count->parsed()) {
      int chosen = (!gen_name.empty()) + (!word_text.empty()) + (!in_path.empty());
      if (chosen != 1)
        throw CLI::ValidationError("count", "give exactly one of --gen, --word, --in");
      if (!gen_name.empty()) {
        src.kind = CountSource::Kind::Generator;
        src.gen = gen_name;
        src.epsilon = Rat::parse(eps_text);
      } else if (!word_text.empty()) {
        src.kind = CountSource::Kind::Word;
        src.word = word_text;
      } else {
        src.kind = CountSource::Kind::File;
        src.path = in_path;
      }
      return run_count_cmd(g, src, count_margs, echo);
    }

    if (scan->parsed()) {
      scan_margs.require_one();
      sp.dim = scan_margs.dim;
      sp.mode = scan_margs.mode();
      sp.blocks = scan_margs.blocks();
      sp.seed = g.seed;
      sp.jobs = g.jobs;
      ScanSummary s = run_scan(sp);
      OutFormat f = parse_format(g.format);
      std::string text;
      if (f == OutFormat::Csv) {
        std::ostringstream os;
        os << csv_provenance(echo) << csv_report(s.rows);
        os << "# min: " << s.min_count.get_str() << " at seed " << s.min_seed << "\n";
        os << "# max: " << s.max_count.get_str() << "\n";
        os << "# parity_violations: " << s.parity_violations.size() << "\n";
        os << "# bound_violations: " << s.bound_violations.size() << "\n";
        if (!s.note.empty()) os << "# note: " << s.note << "\n";
        text = os.str();
      } else if (f == OutFormat::Json) {
        text = json_report(s, echo, /*with_timing=*/true);
      } else {
        text = table_report(s);
      }
      write_output(text, g.out_path);
      return (s.parity_violations.empty() && s.bound_violations.empty()) ? 0 : 3;
    }

    if (table->parsed()) {
      tp.heavy = g.heavy;
      tp.seed = g.seed;
      tp.jobs = g.jobs;
      tp.epsilon = Rat::parse(table_eps);
      if (tp.r_min > tp.r_max) throw CLI::ValidationError("table", "--r-min exceeds --r-max");
      TableResult t = run_table(tp);
      write_output(render_table(t, parse_format(g.format), echo), g.out_path);
      return 0;
    }

    if (minc->parsed()) {
      mp.use_polygon = minc_in.empty();
      mp.path = minc_in;
      mp.jobs = g.jobs;
      MinColoringResult m = run_min_coloring(mp);
      write_output(render_min_coloring(m, parse_format(g.format), echo), g.out_path);
      return 0;
    }

    if (tight->parsed()) {
      xp.seed = g.seed;
      xp.jobs = g.jobs;
      TightnessResult t = run_tightness(xp);
      if (t.found && !witness_out.empty()) t.witness->save(witness_out);
      write_output(render_tightness(t, parse_format(g.format), echo), g.out_path);
      return t.found ? 0 : 4;
    }

    if (gen->parsed()) {
      gen_margs.require_one();
      gsrc.kind = CountSource::Kind::Generator;
      gsrc.gen = gen_gen;
      gsrc.dim = gen_margs.dim;
      gsrc.mode = gen_margs.mode();
      gsrc.blocks = gen_margs.blocks();
      gsrc.epsilon = Rat::parse(gen_eps);
      gsrc.seed = g.seed;
      if ((gsrc.gen == "sierksma" || gsrc.gen == "polygon") && gsrc.mode != Mode::Tverberg)
        throw CLI::ValidationError("--gen", gsrc.gen + " is a tverberg generator (use -r)");
      Config cfg = build_config(gsrc);
      if (g.out_path.empty())
        std::cout << cfg.canonical_text();
      else
        cfg.save(g.out_path);
      return 0;
    }

    if (verify->parsed()) {
      Config cfg = Config::load(v_config);
      std::ifstream in(v_parts);
      if (!in) throw std::runtime_error("cannot open partition list: " + v_parts);
      std::ostringstream os;
      std::string line;
      int lineno = 0, bad = 0, checked = 0;
      while (std::getline(in, line)) {
        ++lineno;
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        ++checked;
        bool ok = false;
        std::string note;
        try {
          Partition p = Partition::parse(line);
          ok = cfg.mode == Mode::Birch
                   ? verify_birch_partition(cfg, p, !v_uncolored)
                   : verify_tverberg_partition(cfg, p, !v_uncolored, g.allow_large);
        } catch (const std::exception& e) {
          note = std::string(" (") + e.what() + ")";
        }
        if (!ok) ++bad;
        os << "line " << lineno << ": " << (ok ? "ok" : "INVALID") << note << "\n";
      }
      os << checked << " checked, " << bad << " invalid\n";
      write_output(os.str(), g.out_path);
      return bad == 0 ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
