#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <string>

#include "tvb/birch.hpp"
#include "tvb/experiments.hpp"
#include "tvb/generators.hpp"
#include "tvb/tverberg.hpp"

using namespace tvb;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("output format names") {
  CHECK(parse_format("table") == OutFormat::Table);
  CHECK(parse_format("csv") == OutFormat::Csv);
  CHECK(parse_format("json") == OutFormat::Json);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("source dispatch builds the expected configurations") {
  CountSource src;
  src.kind = CountSource::Kind::Generator;
  src.gen = "sierksma";
  src.dim = 2;
  src.blocks = 3;
  src.seed = 5;
  CHECK(build_config(src).canonical_text() ==
        make_sierksma(2, 3, Rat(1, 1000), 5).canonical_text());

  src.gen = "polygon";
  src.blocks = 4;
  CHECK(build_config(src).canonical_text() == make_polygon(4, 1000000).canonical_text());

  src.gen = "random";
  src.mode = Mode::Birch;
  src.blocks = 2;
  CHECK(build_config(src).canonical_text() ==
        make_random(2, Mode::Birch, 2, 5, 1000000).canonical_text());

  src.gen = "hexagon";
  CHECK_THROWS_AS(build_config(src), std::invalid_argument);

  CountSource word;
  word.kind = CountSource::Kind::Word;
  word.word = "+0-1+2";
  Config wc = build_config(word);
  CHECK(wc.mode == Mode::Birch);
  CHECK(wc.blocks == 1);

  CountSource file;
  file.kind = CountSource::Kind::File;
  file.path = temp_path("exp_dispatch.tvc");
  Config saved = make_random(1, Mode::Tverberg, 3, 2);
  saved.save(file.path);
  CHECK(build_config(file).canonical_text() == saved.canonical_text());
  std::filesystem::remove(file.path);
}

TEST_CASE("count run on a word source cross-checks both routes") {
  CountSource src;
  src.kind = CountSource::Kind::Word;
  src.word = "+0-1+2-0+1-2+0-1+2";
  auto [rep, verdict] = run_count(src, CountRunOptions{.emit = true});
  CHECK(rep.count == 3);
  CHECK(rep.mode == Mode::Birch);
  CHECK(rep.blocks == 3);
  CHECK(rep.seed == 0);  // words carry no seed
  CHECK(rep.partitions->size() == 3);
  CHECK(verdict.ok());  // d=2, k=3: below every clause threshold
}

TEST_CASE("count run on a generator source") {
  CountSource src;
  src.kind = CountSource::Kind::Generator;
  src.gen = "sierksma";
  src.blocks = 4;
  src.seed = 9;
  auto [rep, verdict] = run_count(src, CountRunOptions{});
  CHECK(rep.count == 2);
  CHECK(rep.seed == 9);
  CHECK(verdict.ok());

  // the per-count CSV pins elapsed to zero, so reruns are byte-identical
  std::string csv1 = csv_report(rep, verdict);
  auto [rep2, verdict2] = run_count(src, CountRunOptions{});
  CHECK(csv_report(rep2, verdict2) == csv1);
  CHECK(csv1.find("seed,count,even_ok,bound_ok,fingerprint,elapsed_ms\n") == 0);
  CHECK(csv1.find(",0\n") != std::string::npos);
}

TEST_CASE("random scans are deterministic and verdict-clean at small shapes") {
  ScanParams sp;
  sp.dim = 1;
  sp.mode = Mode::Birch;
  sp.blocks = 2;
  sp.seed = 1;
  sp.num_seeds = 20;
  ScanSummary s = run_scan(sp);

  REQUIRE(s.rows.size() == 20);
  for (size_t i = 0; i < s.rows.size(); ++i) {
    CHECK(s.rows[i].seed == sp.seed + i);
    CHECK(s.rows[i].even_ok);
    CHECK(s.rows[i].bound_ok);
    CHECK(s.rows[i].count >= s.min_count);
    CHECK(s.rows[i].count <= s.max_count);
  }
  CHECK(s.parity_violations.empty());
  CHECK(s.bound_violations.empty());
  CHECK(s.min_config_text.rfind("tvconfig 1", 0) == 0);
  CHECK(count_colored_birch(make_random(1, Mode::Birch, 2, s.min_seed)).count == s.min_count);

  // byte-identical CSV across reruns and across thread counts
  std::string csv1 = csv_report(s.rows);
  CHECK(csv_report(run_scan(sp).rows) == csv1);
  sp.jobs = 3;
  CHECK(csv_report(run_scan(sp).rows) == csv1);
}

TEST_CASE("tverberg scan at prime r sees the guaranteed witness") {
  ScanParams sp;
  sp.dim = 1;
  sp.mode = Mode::Tverberg;
  sp.blocks = 3;
  sp.seed = 1;
  sp.num_seeds = 10;
  ScanSummary s = run_scan(sp);
  REQUIRE(s.rows.size() == 10);
  CHECK(s.min_count >= 1);  // r = 3 is prime
  CHECK(s.bound_violations.empty());
  CHECK(s.parity_violations.empty());
}

TEST_CASE("minimum coloring scan, tiny polygon") {
  MinColoringParams mp;
  mp.use_polygon = true;
  mp.r = 2;
  MinColoringResult res = run_min_coloring(mp);
  CHECK(res.min_count == 1);
  CHECK(res.direct_recount == 1);
  CHECK(res.colorings_tested == 24);  // 4 points, all classes singletons
  CHECK(res.feasible_partitions >= 1);
  CHECK(res.best_config.mode == Mode::Tverberg);
  CHECK(res.best_config.colors == res.best_colors);
}

TEST_CASE("minimum coloring scan agrees with per-coloring brute force") {
  MinColoringParams mp;
  mp.use_polygon = true;
  mp.r = 3;
  MinColoringResult res = run_min_coloring(mp);
  CHECK(res.colorings_tested == 630);

  // second route: count every coloring directly, no shared bitset machinery
  Config base = make_polygon(3, 1000000);
  mpz_class brute_min = -1;
  uint64_t visited = enumerate_colorings(
      base.points.size(), base.expected_class_sizes(),
      [&](const std::vector<int>& cols) {
        mpz_class c = count_colored_tverberg(base.with_colors(cols)).count;
        if (brute_min < 0 || c < brute_min) brute_min = c;
        return true;
      });
  CHECK(visited == 630);
  CHECK(brute_min == res.min_count);
  CHECK(count_colored_tverberg(base.with_colors(res.best_colors)).count == res.min_count);

  // symmetry dedup scans fewer colorings but finds the same minimum
  mp.dedup_symmetry = true;
  MinColoringResult dd = run_min_coloring(mp);
  CHECK(dd.min_count == res.min_count);
  CHECK(dd.colorings_tested < res.colorings_tested);
}

TEST_CASE("minimum coloring budget and input guards") {
  MinColoringParams mp;
  mp.use_polygon = true;
  mp.r = 3;
  mp.budget = 10;
  try {
    run_min_coloring(mp);
    FAIL("expected a budget error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("exceeds budget") != std::string::npos);
    CHECK(std::string(e.what()).find("--dedup-symmetry") != std::string::npos);
  }
  mp.dedup_symmetry = true;
  try {
    run_min_coloring(mp);
    FAIL("expected a budget error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("raise --budget") != std::string::npos);
    CHECK(std::string(e.what()).find("enable") == std::string::npos);
  }

  // file-based geometry: same result, but no symmetry assumption allowed
  std::string path = temp_path("exp_min_coloring.tvc");
  make_polygon(2, 1000000).save(path);
  MinColoringParams fp;
  fp.use_polygon = false;
  fp.path = path;
  CHECK(run_min_coloring(fp).min_count == 1);
  fp.dedup_symmetry = true;
  CHECK_THROWS_AS(run_min_coloring(fp), std::invalid_argument);
  std::filesystem::remove(path);

  std::string bpath = temp_path("exp_min_coloring_birch.tvc");
  make_random(1, Mode::Birch, 2, 1).save(bpath);
  MinColoringParams bp;
  bp.use_polygon = false;
  bp.path = bpath;
  CHECK_THROWS_AS(run_min_coloring(bp), std::invalid_argument);
  std::filesystem::remove(bpath);
}

TEST_CASE("tightness search finds an exact-bound witness in the plane") {
  TightnessParams tp;
  tp.dim = 2;
  tp.k = 4;
  tp.seed = 1;
  tp.budget = 2000;
  TightnessResult res = run_tightness(tp);
  CHECK(res.target == 2);
  REQUIRE(res.found);
  CHECK(res.how == "word-realization");
  CHECK(res.witness_count == res.target);
  REQUIRE(res.witness.has_value());
  CHECK(count_colored_birch(*res.witness).count == res.target);
  CHECK(res.attempts >= 1);

  // zero budget: not finding anything is a valid outcome
  tp.budget = 0;
  TightnessResult none = run_tightness(tp);
  CHECK_FALSE(none.found);
  CHECK(none.attempts == 0);

  TightnessParams bad;
  bad.dim = 1;
  CHECK_THROWS_AS(run_tightness(bad), std::invalid_argument);
  bad.dim = 4;
  CHECK_THROWS_AS(run_tightness(bad), std::invalid_argument);
}

TEST_CASE("survey table at desk scale") {
  TableParams tp;
  tp.r_min = 2;
  tp.r_max = 4;
  TableResult t = run_table(tp);
  REQUIRE(t.rows.size() == 3);

  CHECK(t.rows[0].r == 2);
  CHECK(t.rows[0].sierksma == "1");
  CHECK(t.rows[0].kleist == "1");
  CHECK(t.rows[0].random_min == "1");
  CHECK(t.rows[0].bound == "1");

  CHECK(t.rows[1].r == 3);
  CHECK(t.rows[1].sierksma == "1");
  CHECK(t.rows[1].kleist == "1");
  CHECK(t.rows[1].random_min == "1");
  CHECK(t.rows[1].bound == "1");

  CHECK(t.rows[2].r == 4);
  CHECK(t.rows[2].sierksma == "2");
  CHECK(t.rows[2].kleist == "2");
  CHECK(t.rows[2].random_min == "2");
  CHECK(t.rows[2].bound == "(1)");  // non-prime r: bound assumes count > 0

  CHECK(t.note.find("observed minimum") != std::string::npos);

  // renderings: provenance comments + stable bytes across reruns
  std::string echo = "tvb table --r-min 2 --r-max 4";
  std::string csv = render_table(t, OutFormat::Csv, echo);
  CHECK(csv.rfind(csv_provenance(echo), 0) == 0);
  CHECK(csv.find("r,sierksma,kleist,random_min,bound\n") != std::string::npos);
  CHECK(render_table(run_table(tp), OutFormat::Csv, echo) == csv);

  auto j = nlohmann::json::parse(render_table(t, OutFormat::Json, echo));
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][2]["sierksma"] == "2");
  CHECK(j["command"] == echo);

  std::string txt = render_table(t, OutFormat::Table, echo);
  CHECK(txt.find("sierksma") != std::string::npos);
  CHECK(txt.find("note:") != std::string::npos);
}

TEST_CASE("provenance header and remaining renderers") {
  CHECK(csv_provenance("tvb count --gen sierksma -r 4") ==
        "# tool: tvb 1.0.0\n# spec: tvb count --gen sierksma -r 4\n");

  MinColoringParams mp;
  mp.use_polygon = true;
  mp.r = 2;
  MinColoringResult mres = run_min_coloring(mp);
  std::string mcsv = render_min_coloring(mres, OutFormat::Csv, "echo1");
  CHECK(mcsv.rfind(csv_provenance("echo1"), 0) == 0);
  CHECK(mcsv.find("min_count,colorings_tested,") != std::string::npos);
  auto mj = nlohmann::json::parse(render_min_coloring(mres, OutFormat::Json, "echo1"));
  CHECK(mj["min_count"] == "1");
  CHECK(mj["direct_recount"] == "1");
  std::string mtxt = render_min_coloring(mres, OutFormat::Table, "echo1");
  CHECK(mtxt.find("min count") != std::string::npos);

  TightnessParams tp;
  tp.dim = 2;
  tp.k = 4;
  tp.budget = 2000;
  TightnessResult tres = run_tightness(tp);
  std::string tcsv = render_tightness(tres, OutFormat::Csv, "echo2");
  CHECK(tcsv.rfind(csv_provenance("echo2"), 0) == 0);
  auto tj = nlohmann::json::parse(render_tightness(tres, OutFormat::Json, "echo2"));
  CHECK(tj["found"] == true);
  CHECK(tj["count"] == "2");
  CHECK(tj["how"] == "word-realization");
  std::string ttxt = render_tightness(tres, OutFormat::Table, "echo2");
  CHECK(ttxt.find("found     yes") != std::string::npos);

  // count/scan renderers from the report module
  CountSource src;
  src.kind = CountSource::Kind::Word;
  src.word = "+0-1+2-0+1-2+0-1+2";
  auto [rep, verdict] = run_count(src, CountRunOptions{.emit = true});
  auto cj = nlohmann::json::parse(json_report(rep, verdict, "echo3", true));
  CHECK(cj["count"] == "3");
  CHECK(cj["ok"] == true);
  CHECK(cj["partitions"].size() == 3);
  std::string ctxt = table_report(rep, verdict);
  CHECK(ctxt.find("count        3") != std::string::npos);
  CHECK(ctxt.find("verdict      ok") != std::string::npos);
}
