#include <doctest.h>

#include <set>
#include <vector>

#include "oracles.hpp"
#include "tvb/birch.hpp"
#include "tvb/generators.hpp"

using namespace tvb;

namespace {

// 1d fixture: two points each side of the query at 0
Config straddle_1d() {
  Config cfg;
  cfg.dim = 1;
  cfg.mode = Mode::Birch;
  cfg.blocks = 2;
  cfg.points = {Point{Rat(-2)}, Point{Rat(-1)}, Point{Rat(1)}, Point{Rat(2)}};
  cfg.colors = {0, 1, 0, 1};
  cfg.query = Point{Rat(0)};
  return cfg;
}

std::vector<std::string> partition_strs(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.str());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("single-block counts on a hand-checked triangle") {
  Config cfg;
  cfg.dim = 2;
  cfg.mode = Mode::Birch;
  cfg.blocks = 1;
  cfg.points = {Point{Rat(0), Rat(0)}, Point{Rat(3), Rat(0)}, Point{Rat(0), Rat(3)}};
  cfg.colors = {0, 1, 2};
  cfg.query = Point{Rat(1), Rat(1)};

  CHECK(count_colored_birch(cfg).count == 1);
  CHECK(count_uncolored_birch(cfg).count == 1);
  CHECK(verify_birch_partition(cfg, Partition::parse("{0,1,2}")));

  cfg.query = Point{Rat(5), Rat(5)};
  CHECK(count_colored_birch(cfg).count == 0);
  CHECK(count_uncolored_birch(cfg).count == 0);
  CHECK_FALSE(verify_birch_partition(cfg, Partition::parse("{0,1,2}")));
}

TEST_CASE("1d straddle fixture: uncolored 2, colored 1") {
  Config cfg = straddle_1d();
  // uncolored: {-2,1}|{-1,2} and {-2,2}|{-1,1}
  CHECK(count_uncolored_birch(cfg).count == 2);
  // colored: {-2,1} is monochromatic, so only {-2,2}|{-1,1} survives
  auto rep = count_colored_birch(cfg, BirchOptions{.emit = true});
  CHECK(rep.count == 1);
  REQUIRE(rep.partitions.has_value());
  REQUIRE(rep.partitions->size() == 1);
  CHECK((*rep.partitions)[0].str() == "{0,3}|{1,2}");
}

TEST_CASE("counts match the brute-force oracle") {
  struct Case {
    int d, k;
  };
  for (Case c : {Case{1, 2}, Case{1, 3}, Case{2, 2}, Case{2, 3}, Case{3, 2}}) {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
      Config cfg = make_random(c.d, Mode::Birch, c.k, seed);
      CAPTURE(c.d);
      CAPTURE(c.k);
      CAPTURE(seed);

      std::vector<Partition> naive_kept;
      mpz_class naive_col = oracle::naive_birch_count(cfg, true, &naive_kept);
      auto rep = count_colored_birch(cfg, BirchOptions{.emit = true});
      CHECK(rep.count == naive_col);
      CHECK(partition_strs(*rep.partitions) == partition_strs(naive_kept));

      mpz_class naive_unc = oracle::naive_birch_count(cfg, false);
      auto unc = count_uncolored_birch(cfg);
      CHECK(unc.count == naive_unc);

      // every colored partition is in particular an uncolored one
      CHECK(rep.count <= unc.count);
    }
  }
}

TEST_CASE("emitted partitions are verified, deduped, and job-count independent") {
  for (uint64_t seed : {3u, 14u, 15u}) {
    Config cfg = make_random(2, Mode::Birch, 3, seed);
    auto rep1 = count_colored_birch(cfg, BirchOptions{.emit = true, .jobs = 1});
    auto rep3 = count_colored_birch(cfg, BirchOptions{.emit = true, .jobs = 3});

    CHECK(rep1.count == rep3.count);
    REQUIRE(rep1.partitions.has_value());
    CHECK(mpz_class(rep1.partitions->size()) == rep1.count);
    CHECK(*rep1.partitions == *rep3.partitions);

    std::set<std::string> uniq;
    for (const auto& p : *rep1.partitions) {
      CHECK(verify_birch_partition(cfg, p));
      uniq.insert(p.str());
    }
    CHECK(mpz_class(uniq.size()) == rep1.count);

    auto unc1 = count_uncolored_birch(cfg, BirchOptions{.emit = true, .jobs = 1});
    auto unc3 = count_uncolored_birch(cfg, BirchOptions{.emit = true, .jobs = 3});
    CHECK(unc1.count == unc3.count);
    CHECK(*unc1.partitions == *unc3.partitions);
    for (const auto& p : *unc1.partitions) CHECK(verify_birch_partition(cfg, p, false));
  }
}

TEST_CASE("partition recheck rejects malformed or false partitions") {
  Config cfg = straddle_1d();
  CHECK(verify_birch_partition(cfg, Partition::parse("{0,3}|{1,2}")));
  // valid uncolored partition that is not rainbow
  CHECK(verify_birch_partition(cfg, Partition::parse("{0,2}|{1,3}"), false));
  CHECK_FALSE(verify_birch_partition(cfg, Partition::parse("{0,2}|{1,3}"), true));
  // blocks not straddling the query
  CHECK_FALSE(verify_birch_partition(cfg, Partition::parse("{0,1}|{2,3}")));
  // wrong block count / sizes / index reuse / coverage
  CHECK_FALSE(verify_birch_partition(cfg, Partition::parse("{0,1,2,3}")));
  CHECK_FALSE(verify_birch_partition(cfg, Partition::parse("{0,1,2}|{3}")));
  CHECK_FALSE(verify_birch_partition(cfg, Partition::parse("{0,3}|{0,3}")));
  CHECK_FALSE(verify_birch_partition(cfg, Partition::parse("{0,3}|{1,9}")));
}

TEST_CASE("mode and size guards") {
  Config tv = make_random(1, Mode::Tverberg, 3, 5);
  CHECK_THROWS_AS(count_colored_birch(tv), std::invalid_argument);
  CHECK_THROWS_AS(count_uncolored_birch(tv), std::invalid_argument);

  // 66 points exceed the bitmask limit regardless of geometry
  Config big;
  big.dim = 1;
  big.mode = Mode::Birch;
  big.blocks = 33;
  for (int i = 0; i < 66; ++i) {
    big.points.push_back(Point{Rat(i + 1)});
    big.colors.push_back(i < 33 ? 0 : 1);
  }
  big.query = Point{Rat(0)};
  CHECK_THROWS_AS(count_colored_birch(big), std::invalid_argument);
}

TEST_CASE("rainbow simplex counting") {
  // straddle fixture: {-2,2} and {-1,1} are the only rainbow pairs over 0
  CHECK(count_rainbow_simplices(straddle_1d()) == 2);

  // all points to one side: nothing contains the query
  Config side;
  side.dim = 1;
  side.mode = Mode::Birch;
  side.blocks = 2;
  side.points = {Point{Rat(1)}, Point{Rat(2)}, Point{Rat(3)}, Point{Rat(4)}};
  side.colors = {0, 1, 0, 1};
  side.query = Point{Rat(0)};
  CHECK(count_rainbow_simplices(side) == 0);

  // defined only when every color appears exactly twice
  Config k3 = make_random(2, Mode::Birch, 3, 1);
  CHECK_THROWS_AS(count_rainbow_simplices(k3), std::invalid_argument);
  CHECK_THROWS_AS(count_rainbow_simplices(make_random(1, Mode::Tverberg, 2, 1)),
                  std::invalid_argument);
}

TEST_CASE("rainbow simplex count is always even") {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    Config cfg = make_random(2, Mode::Birch, 2, seed);
    CAPTURE(seed);
    CHECK(count_rainbow_simplices(cfg) % 2 == 0);
  }
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    Config cfg = make_random(3, Mode::Birch, 2, seed);
    CAPTURE(seed);
    CHECK(count_rainbow_simplices(cfg) % 2 == 0);
  }
}
