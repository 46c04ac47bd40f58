#include <doctest.h>

#include <vector>

#include "tvb/birch.hpp"
#include "tvb/rng.hpp"
#include "tvb/words.hpp"

using namespace tvb;

namespace {

// seed-derived balanced word of length 3k (k of each color, random signs)
Word random_word(SplitMix64& g, int k) {
  std::vector<int> colors;
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < k; ++i) colors.push_back(c);
  g.shuffle(colors);
  Word w;
  for (int i = 0; i < 3 * k; ++i)
    w.letters.push_back(Letter{g.bounded(2) ? 1 : -1, colors[i]});
  return w;
}

}  // namespace

TEST_CASE("word text round-trip and validation") {
  Word w = Word::parse("+0-1+2");
  CHECK(w.letters.size() == 3);
  CHECK(w.k() == 1);
  CHECK(w.str() == "+0-1+2");
  CHECK(Word::parse(w.str()) == w);

  CHECK_THROWS(Word::parse(""));
  CHECK_THROWS(Word::parse("+0-1"));      // length not a multiple of 3
  CHECK_THROWS(Word::parse("x0-1+2"));    // bad sign
  CHECK_THROWS(Word::parse("+a-1+2"));    // bad color
  CHECK_THROWS(Word::parse("+0-1+"));     // odd text length

  CHECK_NOTHROW(Word::parse("+0+0+0").validate(false));
  CHECK_THROWS(Word::parse("+0+0+0").validate(true));   // color 0 thrice
  CHECK_THROWS(Word::parse("+0+1+3").validate(true));   // color out of range
  CHECK_NOTHROW(Word::parse("+0-1+2").validate(true));
}

TEST_CASE("flip and canonical") {
  Word w = Word::parse("-0+1-2");
  CHECK(w.flipped().str() == "+0-1+2");
  CHECK(w.canonical().str() == "+0-1+2");
  CHECK(Word::parse("+0-1+2").canonical().str() == "+0-1+2");
  CHECK(w.flipped().flipped() == w);
}

TEST_CASE("single-triple words") {
  CHECK(count_word_partitions(Word::parse("+0-1+2")) == 1);
  CHECK(count_word_partitions(Word::parse("-0+1-2")) == 1);
  CHECK(count_word_partitions(Word::parse("+0+1+2")) == 0);  // no sign alternation
  CHECK(count_word_partitions(Word::parse("+0-0+1")) == 0);  // repeated color
}

TEST_CASE("alternating length-9 word counts 3 with the exact triples") {
  Word w = Word::parse("+0-1+2-0+1-2+0-1+2");
  std::vector<Partition> parts;
  CHECK(count_word_partitions(w, &parts) == 3);
  REQUIRE(parts.size() == 3);
  std::vector<std::string> strs;
  for (const auto& p : parts) strs.push_back(p.str());
  std::sort(strs.begin(), strs.end());
  CHECK(strs[0] == "{0,1,2}|{3,4,5}|{6,7,8}");
  CHECK(strs[1] == "{0,1,8}|{2,3,4}|{5,6,7}");
  CHECK(strs[2] == "{0,7,8}|{1,2,3}|{4,5,6}");
}

TEST_CASE("counting is flip invariant") {
  SplitMix64 g(404);
  for (int iter = 0; iter < 40; ++iter) {
    Word w = random_word(g, 2 + static_cast<int>(g.bounded(2)));
    CHECK(count_word_partitions(w) == count_word_partitions(w.flipped()));
  }
}

TEST_CASE("realization produces the word's configuration") {
  Word w = Word::parse("+0-1+2-0+1-2+0-1+2");
  Config cfg = realize_word(w);
  CHECK(cfg.mode == Mode::Birch);
  CHECK(cfg.dim == 2);
  CHECK(cfg.blocks == 3);
  CHECK(cfg.general_position);
  // letter i becomes point i, so colors transfer verbatim
  for (size_t i = 0; i < w.letters.size(); ++i) CHECK(cfg.colors[i] == w.letters[i].color);
  CHECK(count_colored_birch(cfg).count == 3);
}

TEST_CASE("sweep encoding inverts realization") {
  SplitMix64 g(808);
  std::vector<Word> words{Word::parse("+0-1+2-0+1-2+0-1+2"), Word::parse("+0-1+2"),
                          Word::parse("-0-1-2+2+1+0")};
  for (int iter = 0; iter < 25; ++iter) words.push_back(random_word(g, 2));
  for (int iter = 0; iter < 10; ++iter) words.push_back(random_word(g, 3));

  for (const Word& w : words) {
    Config cfg = realize_word(w);
    Word back = sweep_encode(cfg, +1);
    CHECK(back.str() == w.canonical().str());
    // the other halfspace naming flips every sign
    CHECK(sweep_encode(cfg, -1).str() == w.canonical().flipped().str());
  }
}

TEST_CASE("sweep encoding rejects non-planar input") {
  Config cfg;
  cfg.dim = 1;
  cfg.mode = Mode::Birch;
  cfg.blocks = 2;
  cfg.points = {Point{Rat(-2)}, Point{Rat(-1)}, Point{Rat(1)}, Point{Rat(2)}};
  cfg.colors = {0, 1, 0, 1};
  cfg.query = Point{Rat(0)};
  CHECK_THROWS(sweep_encode(cfg));
}

TEST_CASE("word count equals geometric count on random words") {
  SplitMix64 g(909);
  for (int iter = 0; iter < 30; ++iter) {
    Word w = random_word(g, 2);
    CHECK(count_word_partitions(w) == count_colored_birch(realize_word(w)).count);
  }
  for (int iter = 0; iter < 8; ++iter) {
    Word w = random_word(g, 3);
    CHECK(count_word_partitions(w) == count_colored_birch(realize_word(w)).count);
  }
}
