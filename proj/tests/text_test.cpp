#include <gtest/gtest.h>

#include <random>

#include "mcgaction/text.hpp"
#include "support/oracles.hpp"

using namespace mcg;
using oracle::W;

TEST(ParsePi1Word, Examples) {
  EXPECT_EQ(parse_pi1_word("a1 b1^-1", {2, 1}), W("a1 b1^-1"));
  EXPECT_EQ(parse_pi1_word("g1 g2 g3", {0, 3}), surface_relator({0, 3}));
  EXPECT_EQ(parse_pi1_word("1", {2, 1}), Word());
  EXPECT_EQ(parse_pi1_word("", {2, 1}), Word());
  EXPECT_EQ(parse_pi1_word("  a1^3   a1^-2 b2^0 ", {2, 1}), W("a1"));
  EXPECT_EQ(parse_pi1_word("a1 a1^-1", {2, 1}), Word());
}

TEST(ParsePi1Word, RangeError) {
  EXPECT_THROW(parse_pi1_word("a3", {2, 1}), ParseError);
  EXPECT_THROW(parse_pi1_word("g2", {2, 1}), ParseError);
  EXPECT_THROW(parse_pi1_word("a1", {0, 3}), ParseError);
  EXPECT_THROW(parse_pi1_word("g0", {0, 3}), ParseError);
}

TEST(ParsePi1Word, SyntaxErrorsCarryColumn) {
  try {
    parse_pi1_word("a1 x2", {2, 1});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 3u);
  }
  try {
    parse_pi1_word("a1 b1^x", {2, 1});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_pi1_word("a", {2, 1}), ParseError);
  EXPECT_THROW(parse_pi1_word("a1^", {2, 1}), ParseError);
  EXPECT_THROW(parse_pi1_word("a+1", {2, 1}), ParseError);
  EXPECT_THROW(parse_pi1_word("a1", {1, 0}), Error);
}

TEST(ParseMcgWord, Examples) {
  const Generator b{GenKind::B, 0}, a1{GenKind::A1, 0};
  EXPECT_EQ(parse_mcg_word("tb ta1^-1", {2, 1}), (MCGWord{{b, 1}, {a1, -1}}));
  const Generator w1{GenKind::Omega, 1}, w2{GenKind::Omega, 2};
  EXPECT_EQ(parse_mcg_word("w1 w2 w1", {0, 4}), (MCGWord{{w1, 1}, {w2, 1}, {w1, 1}}));
  EXPECT_EQ(parse_mcg_word("tb tb tb^-3", {2, 0}), (MCGWord{{b, -1}}));
  EXPECT_EQ(parse_mcg_word("tc2_4 ta6 td1 tb2 tc1_2 ta2", {3, 2}),
            (MCGWord{{{GenKind::C2i, 1}, 1},
                     {{GenKind::Ai, 6}, 1},
                     {{GenKind::Di, 1}, 1},
                     {{GenKind::Bi, 2}, 1},
                     {{GenKind::C12, 0}, 1},
                     {{GenKind::A2, 0}, 1}}));
}

TEST(ParseMcgWord, GenusOneTa2IsLambdaTwist) {
  EXPECT_EQ(parse_mcg_word("ta2", {1, 2}), (MCGWord{{{GenKind::Ai, 2}, 1}}));
}

TEST(ParseMcgWord, Errors) {
  EXPECT_THROW(parse_mcg_word("tc2_4", {2, 1}), ParseError);
  EXPECT_THROW(parse_mcg_word("tc2_5", {4, 1}), ParseError);
  EXPECT_THROW(parse_mcg_word("tc3_5", {4, 1}), ParseError);
  EXPECT_THROW(parse_mcg_word("tq", {2, 1}), ParseError);
  EXPECT_THROW(parse_mcg_word("tb2", {2, 1}), ParseError);
  EXPECT_THROW(parse_mcg_word("ta3", {2, 3}), ParseError);
  EXPECT_THROW(parse_mcg_word("w3", {0, 3}), ParseError);
  EXPECT_THROW(parse_mcg_word("td1", {2, 1}), ParseError);
  EXPECT_THROW(parse_mcg_word("tb", {0, 4}), ParseError);
  try {
    parse_mcg_word("tb  zz", {2, 1});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 4u);
  }
}

TEST(Printing, Words) {
  EXPECT_EQ(to_string(Word()), "1");
  EXPECT_EQ(to_string(W("a1 a1 a1 b2^-1 b2^-1 g1")), "a1^3 b2^-2 g1");
}

TEST(RoundTrip, Pi1Words) {
  const Signature sig{2, 3};
  const auto syms = alphabet(sig);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = oracle::to_word(oracle::random_reduced(rng, static_cast<int>(syms.size()),
                                                          trial % 15),
                                   syms);
    EXPECT_EQ(parse_pi1_word(to_string(u), sig), u);
  }
}

TEST(RoundTrip, McgWords) {
  for (Signature sig : {Signature{3, 3}, Signature{0, 5}, Signature{1, 3}}) {
    const auto cat = catalog(sig, GeneratorMode::Full);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
    std::uniform_int_distribution<int> ex(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Factor> fs;
      for (int k = 0; k < 6; ++k) fs.push_back({cat[pick(rng)], ex(rng)});
      const MCGWord w(fs);
      EXPECT_EQ(parse_mcg_word(to_string(w), sig), w) << to_string(w);
    }
  }
}
