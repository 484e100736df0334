#include <gtest/gtest.h>

#include <random>

#include "mcgaction/word.hpp"
#include "support/oracles.hpp"

using namespace mcg;
using oracle::Raw;
using oracle::W;

namespace {

const std::vector<Symbol> kThree{alpha(1), beta(1), gamma(1)};
const std::vector<Symbol> kFive{alpha(1), alpha(2), beta(1), beta(2), gamma(1)};

Letter pos(Symbol s) { return {s, false}; }
Letter neg(Symbol s) { return {s, true}; }

Raw cyclically_reduce(Raw w) {
  w = oracle::naive_reduce(w);
  while (w.size() >= 2 && w.front() == -w.back()) w = Raw(w.begin() + 1, w.end() - 1);
  return w;
}

}  // namespace

TEST(Reduce, CancelsAdjacentInversePair) {
  const std::vector<Letter> raw{pos(alpha(1)), neg(alpha(1))};
  EXPECT_TRUE(reduce(raw).empty());
}

TEST(Reduce, KeepsReducedInput) {
  const std::vector<Letter> raw{pos(alpha(1)), neg(beta(1))};
  const Word w = reduce(raw);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], pos(alpha(1)));
  EXPECT_EQ(w[1], neg(beta(1)));
}

TEST(Reduce, MatchesRepeatedScanOnRandomSequences) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Raw raw = oracle::random_raw(rng, 3, 50);
    std::vector<Letter> letters;
    for (int l : raw) letters.push_back({kThree[std::abs(l) - 1], l < 0});
    const Word got = reduce(letters);
    EXPECT_EQ(oracle::from_word(got, kThree), oracle::naive_reduce(raw));
  }
}

TEST(Reduce, IdempotentAndLengthNonincreasing) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Raw raw = oracle::random_raw(rng, 3, 30);
    const Word once = oracle::to_word(raw, kThree);
    EXPECT_LE(once.size(), raw.size());
    EXPECT_EQ(reduce(once.letters()), once);
  }
}

TEST(Multiply, CancelsAtTheJunction) {
  EXPECT_EQ(W("a1 b1^-1") * W("b1"), W("a1"));
}

TEST(Multiply, IdentityAndInverse) {
  const Word u = W("a1 b1^-1 g1^2");
  EXPECT_EQ(u * Word{}, u);
  EXPECT_EQ(Word{} * u, u);
  EXPECT_TRUE((u * invert(u)).empty());
}

TEST(Multiply, AssociativeOnRandomTriples) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const Word a = oracle::to_word(oracle::random_reduced(rng, 3, 7), kThree);
    const Word b = oracle::to_word(oracle::random_reduced(rng, 3, 7), kThree);
    const Word c = oracle::to_word(oracle::random_reduced(rng, 3, 7), kThree);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Invert, ReversesAndFlips) {
  EXPECT_EQ(invert(W("a1 b1^-1")), W("b1 a1^-1"));
  EXPECT_TRUE(invert(Word{}).empty());
  EXPECT_EQ(invert(W("a2^-1 b1 a1 b1^-1")), W("b1 a1^-1 b1^-1 a2"));
}

TEST(Invert, Involution) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = oracle::to_word(oracle::random_reduced(rng, 3, 9), kThree);
    EXPECT_EQ(invert(invert(u)), u);
  }
}

TEST(Conjugate, Convention) {
  EXPECT_EQ(conjugate(W("g2"), Word{}), W("g2"));
  EXPECT_EQ(conjugate(W("g3"), W("g1")), W("g1 g3 g1^-1"));
}

TEST(Conjugate, UndoAndCompose) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = oracle::to_word(oracle::random_reduced(rng, 3, 6), kThree);
    const Word y1 = oracle::to_word(oracle::random_reduced(rng, 3, 5), kThree);
    const Word y2 = oracle::to_word(oracle::random_reduced(rng, 3, 5), kThree);
    EXPECT_EQ(conjugate(conjugate(w, y1), invert(y1)), w);
    EXPECT_EQ(conjugate(w, y1 * y2), conjugate(conjugate(w, y2), y1));
    // Direct double application as the oracle.
    const Raw ry = oracle::from_word(y1, kThree), rw = oracle::from_word(w, kThree);
    const Raw ryi = oracle::raw_inverse(ry);
    const Raw direct = oracle::naive_reduce(oracle::raw_concat({&ry, &rw, &ryi}));
    EXPECT_EQ(oracle::from_word(conjugate(w, y1), kThree), direct);
  }
}

TEST(Power, Exponents) {
  EXPECT_EQ(power(W("a1 b1"), 2), W("a1 b1 a1 b1"));
  EXPECT_EQ(power(W("a1 b1"), -1), W("b1^-1 a1^-1"));
  EXPECT_TRUE(power(W("a1"), 0).empty());
}

TEST(CyclicNormalForm, ConjugatedLetter) {
  const CyclicNormalForm f = cyclic_normal_form(W("a1 b1 a1^-1"));
  EXPECT_EQ(f.core.as_word(), W("b1"));
  EXPECT_EQ(f.prefix, W("a1"));
}

TEST(CyclicNormalForm, Empty) {
  const CyclicNormalForm f = cyclic_normal_form(Word{});
  EXPECT_EQ(f.core.size(), 0u);
  EXPECT_TRUE(f.prefix.empty());
}

TEST(CyclicNormalForm, ReconstructsInputAndIsLeastRotation) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = oracle::to_word(oracle::random_reduced(rng, 3, 1 + trial % 10), kThree);
    const CyclicNormalForm f = cyclic_normal_form(u);
    EXPECT_EQ(conjugate(f.core.as_word(), f.prefix), u);
    const Raw core = oracle::from_word(f.core.as_word(), kThree);
    EXPECT_TRUE(oracle::rotations_match(core, cyclically_reduce(oracle::from_word(u, kThree))));
    // Every rotation compares >= the core under the letter order.
    const auto letters = f.core.letters();
    for (std::size_t r = 1; r < letters.size(); ++r) {
      std::vector<Letter> rot(letters.begin() + r, letters.end());
      rot.insert(rot.end(), letters.begin(), letters.begin() + r);
      EXPECT_FALSE(std::lexicographical_compare(rot.begin(), rot.end(), letters.begin(),
                                                letters.end()));
    }
  }
}

TEST(CyclicNormalForm, ConjugatesShareCore) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = oracle::to_word(oracle::random_reduced(rng, 3, 1 + trial % 8), kThree);
    const Word y = oracle::to_word(oracle::random_reduced(rng, 3, trial % 6), kThree);
    const CyclicNormalForm a = cyclic_normal_form(w), b = cyclic_normal_form(conjugate(w, y));
    EXPECT_EQ(a.core, b.core);
    EXPECT_TRUE(oracle::rotations_match(oracle::from_word(a.core.as_word(), kThree),
                                        cyclically_reduce(oracle::from_word(w, kThree))));
  }
}

TEST(CyclicWord, Period) {
  EXPECT_EQ(cyclic_normal_form(W("a1 b1 a1 b1")).core.period(), 2u);
  EXPECT_EQ(cyclic_normal_form(W("a1 b1 b1")).core.period(), 3u);
  EXPECT_EQ(cyclic_normal_form(W("a1^4")).core.period(), 1u);
}

TEST(LeastRotation, TwoPointerScan) {
  const std::vector<Letter> s{pos(beta(1)), pos(alpha(1)), pos(beta(1)), pos(alpha(1))};
  EXPECT_EQ(least_rotation(s), 1u);
  const std::vector<Letter> t{neg(alpha(1)), pos(alpha(1)), pos(beta(1))};
  EXPECT_EQ(least_rotation(t), 1u);
}

TEST(AreConjugate, Examples) {
  const auto y = are_conjugate(W("a1 b1 a1^-1"), W("b1"));
  ASSERT_TRUE(y);
  EXPECT_EQ(*y, W("a1"));
  EXPECT_FALSE(are_conjugate(W("a1"), W("b1")));
  const auto e = are_conjugate(Word{}, Word{});
  ASSERT_TRUE(e);
  EXPECT_TRUE(e->empty());
  EXPECT_FALSE(are_conjugate(W("a1"), Word{}));
}

TEST(AreConjugate, AgreesWithBoundedBruteForce) {
  // Pairs up to length 12 over 3 symbols, conjugators up to length 12.
  const oracle::BoundedConjugacy brute(3, 6);
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> len(0, 12);
  int positives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Raw v = oracle::random_reduced(rng, 3, len(rng));
    Raw u;
    if (trial % 2 == 0) {
      const Raw y = oracle::random_reduced(rng, 3, len(rng) / 2);
      const Raw yi = oracle::raw_inverse(y);
      u = oracle::naive_reduce(oracle::raw_concat({&y, &v, &yi}));
      if (u.size() > 12) u = v;
    } else {
      u = oracle::random_reduced(rng, 3, static_cast<int>(v.size()));
    }
    const Word uw = oracle::to_word(u, kThree), vw = oracle::to_word(v, kThree);
    const Raw us[] = {u}, vs[] = {v};
    const bool expect = brute.search(us, vs);
    const auto got = are_conjugate(uw, vw);
    EXPECT_EQ(got.has_value(), expect) << "trial " << trial;
    if (got) {
      EXPECT_EQ(conjugate(vw, *got), uw);
      ++positives;
    }
    // Symmetric in outcome.
    EXPECT_EQ(are_conjugate(vw, uw).has_value(), got.has_value());
  }
  EXPECT_GT(positives, 20);
}

TEST(SimultaneousConjugator, Identical) {
  const Word us[] = {W("a1"), W("b1")};
  const auto y = simultaneous_conjugator(us, us);
  ASSERT_TRUE(y);
  EXPECT_TRUE(y->empty());
}

TEST(SimultaneousConjugator, UniformConjugation) {
  const Word us[] = {W("g1 a1 g1^-1"), W("g1 b1 g1^-1")};
  const Word vs[] = {W("a1"), W("b1")};
  const auto y = simultaneous_conjugator(us, vs);
  ASSERT_TRUE(y);
  EXPECT_EQ(*y, W("g1"));
}

TEST(SimultaneousConjugator, NoCommonConjugator) {
  const Word us[] = {W("a1 b1 a1^-1"), W("b1")};
  const Word vs[] = {W("b1"), W("a1 b1 a1^-1")};
  EXPECT_FALSE(simultaneous_conjugator(us, vs));
  const Raw ru[] = {oracle::from_word(us[0], kThree), oracle::from_word(us[1], kThree)};
  const Raw rv[] = {oracle::from_word(vs[0], kThree), oracle::from_word(vs[1], kThree)};
  EXPECT_FALSE(oracle::BoundedConjugacy(3, 5).search(ru, rv));
}

TEST(SimultaneousConjugator, CentralizerFreedom) {
  // First pair only pins y up to a power of a1; the second pair picks a1^3.
  const Word us[] = {W("a1"), W("a1^3 b1 a1^-3")};
  const Word vs[] = {W("a1"), W("b1")};
  const auto y = simultaneous_conjugator(us, vs);
  ASSERT_TRUE(y);
  EXPECT_EQ(*y, W("a1^3"));
}

TEST(SimultaneousConjugator, Errors) {
  const Word one[] = {W("a1")};
  const Word two[] = {W("a1"), W("b1")};
  EXPECT_THROW(simultaneous_conjugator(one, two), Error);
  EXPECT_THROW(simultaneous_conjugator(std::span<const Word>{}, std::span<const Word>{}), Error);
  const Word marked[] = {Word::of(marker(1))};
  EXPECT_THROW(simultaneous_conjugator(marked, one), Error);
}

TEST(SimultaneousConjugator, AgreesWithBoundedBruteForce) {
  const oracle::BoundedConjugacy brute(5, 5);
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> len(0, 6), arity(1, 3);
  int positives = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int k = arity(rng);
    std::vector<Raw> vs, us;
    const Raw y = oracle::random_reduced(rng, 5, len(rng) / 2);
    const Raw yi = oracle::raw_inverse(y);
    for (int i = 0; i < k; ++i) {
      vs.push_back(oracle::random_reduced(rng, 5, len(rng)));
      Raw u = oracle::naive_reduce(oracle::raw_concat({&y, &vs.back(), &yi}));
      if (trial % 3 == 2 && i == k - 1) u = oracle::random_reduced(rng, 5, len(rng));
      us.push_back(u);
    }
    std::vector<Word> uw, vw;
    for (int i = 0; i < k; ++i) {
      uw.push_back(oracle::to_word(us[i], kFive));
      vw.push_back(oracle::to_word(vs[i], kFive));
    }
    const auto got = simultaneous_conjugator(uw, vw);
    EXPECT_EQ(got.has_value(), brute.search(us, vs)) << "trial " << trial;
    if (got) {
      ++positives;
      for (int i = 0; i < k; ++i) EXPECT_EQ(conjugate(vw[i], *got), uw[i]);
    }
  }
  EXPECT_GT(positives, 10);
}

TEST(Substitute, HurwitzImage) {
  const std::map<Symbol, Word> omega{{gamma(1), W("g1 g2 g1^-1")}, {gamma(2), W("g1")}};
  EXPECT_EQ(substitute(W("g1"), omega), W("g1 g2 g1^-1"));
  EXPECT_EQ(substitute(W("g1 g2"), omega), W("g1 g2"));
}

TEST(Substitute, IdentityMap) {
  const std::map<Symbol, Word> id{{alpha(1), W("a1")}, {beta(1), W("b1")}};
  EXPECT_EQ(substitute(W("a1 b1^-1 a1^2"), id), W("a1 b1^-1 a1^2"));
}

TEST(Substitute, UndoneByInverseImages) {
  const std::map<Symbol, Word> fwd{{alpha(1), W("a1 b1^-1")}, {beta(1), W("b1")}};
  const std::map<Symbol, Word> back{{alpha(1), W("a1 b1")}, {beta(1), W("b1")}};
  std::mt19937_64 rng(16);
  const std::vector<Symbol> two{alpha(1), beta(1)};
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = oracle::to_word(oracle::random_reduced(rng, 2, 8), two);
    EXPECT_EQ(substitute(substitute(u, fwd), back), u);
  }
}

TEST(Substitute, Homomorphism) {
  const std::map<Symbol, Word> m{{alpha(1), W("a1 b1^-1")}, {beta(1), W("g1 b1")}, {gamma(1), W("a1^2")}};
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = oracle::to_word(oracle::random_reduced(rng, 3, 6), kThree);
    const Word v = oracle::to_word(oracle::random_reduced(rng, 3, 6), kThree);
    EXPECT_EQ(substitute(u * v, m), substitute(u, m) * substitute(v, m));
  }
}

TEST(Substitute, MissingImageNamesSymbol) {
  const std::map<Symbol, Word> m{{alpha(1), W("a1")}};
  try {
    substitute(W("a1 b2"), m);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("b2"), std::string::npos);
  }
}
