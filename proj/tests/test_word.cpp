#include <gtest/gtest.h>

#include "braidshadow/error.hpp"
#include "braidshadow/word.hpp"
#include "support.hpp"

using namespace braidshadow;

namespace {
FreeWord f2(const char* s) { return parse_word(Alphabet::F2, s); }
}  // namespace

TEST(ReduceWord, Examples) {
  EXPECT_TRUE(reduce_word(FreeWord(Alphabet::F2, {{0, 1}, {0, -1}})).empty());
  const FreeWord w(Alphabet::F2, {{0, 1}, {1, 1}, {1, -1}, {0, 1}});
  EXPECT_EQ(to_text(reduce_word(w)), "xx");
}

TEST(ReduceWord, IdempotentAndReducedOnRandomWords) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const auto w = testing_support::random_word_upto(rng, Alphabet::F2, 30);
    const auto r = reduce_word(w);
    EXPECT_TRUE(r.is_reduced());
    EXPECT_EQ(reduce_word(r), r);
  }
}

TEST(FreeWord, InverseAndPowers) {
  const auto w = f2("xyX");
  EXPECT_EQ(to_text(w.inverse()), "xYX");
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(to_text(w.pow(3)), "xyyyX");
  EXPECT_EQ(to_text(w.pow(-2)), "xYYX");
  EXPECT_TRUE(w.pow(0).empty());
  EXPECT_EQ(f2("xyXY").exponent_sum(0), 0);
  EXPECT_EQ(f2("xxy").exponent_sum(0), 2);
}

TEST(FreeWord, ConcatenationChecksAlphabet) {
  try {
    (void)(f2("x") * parse_word(Alphabet::B3, "a"));
    FAIL() << "expected domain_mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::domain_mismatch);
  }
}

TEST(ParseWord, RoundTripAndRejection) {
  EXPECT_EQ(to_text(parse_word(Alphabet::B3, "abAB")), "abAB");
  EXPECT_EQ(to_text(parse_word(Alphabet::F2, "")), "");
  EXPECT_EQ(to_text(parse_word(Alphabet::F2, "xXy")), "y");
  try {
    parse_word(Alphabet::F2, "xa");
    FAIL() << "expected parse_error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse_error);
    EXPECT_NE(std::string(e.what()).find("position 1"), std::string::npos);
  }
  EXPECT_THROW(parse_word(Alphabet::B3, "ax"), Error);
}

TEST(InCommutatorSubgroup, ExponentSums) {
  EXPECT_TRUE(in_commutator_subgroup(f2("")));
  EXPECT_TRUE(in_commutator_subgroup(f2("xyXY")));
  EXPECT_TRUE(in_commutator_subgroup(f2("yxyXYY")));
  EXPECT_FALSE(in_commutator_subgroup(f2("x")));
  EXPECT_FALSE(in_commutator_subgroup(f2("xyX")));
}
