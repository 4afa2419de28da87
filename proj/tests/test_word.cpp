#include <gtest/gtest.h>

#include <random>

#include "ssb/word.hpp"

using namespace ssb;

namespace {

SurfaceWord random_word(std::mt19937& rng, int strands, int length) {
  std::uniform_int_distribution<int> kind(0, 3), idx(1, strands - 1);
  Letters out;
  for (int i = 0; i < length; ++i)
    out.push_back({all_kinds[kind(rng)], idx(rng)});
  return SurfaceWord(strands, out);
}

} // namespace

TEST(ParseWord, EmptyIsIdentity) {
  auto w = parse_word("", 1);
  EXPECT_EQ(w.strands(), 1);
  EXPECT_TRUE(w.empty());
}

TEST(ParseWord, TwistSpinExample) {
  auto w = parse_word("a2 c1^-1 b2 c1 delta(3,1)^2", 3);
  Letters expected{a(2), cinv(1), b(2), c(1), c(1), c(2), c(1), c(1), c(2), c(1)};
  EXPECT_EQ(w.letters(), expected);
}

TEST(ParseWord, NoAutoReduction) {
  auto w = parse_word("c1 C1", 2);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], c(1));
  EXPECT_EQ(w[1], cinv(1));
}

TEST(ParseWord, NegativeDeltaIsFormalInverse) {
  auto w = parse_word("delta(3,1)^-1", 3);
  Letters expected{cinv(1), cinv(2), cinv(1)};
  EXPECT_EQ(w.letters(), expected);
  EXPECT_TRUE(parse_word("c1^0", 2).empty());
}

TEST(ParseWord, Errors) {
  EXPECT_THROW(parse_word("a3", 3), parse_error);
  EXPECT_THROW(parse_word("a1^-1", 2), parse_error);
  EXPECT_THROW(parse_word("x1", 2), parse_error);
  EXPECT_THROW(parse_word("c1c1", 2), parse_error);
  EXPECT_THROW(parse_word("delta(3,1)", 2), parse_error);
  try {
    parse_word("c1 c1 q2", 3);
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(ParseClosed, SubscriptRequired) {
  auto w = parse_closed("[a2 C1 b2 c1]_3");
  EXPECT_EQ(w.strands(), 3);
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(parse_closed("[]_2").size(), 0u);
  EXPECT_THROW(parse_closed("[c1]"), parse_error);
  EXPECT_THROW(parse_closed("[c2 b2 C2]_2"), parse_error);
}

TEST(HalfTwist, Examples) {
  EXPECT_EQ(build_half_twist(3, 1).letters(), (Letters{c(1), c(2), c(1)}));
  EXPECT_TRUE(build_half_twist(1, 1).empty());
  EXPECT_EQ(build_half_twist(4, 1).letters(), (Letters{c(1), c(2), c(1), c(3), c(2), c(1)}));
  EXPECT_THROW(build_half_twist(3, 2, 3), domain_error);
}

TEST(HalfTwist, ReversesStrandOrder) {
  for (int s = 1; s <= 6; ++s)
    for (int base = 1; base <= 3; ++base) {
      const int strands = base + s + 1;
      auto d = build_half_twist(s, base, strands);
      EXPECT_EQ(d.size(), static_cast<std::size_t>(s * (s - 1) / 2));
      for (const auto& g : d.letters()) {
        EXPECT_EQ(g.kind, Kind::C);
        EXPECT_GE(g.index, base);
        EXPECT_LE(g.index, base + s - 2);
      }
      auto perm = crossing_permutation(d);
      for (int j = 0; j < s; ++j)
        EXPECT_EQ(perm[base + j], base + s - 1 - j);
      for (int p = 1; p < base; ++p)
        EXPECT_EQ(perm[p], p);
    }
}

TEST(Mirror, Examples) {
  auto w = parse_word("a2 C1 b2 c1", 3);
  EXPECT_EQ(mirror_word(w).letters(), (Letters{cinv(1), b(2), c(1), a(2)}));
  EXPECT_TRUE(mirror_word(SurfaceWord(2)).empty());
  auto ts = parse_word("a2 C1 b2 c1 delta(3,1)^2", 3);
  EXPECT_EQ(mirror_word(ts), parse_word("delta(3,1)^-2 C1 b2 c1 a2", 3));
}

TEST(FormalInverse, Examples) {
  EXPECT_EQ(formal_inverse(parse_word("c1 c2", 3)).letters(), (Letters{cinv(2), cinv(1)}));
  EXPECT_EQ(formal_inverse(parse_word("c1^4", 2)), parse_word("c1^-4", 2));
  EXPECT_THROW(formal_inverse(parse_word("a1", 2)), domain_error);
}

TEST(WordProperties, RoundTripAndInvolution) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int strands = 2 + trial % 4;
    auto w = random_word(rng, strands, trial % 12);
    EXPECT_EQ(parse_word(w.str(), strands), w);
    EXPECT_EQ(mirror_word(mirror_word(w)), w);
    ClosedWord cw(w);
    EXPECT_EQ(parse_closed(cw.str()), cw);
  }
}
