#include <gtest/gtest.h>

#include <random>

#include "ssb/reidemeister.hpp"

using namespace ssb;

namespace {

TangleWord random_braid(std::mt19937& rng, int strands, int length) {
  std::uniform_int_distribution<int> idx(1, strands - 1), sign(0, 1);
  std::vector<TangleLetter> letters;
  for (int n = 0; n < length; ++n)
    letters.push_back({sign(rng) ? TangleKind::SigmaPos : TangleKind::SigmaNeg, idx(rng)});
  return TangleWord(strands, letters);
}

void expect_same_link(const PlanarDiagram& before, const PlanarDiagram& after) {
  validate(after);
  EXPECT_EQ(count_components(after), count_components(before));
  auto shift = framing_shift(bracket_state_sum(before), bracket_state_sum(after));
  EXPECT_TRUE(shift.has_value());
}

} // namespace

TEST(Faces, EulerCount) {
  auto d = trace_closure(parse_tangle("s1 s2 S1 s2", 3));
  // connected diagram with n crossings: n + 2 faces
  EXPECT_EQ(detail::faces(d).size(), static_cast<std::size_t>(d.crossing_count() + 2));
}

TEST(CanonicalKey, InvariantUnderRelabeling) {
  auto d = trace_closure(parse_tangle("s1 s2 S1 s2 s2", 3));
  PlanarDiagram shuffled = d;
  std::reverse(shuffled.crossings.begin(), shuffled.crossings.end());
  for (auto& x : shuffled.crossings) {
    std::rotate(x.begin(), x.begin() + 2, x.end());
    for (int& a : x)
      a = 100 - a;
  }
  EXPECT_EQ(canonical_key(d), canonical_key(shuffled));
  EXPECT_NE(canonical_key(d), canonical_key(trace_closure(parse_tangle("s1 s2 s1 s2 s2", 3))));
}

TEST(Moves, R1RemovesKink) {
  auto d = trace_closure(parse_tangle("s1", 2));
  auto r = r1_reductions(d);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].diagram.crossing_count(), 0);
  EXPECT_EQ(r[0].diagram.free_loops, 1);
}

TEST(Moves, R2RemovesBigon) {
  auto d = trace_closure(parse_tangle("s1 S1", 2));
  auto r = r2_reductions(d);
  ASSERT_FALSE(r.empty());
  EXPECT_EQ(r[0].diagram.crossing_count(), 0);
  EXPECT_EQ(r[0].diagram.free_loops, 2);
  EXPECT_TRUE(r2_reductions(trace_closure(parse_tangle("s1 s1", 2))).empty());
}

TEST(Moves, R3OnBraidRelation) {
  auto d = trace_closure(parse_tangle("s1 s2 s1", 3));
  auto r = r3_moves(d);
  ASSERT_FALSE(r.empty());
  for (const auto& m : r) {
    EXPECT_EQ(m.diagram.crossing_count(), 3);
    EXPECT_EQ(bracket_state_sum(m.diagram), bracket_state_sum(d));
    EXPECT_EQ(count_components(m.diagram), count_components(d));
  }
}

TEST(Moves, PreserveLinkProperty) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 2 + trial % 3;
    auto d = trace_closure(random_braid(rng, m, 3 + trial % 5));
    for (const auto& mv : r2_reductions(d)) {
      EXPECT_EQ(bracket_state_sum(mv.diagram), bracket_state_sum(d));
      expect_same_link(d, mv.diagram);
    }
    for (const auto& mv : r3_moves(d)) {
      EXPECT_EQ(bracket_state_sum(mv.diagram), bracket_state_sum(d));
      expect_same_link(d, mv.diagram);
    }
    for (const auto& mv : r1_reductions(d)) {
      auto shift = framing_shift(bracket_state_sum(d), bracket_state_sum(mv.diagram));
      ASSERT_TRUE(shift.has_value());
      EXPECT_EQ(std::abs(*shift), 1);
      expect_same_link(d, mv.diagram);
    }
    if (d.crossing_count() <= 6) {
      for (const auto& mv : r2_increases(d)) {
        EXPECT_EQ(mv.diagram.crossing_count(), d.crossing_count() + 2);
        EXPECT_EQ(bracket_state_sum(mv.diagram), bracket_state_sum(d));
        expect_same_link(d, mv.diagram);
      }
    }
  }
}

TEST(Simplify, CancellingPairNeedsOneR2) {
  auto d = trace_closure(parse_tangle("s1 S1", 2));
  MoveSet only_r2{false, true, false};
  auto r = reidemeister_simplify(d, only_r2, {});
  EXPECT_TRUE(r.reached_zero);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.counts.r2, 1);
}

TEST(Simplify, NeedsR3) {
  // s1 s2 s1 S2 S1 S2 on 3 strands is trivial, but no bigon is visible at first.
  auto d = trace_closure(parse_tangle("s1 s2 s1 S2 S1 S2", 3));
  auto r = reidemeister_simplify(d, MoveSet::all(), {});
  EXPECT_TRUE(r.reached_zero);
  EXPECT_EQ(r.final_diagram.free_loops, 3);
}

TEST(Verdict, Examples) {
  EXPECT_EQ(triviality_verdict(parse_tangle("s1", 2), Closure::Trace).verdict, Verdict::Trivial);
  EXPECT_EQ(triviality_verdict(parse_tangle("S1", 2), Closure::Trace).verdict, Verdict::Trivial);
  for (int k : {2, 3, -2, -3, 4}) {
    auto v = triviality_verdict(parse_tangle("s1^" + std::to_string(k), 2), Closure::Trace);
    EXPECT_EQ(v.verdict, Verdict::NonTrivial) << k;
  }
  auto two = triviality_verdict(TangleWord(2), Closure::Trace);
  EXPECT_EQ(two.verdict, Verdict::Trivial);
  EXPECT_EQ(two.components, 2);
}

TEST(Verdict, TrivialTraceIsReplayable) {
  auto v = triviality_verdict(parse_tangle("s1 s2 S1 s2 S2 S2", 3), Closure::Trace);
  EXPECT_EQ(v.verdict, Verdict::Trivial);
  EXPECT_EQ(static_cast<int>(v.trace.size()), v.counts.r1 + v.counts.r2 + v.counts.r3);
}
