#include <gtest/gtest.h>

#include "ssb/surface.hpp"

using namespace ssb;

namespace {

SurfaceWord torus_tangle(int k) {
  return SurfaceWord(3, Letters(std::abs(k), k > 0 ? c(1) : cinv(1)));
}

} // namespace

TEST(Resolve, Examples) {
  auto ab = parse_word("a1 b1", 2);
  EXPECT_EQ(resolve(ab, ResolutionSign::Plus).str(), "e1");
  EXPECT_EQ(resolve(ab, ResolutionSign::Minus).str(), "e1");
  auto ca = parse_word("c1 a1", 2);
  EXPECT_EQ(resolve(ca, ResolutionSign::Plus).str(), "s1 e1");
  EXPECT_EQ(resolve(ca, ResolutionSign::Minus).str(), "s1");
  EXPECT_EQ(resolve(parse_word("c1^3", 2), ResolutionSign::Minus).str(), "s1 s1 s1");
  EXPECT_EQ(resolve(parse_word("C1 C1", 2), ResolutionSign::Plus).str(), "S1 S1");
}

TEST(Resolve, KeepsCrossingsInOrder) {
  auto w = parse_word("a2 C1 b2 c1 delta(3,1)^2", 3);
  for (auto sign : {ResolutionSign::Plus, ResolutionSign::Minus}) {
    auto t = resolve(w, sign);
    std::vector<TangleLetter> crossings;
    for (const auto& l : t.letters())
      if (l.kind != TangleKind::CupCap)
        crossings.push_back(l);
    EXPECT_EQ(TangleWord(3, crossings), braid_from_word(parse_word("C1 c1 delta(3,1)^2", 3)));
  }
}

TEST(Euler, Calibration) {
  EXPECT_EQ(euler_characteristic(parse_closed("[]_1")), 2);
  EXPECT_EQ(euler_characteristic(parse_closed("[a1 b1]_2")), 0);
  EXPECT_EQ(euler_characteristic(parse_closed("[c1 a1]_2")), 1);
  auto sphere = twist_spin(SurfaceWord(3), 0);
  EXPECT_EQ(sphere.str(), "[a2 b2]_3");
  EXPECT_EQ(euler_characteristic(sphere), 2);
  EXPECT_EQ(euler_characteristic(parse_closed("[]_2")), 4);
}

TEST(Csb, Examples) {
  auto torus = csb_membership(parse_closed("[a1 b1]_2"));
  EXPECT_TRUE(torus.member());
  auto trefoil = csb_membership(parse_closed("[c1^3]_2"));
  EXPECT_EQ(trefoil.plus.verdict, Verdict::NonTrivial);
  EXPECT_EQ(trefoil.minus.verdict, Verdict::NonTrivial);
  EXPECT_TRUE(csb_membership(parse_closed("[]_2")).member());
}

TEST(TwistSpin, Examples) {
  EXPECT_EQ(twist_spin(parse_word("C1", 3), 1), parse_closed("[a2 C1 b2 c1 delta(3,1)^2]_3"));
  EXPECT_EQ(twist_spin(parse_word("C1", 3), -1), parse_closed("[a2 C1 b2 c1 delta(3,1)^-2]_3"));
  EXPECT_EQ(twist_spin(parse_word("c1^-3", 3), 2), parse_closed("[a2 c1^-3 b2 c1^3 delta(3,1)^4]_3"));
  EXPECT_EQ(twist_spin(parse_word("c1 c3", 5), 0), parse_closed("[a2 a4 c1 c3 b2 b4 C3 C1]_5"));
  EXPECT_THROW(twist_spin(parse_word("a1", 3), 1), domain_error);
  EXPECT_THROW(twist_spin(parse_word("c1", 2), 1), domain_error);
}

TEST(TwistSpin, SaddleCountAndMembership) {
  for (int k = -5; k <= 5; ++k)
    for (int n = -2; n <= 2; ++n) {
      auto w = twist_spin(torus_tangle(k), n);
      EXPECT_EQ(w.word().saddle_count(), 2);
      EXPECT_EQ(euler_characteristic(w), 2) << w.str();
      EXPECT_TRUE(csb_membership(w).member()) << w.str();
    }
}

TEST(Mirror, ClosedExamples) {
  EXPECT_EQ(mirror_closure(parse_closed("[c1]_2")), parse_closed("[C1]_2"));
  auto w = parse_closed("[a2 C1 b2 c1 delta(3,1)^2]_3");
  EXPECT_EQ(mirror_closure(mirror_closure(w)), w);
}

TEST(Dnk, CrossingsAndComponents) {
  for (auto [n, k, expected] : {std::tuple{2, 3, 18}, {2, 5, 22}, {3, 3, 24}}) {
    auto d = plat_closure(dnk_word(n, k));
    EXPECT_EQ(d.crossing_count(), expected);
    EXPECT_EQ(d.crossing_count(), 6 * n + 2 * k);
    EXPECT_EQ(count_components(d), 2);
  }
  EXPECT_THROW(dnk_word(1, 3), domain_error);
  EXPECT_THROW(dnk_word(2, 4), domain_error);
}

TEST(Dnk, MinusResolutionOfTwistSpun) {
  auto w = index3_family(3);
  EXPECT_EQ(w.size(), 20u);
  EXPECT_EQ(index3_family(5).size(), 24u);
  auto minus = resolve(w.word(), ResolutionSign::Minus);
  auto dnk = dnk_word(2, 3);
  EXPECT_EQ(count_components(trace_closure(minus)), count_components(plat_closure(dnk)));
  EXPECT_EQ(kauffman_bracket(minus, Closure::Trace), kauffman_bracket(dnk, Closure::Plat));
}

TEST(Dnk, PlusResolutionNeedsNoR3) {
  auto plus = trace_closure(resolve(index3_family(3).word(), ResolutionSign::Plus));
  auto r = reidemeister_simplify(plus, MoveSet{true, true, false}, {});
  EXPECT_TRUE(r.reached_zero);
  EXPECT_EQ(r.counts.r3, 0);
}
