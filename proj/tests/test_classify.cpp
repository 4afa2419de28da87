#include <gtest/gtest.h>

#include "ssb/classify.hpp"

using namespace ssb;

namespace {

std::vector<std::string> class_names(const ClassificationReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.classes)
    out.push_back(c.representative.str());
  return out;
}

} // namespace

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize_csb2(parse_closed("[a1 a1 b1]_2")), parse_closed("[a1 b1]_2"));
  EXPECT_EQ(normalize_csb2(parse_closed("[a1 b1 c1 c1 c1]_2")), parse_closed("[a1 b1 c1]_2"));
  EXPECT_EQ(normalize_csb2(parse_closed("[c1 C1]_2")), parse_closed("[]_2"));
  EXPECT_EQ(normalize_csb2(parse_closed("[b1 a1 C1]_2")), parse_closed("[a1 b1 c1]_2"));
  EXPECT_EQ(normalize_csb2(parse_closed("[c1 a1 c1 C1]_2")), parse_closed("[a1 c1]_2"));
  EXPECT_THROW(normalize_csb2(parse_closed("[c1 c1 c1]_2")), domain_error);
  EXPECT_THROW(normalize_csb2(parse_closed("[c1]_3")), domain_error);
}

TEST(Normalize, CertifiedUpToLengthThree) {
  std::vector<Letters> layer{{}};
  int members = 0;
  for (int len = 0; len <= 3; ++len) {
    std::vector<Letters> next;
    for (const auto& l : layer) {
      ClosedWord w(2, l);
      if (csb_membership(w).member()) {
        ++members;
        auto r = certify_normal_form(w);
        ASSERT_TRUE(r.found()) << w.str();
        EXPECT_TRUE(replay_certificate(*r.certificate).valid) << w.str();
      }
      for (Kind k : all_kinds) {
        auto m = l;
        m.push_back({k, 1});
        next.push_back(std::move(m));
      }
    }
    layer = std::move(next);
  }
  EXPECT_EQ(members, 69);
}

TEST(Classes, Assignment) {
  EXPECT_EQ(assign_class(parse_closed("[C1]_2")).route, ClassRoute::Destabilizable);
  EXPECT_EQ(assign_class(parse_closed("[a1]_2")).representative, parse_closed("[c1]_2"));
  EXPECT_EQ(assign_class(parse_closed("[c1]_2")).route, ClassRoute::Direct);
  auto b = assign_class(parse_closed("[b1 c1]_2"));
  EXPECT_EQ(b.route, ClassRoute::MarkerSymmetry);
  EXPECT_EQ(b.representative, parse_closed("[a1 C1]_2"));
  EXPECT_EQ(assign_class(parse_closed("[b1 C1]_2")).representative, parse_closed("[a1 c1]_2"));
}

TEST(Classes, Destabilizable) {
  for (const char* w : {"[C1]_2", "[a1]_2", "[b1]_2", "[c1]_2"}) {
    auto r = equiv_search(parse_closed(w), parse_closed("[]_1"));
    ASSERT_TRUE(r.found()) << w;
    EXPECT_TRUE(replay_certificate(*r.certificate).valid);
  }
}

TEST(Enumerate, Examples) {
  auto zero = enumerate_csb2(0);
  EXPECT_EQ(class_names(zero), std::vector<std::string>{"[]_2"});

  const std::vector<std::string> six{"[]_2", "[c1]_2", "[a1 c1]_2", "[a1 C1]_2", "[a1 b1]_2", "[a1 b1 c1]_2"};
  for (int len : {4, 6}) {
    auto r = enumerate_csb2(len);
    EXPECT_EQ(class_names(r), six) << len;
    EXPECT_EQ(r.undecided, 0u);
    EXPECT_EQ(r.members + r.excluded, r.enumerated);
  }
}

TEST(Enumerate, InvariantsOfTheSix) {
  auto r = enumerate_csb2(4);
  std::map<std::string, int> chi;
  for (const auto& c : r.classes)
    chi[c.representative.str()] = c.invariants.euler_characteristic;
  EXPECT_EQ(chi["[]_2"], 4);
  EXPECT_EQ(chi["[c1]_2"], 2);
  EXPECT_EQ(chi["[a1 c1]_2"], 1);
  EXPECT_EQ(chi["[a1 C1]_2"], 1);
  EXPECT_EQ(chi["[a1 b1]_2"], 0);
  EXPECT_EQ(chi["[a1 b1 c1]_2"], 0);
}

TEST(IndexThree, Family) {
  for (int k : {3, 5}) {
    auto w = index3_family(k);
    EXPECT_EQ(w.size(), static_cast<std::size_t>(2 * k + 14));
    EXPECT_TRUE(csb_membership(w).member());
  }
}
