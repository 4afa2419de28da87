// Normal forms of closed 2-strand surface words and the index-two classification.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ssb/search.hpp"
#include "ssb/surface.hpp"

namespace ssb {

namespace detail {

inline ClosedWord two_strand_word(bool a1, bool b1, int net) {
  Letters out;
  if (a1)
    out.push_back(a(1));
  if (b1)
    out.push_back(b(1));
  for (int r = 0; r < std::abs(net); ++r)
    out.push_back(net > 0 ? c(1) : cinv(1));
  return ClosedWord(2, std::move(out));
}

} // namespace detail

/// [a1^al b1^be c1^ga c1^-de]_2 with al, be in {0,1}; net crossing exponent reduced by A11
/// when al*be = 1 and by A1 otherwise.
inline ClosedWord normalize_csb2(const ClosedWord& w, CsbBudget budget = {}) {
  if (w.strands() != 2)
    throw domain_error("normalize_csb2 needs a word on 2 strands");
  auto v = csb_membership(w, budget);
  if (!v.member())
    throw domain_error(w.str() + " is not certified in CSB_2 (" + csb_evidence(v) + ")");
  bool has_a = false, has_b = false;
  int net = 0;
  for (const auto& g : w.letters()) {
    has_a |= g.kind == Kind::A;
    has_b |= g.kind == Kind::B;
    net += g.kind == Kind::C ? 1 : g.kind == Kind::Cinv ? -1 : 0;
  }
  if (has_a && has_b)
    return detail::two_strand_word(true, true, net % 2 != 0 ? 1 : 0);
  return detail::two_strand_word(has_a, has_b, net);
}

/// Strict certificate from w to its algebraic normal form on 2 strands.
inline SearchResult certify_normal_form(const ClosedWord& w, SearchOptions opt = {}) {
  if (!opt.budget.max_strands)
    opt.budget.max_strands = 2;
  return equiv_search(w, normalize_csb2(w, opt.csb), opt);
}

enum class ClassRoute {
  Direct,         // the normal form is one of the six
  Destabilizable, // reaches [1]_1 by C2, joined to the [c1] class
  MarkerSymmetry  // b-only form; swapping a/b together with c/c^-1 is a double reflection
};

inline const char* route_name(ClassRoute r) {
  switch (r) {
  case ClassRoute::Direct: return "direct";
  case ClassRoute::Destabilizable: return "destabilizable";
  default: return "marker-symmetry";
  }
}

struct ClassAssignment {
  ClosedWord normal_form;      // algebraic normal form
  ClosedWord representative;   // one of the six
  ClassRoute route = ClassRoute::Direct;
};

inline const std::vector<ClosedWord>& six_types() {
  static const std::vector<ClosedWord> six{parse_closed("[]_2"),       parse_closed("[c1]_2"),
                                           parse_closed("[a1 c1]_2"),  parse_closed("[a1 C1]_2"),
                                           parse_closed("[a1 b1]_2"),  parse_closed("[a1 b1 c1]_2")};
  return six;
}

inline ClassAssignment assign_class(const ClosedWord& normal_form) {
  bool has_a = false, has_b = false;
  int net = 0;
  for (const auto& g : normal_form.letters()) {
    has_a |= g.kind == Kind::A;
    has_b |= g.kind == Kind::B;
    net += g.kind == Kind::C ? 1 : g.kind == Kind::Cinv ? -1 : 0;
  }
  ClassAssignment out{normal_form, normal_form, ClassRoute::Direct};
  if (has_a && has_b)
    return out;
  const bool marker = has_a || has_b;
  if (!marker && net == 0)
    return out;
  if ((!marker && net != 0) || (marker && net == 0)) {
    out.representative = parse_closed("[c1]_2");
    if (!(normal_form == out.representative))
      out.route = ClassRoute::Destabilizable;
    return out;
  }
  if (has_b) {
    out.representative = detail::two_strand_word(true, false, -net);
    out.route = ClassRoute::MarkerSymmetry;
  }
  return out;
}

struct ClassEntry {
  ClosedWord representative;
  std::size_t members = 0;
  std::map<ClassRoute, std::size_t> by_route;
  std::vector<ClosedWord> normal_forms; // distinct algebraic normal forms seen
  SurfaceInvariants invariants;
};

struct ClassificationReport {
  int max_length = 0;
  std::size_t enumerated = 0;
  std::size_t members = 0;   // certified CSB_2 words
  std::size_t excluded = 0;  // a resolution is certified nontrivial
  std::size_t undecided = 0; // neither
  std::vector<ClassEntry> classes;
  std::vector<std::pair<std::string, std::string>> unverified_pairs;
};

/// All words over {a1, b1, c1, c1^-1} up to max_length, filtered by CSB_2 membership.
inline ClassificationReport enumerate_csb2(int max_length, CsbBudget budget = {}) {
  if (max_length < 0)
    throw domain_error("max_length must be nonnegative");
  ClassificationReport report;
  report.max_length = max_length;
  std::map<std::string, ClassEntry> classes;
  std::vector<Letters> layer{{}};
  for (int len = 0; len <= max_length; ++len) {
    std::vector<Letters> next;
    for (const auto& letters : layer) {
      ++report.enumerated;
      ClosedWord w(2, letters);
      auto v = csb_membership(w, budget);
      if (v.member()) {
        ++report.members;
        auto nf = normalize_csb2(w, budget);
        auto cls = assign_class(nf);
        auto& entry = classes[cls.representative.str()];
        entry.representative = cls.representative;
        ++entry.members;
        ++entry.by_route[cls.route];
        if (std::find(entry.normal_forms.begin(), entry.normal_forms.end(), nf) == entry.normal_forms.end())
          entry.normal_forms.push_back(nf);
      } else if (v.excluded()) {
        ++report.excluded;
      } else {
        ++report.undecided;
      }
      if (len < max_length)
        for (Kind k : all_kinds) {
          auto longer = letters;
          longer.push_back({k, 1});
          next.push_back(std::move(longer));
        }
    }
    layer = std::move(next);
  }
  for (const auto& six : six_types()) {
    auto it = classes.find(six.str());
    if (it == classes.end())
      continue;
    it->second.invariants = surface_invariants(six, budget);
    report.classes.push_back(std::move(it->second));
    classes.erase(it);
  }
  for (auto& [name, entry] : classes) {
    entry.invariants = surface_invariants(entry.representative, budget);
    report.classes.push_back(std::move(entry));
  }
  report.unverified_pairs = {{"[a1 c1]_2", "[a1 C1]_2"}, {"[a1 b1]_2", "[a1 b1 c1]_2"}};
  return report;
}

} // namespace ssb
