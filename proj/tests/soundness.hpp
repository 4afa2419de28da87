// Rule soundness against resolved-link invariants, shared by unit and acceptance tests.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "ssb/certificate.hpp"
#include "ssb/rules.hpp"
#include "ssb/surface.hpp"

namespace ssb::testing {

struct Resolved {
  int components = 0;
  LaurentPolynomial bracket;
};

struct SideInvariants {
  Resolved plus, minus;
  int euler = 0;
};

inline SideInvariants side_invariants(const ClosedWord& w) {
  SideInvariants s;
  for (auto sign : {ResolutionSign::Plus, ResolutionSign::Minus}) {
    auto t = resolve(w.word(), sign);
    Resolved r{count_components(trace_closure(t)), kauffman_bracket(t, Closure::Trace)};
    (sign == ResolutionSign::Plus ? s.plus : s.minus) = std::move(r);
  }
  s.euler = euler_characteristic(w);
  return s;
}

/// Split unknots the left side carries beyond the right side, per resolution.
struct Delta {
  int plus = 0;
  int minus = 0;
};

inline Delta expected_delta(RuleId id, Direction d, const RuleParams& params) {
  Delta out;
  if (id == RuleId::A9)
    out.plus = 1;
  else if (id == RuleId::A10)
    out.minus = 1;
  else if (id == RuleId::C2) {
    // LR stabilization: the stabilized (right) side carries the extra unknot
    const std::string x = params.at("x");
    if (x == "a")
      out.minus = -1;
    else if (x == "b")
      out.plus = -1;
  }
  if (d == Direction::RL) {
    out.plus = -out.plus;
    out.minus = -out.minus;
  }
  return out;
}

inline bool matches_with_delta(const Resolved& lhs, const Resolved& rhs, int delta, std::string& why) {
  if (lhs.components != rhs.components + delta) {
    why = "components " + std::to_string(lhs.components) + " vs " + std::to_string(rhs.components);
    return false;
  }
  auto scaled_l = delta < 0 ? lhs.bracket * LaurentPolynomial::delta().pow(-delta) : lhs.bracket;
  auto scaled_r = delta > 0 ? rhs.bracket * LaurentPolynomial::delta().pow(delta) : rhs.bracket;
  if (!equal_up_to_framing(scaled_l, scaled_r)) {
    why = "bracket " + lhs.bracket.str() + " vs " + rhs.bracket.str();
    return false;
  }
  return true;
}

/// Compare before/after of one step; returns an empty string when sound.
inline std::string check_step(const ClosedWord& before, const RewriteStep& step) {
  ClosedWord after = apply_step(before, step);
  auto l = side_invariants(before), r = side_invariants(after);
  if (l.euler != r.euler)
    return "euler " + std::to_string(l.euler) + " vs " + std::to_string(r.euler);
  auto delta = expected_delta(step.rule, step.direction, step.params);
  std::string why;
  if (!matches_with_delta(l.plus, r.plus, delta.plus, why))
    return "L+ " + why;
  if (!matches_with_delta(l.minus, r.minus, delta.minus, why))
    return "L- " + why;
  return {};
}

inline Letters random_letters(std::mt19937& rng, int strands, int length) {
  std::uniform_int_distribution<int> kind(0, 3), idx(1, strands - 1);
  Letters out;
  for (int i = 0; i < length; ++i)
    out.push_back({all_kinds[kind(rng)], idx(rng)});
  return out;
}

struct SoundnessReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
};

/// Every catalog instance and Markov move on 2..max_strands strands, each in `trials` random embeddings.
inline SoundnessReport run_soundness(int max_strands, int trials, unsigned seed) {
  SoundnessReport rep;
  std::mt19937 rng(seed);
  auto record = [&rep](const ClosedWord& w, const RewriteStep& s) {
    ++rep.checks;
    auto msg = check_step(w, s);
    if (!msg.empty())
      rep.violations.push_back(w.str() + " " + s.str() + ": " + msg);
  };
  for (int m = 2; m <= max_strands; ++m) {
    for (const auto& inst : RuleCatalog::get(m).instances()) {
      const int room = std::max<int>(2, 10 - static_cast<int>(std::max(inst.lhs.size(), inst.rhs.size())));
      std::uniform_int_distribution<int> len(0, room);
      for (int t = 0; t < trials; ++t) {
        const int total = len(rng);
        std::uniform_int_distribution<int> split(0, total);
        const int left = split(rng);
        auto pre = random_letters(rng, m, left), post = random_letters(rng, m, total - left);
        Letters word = pre;
        word.insert(word.end(), inst.lhs.begin(), inst.lhs.end());
        word.insert(word.end(), post.begin(), post.end());
        record(ClosedWord(m, word), {inst.id, Direction::LR, inst.params, pre.size(), {}});
      }
    }
    std::uniform_int_distribution<int> len(1, 10);
    for (int t = 0; t < trials; ++t) {
      ClosedWord w(m, random_letters(rng, m, len(rng)));
      record(w, {RuleId::C1, Direction::LR, {}, 0, {}});
      record(w, {RuleId::C1, Direction::RL, {}, w.size() - 1, {}});
      for (Kind x : all_kinds) {
        const int n = m - 1;
        ClosedWord s = n >= 2 ? ClosedWord(n, random_letters(rng, n, len(rng) - 1)) : ClosedWord(1, {});
        record(s, {RuleId::C2, Direction::LR, {{"x", kind_param_of(x)}}, s.size(), {}});
      }
    }
  }
  return rep;
}

} // namespace ssb::testing
