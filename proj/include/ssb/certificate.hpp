// Rewrite steps, certificates, JSON serialization and replay.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ssb/rules.hpp"
#include "ssb/surface.hpp"

namespace ssb {

enum class Strictness { Strict, Lax };

inline const char* strictness_name(Strictness s) { return s == Strictness::Strict ? "strict" : "lax"; }

struct RewriteStep {
  RuleId rule = RuleId::A1;
  Direction direction = Direction::LR;
  RuleParams params;
  std::size_t position = 0;
  std::string evidence; // CSB verdicts of the side condition, strict C-moves only

  std::string str() const {
    std::string out = rule_name(rule) + " " + direction_name(direction) + " @" + std::to_string(position);
    for (const auto& [k, v] : params)
      out += " " + k + "=" + v;
    return out;
  }
  bool operator==(const RewriteStep& o) const {
    return rule == o.rule && direction == o.direction && params == o.params && position == o.position;
  }
};

struct RewriteCertificate {
  ClosedWord start;
  ClosedWord end;
  Strictness strictness = Strictness::Strict;
  std::vector<RewriteStep> steps;
};

inline std::optional<Kind> kind_from_param(std::string_view s) {
  if (s == "a")
    return Kind::A;
  if (s == "b")
    return Kind::B;
  if (s == "c")
    return Kind::C;
  if (s == "C")
    return Kind::Cinv;
  return std::nullopt;
}

inline std::string kind_param_of(Kind k) { return detail::kind_param(k); }

/// Apply one step; throws rule_error when it does not match.
inline ClosedWord apply_step(const ClosedWord& w, const RewriteStep& step) {
  switch (step.rule) {
  case RuleId::C1: {
    const std::size_t expected = step.direction == Direction::LR ? 0 : (w.size() == 0 ? 0 : w.size() - 1);
    if (step.position != expected)
      throw rule_error("C1 " + std::string(direction_name(step.direction)) + " must act at position " +
                       std::to_string(expected));
    return apply_c1(w, step.direction);
  }
  case RuleId::C2: {
    if (step.direction == Direction::LR) {
      auto it = step.params.find("x");
      std::optional<Kind> x = it == step.params.end() ? std::nullopt : kind_from_param(it->second);
      if (!x)
        throw rule_error("C2 stabilization needs parameter x in {a,b,c,C}");
      if (step.position != w.size())
        throw rule_error("C2 LR must act at position " + std::to_string(w.size()));
      return apply_c2(w, Direction::LR, x);
    }
    if (w.size() == 0 || step.position != w.size() - 1)
      throw rule_error("C2 RL must act on the last letter");
    if (auto it = step.params.find("x"); it != step.params.end()) {
      auto x = kind_from_param(it->second);
      if (!x || w.letters().back().kind != *x)
        throw rule_error("C2 RL: trailing letter is not of kind " + it->second);
    }
    return apply_c2(w, Direction::RL);
  }
  default: {
    const auto* inst = RuleCatalog::get(w.strands()).find(step.rule, step.params);
    if (!inst)
      throw rule_error("no " + rule_name(step.rule) + " instance with these parameters on " +
                       std::to_string(w.strands()) + " strands");
    return ClosedWord(apply_instance(w.word(), *inst, step.direction, step.position));
  }
  }
}

/// The same rule in the opposite direction at the image position; applying it to
/// apply_step(w, step) gives back w.
inline RewriteStep inverse_step(const ClosedWord& w, const RewriteStep& step) {
  RewriteStep inv = step;
  inv.direction = opposite(step.direction);
  inv.evidence.clear();
  if (step.rule == RuleId::C1)
    inv.position = step.direction == Direction::LR ? w.size() - 1 : 0;
  if (step.rule == RuleId::C2 && step.direction == Direction::RL)
    inv.params["x"] = kind_param_of(w.letters().back().kind);
  return inv;
}

struct ReplayReport {
  bool valid = true;
  int failed_step = -1; // -1 with !valid: end mismatch
  std::string message;
};

inline std::string csb_evidence(const CsbVerdict& v) {
  return std::string("+:") + verdict_name(v.plus.verdict) + " -:" + verdict_name(v.minus.verdict);
}

inline ReplayReport replay_certificate(const RewriteCertificate& cert, CsbBudget budget = {}) {
  ClosedWord cur = cert.start;
  for (std::size_t s = 0; s < cert.steps.size(); ++s) {
    const auto& step = cert.steps[s];
    try {
      ClosedWord next = apply_step(cur, step);
      if (cert.strictness == Strictness::Strict && is_markov(step.rule)) {
        auto cond = markov_condition_word(cur, step.rule, step.direction);
        auto v = csb_membership(cond, budget);
        if (!v.member())
          return {false, static_cast<int>(s),
                  "side condition not certified for " + cond.str() + " (" + csb_evidence(v) + ")"};
      }
      cur = std::move(next);
    } catch (const std::exception& e) {
      return {false, static_cast<int>(s), e.what()};
    }
  }
  if (!(cur == cert.end))
    return {false, -1, "chain ends at " + cur.str() + ", expected " + cert.end.str()};
  return {true, -1, "valid"};
}

inline nlohmann::json to_json(const RewriteCertificate& cert) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : cert.steps) {
    nlohmann::json j{{"rule", rule_name(s.rule)},
                     {"direction", direction_name(s.direction)},
                     {"params", s.params},
                     {"position", s.position}};
    if (!s.evidence.empty())
      j["evidence"] = s.evidence;
    steps.push_back(std::move(j));
  }
  return {{"start", cert.start.str()},
          {"end", cert.end.str()},
          {"strictness", strictness_name(cert.strictness)},
          {"steps", std::move(steps)}};
}

inline RewriteCertificate certificate_from_json(const nlohmann::json& j) {
  RewriteCertificate cert;
  try {
    cert.start = parse_closed(j.at("start").get<std::string>());
    cert.end = parse_closed(j.at("end").get<std::string>());
    auto strict = j.value("strictness", std::string("strict"));
    if (strict != "strict" && strict != "lax")
      throw parse_error("strictness must be strict or lax", 0);
    cert.strictness = strict == "strict" ? Strictness::Strict : Strictness::Lax;
    for (const auto& js : j.at("steps")) {
      RewriteStep s;
      auto name = js.at("rule").get<std::string>();
      auto id = rule_from_name(name);
      if (!id)
        throw parse_error("unknown rule " + name, 0);
      s.rule = *id;
      auto dir = js.at("direction").get<std::string>();
      if (dir != "LR" && dir != "RL")
        throw parse_error("direction must be LR or RL", 0);
      s.direction = dir == "LR" ? Direction::LR : Direction::RL;
      if (js.contains("params"))
        s.params = js.at("params").get<RuleParams>();
      s.position = js.at("position").get<std::size_t>();
      s.evidence = js.value("evidence", std::string());
      cert.steps.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("certificate: ") + e.what(), 0);
  }
  return cert;
}

} // namespace ssb
