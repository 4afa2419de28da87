// Relation catalog A1-A14 and Markov moves C1/C2 as concrete local rewrites.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssb/word.hpp"

namespace ssb {

enum class RuleId { A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12, A13, A14, C1, C2 };

inline constexpr RuleId all_rule_ids[] = {RuleId::A1,  RuleId::A2,  RuleId::A3,  RuleId::A4,
                                          RuleId::A5,  RuleId::A6,  RuleId::A7,  RuleId::A8,
                                          RuleId::A9,  RuleId::A10, RuleId::A11, RuleId::A12,
                                          RuleId::A13, RuleId::A14, RuleId::C1,  RuleId::C2};

inline std::string rule_name(RuleId id) {
  if (id == RuleId::C1)
    return "C1";
  if (id == RuleId::C2)
    return "C2";
  return "A" + std::to_string(static_cast<int>(id) + 1);
}

inline std::optional<RuleId> rule_from_name(std::string_view name) {
  for (RuleId id : all_rule_ids)
    if (rule_name(id) == name)
      return id;
  return std::nullopt;
}

inline bool is_markov(RuleId id) { return id == RuleId::C1 || id == RuleId::C2; }

enum class Direction { LR, RL };

inline const char* direction_name(Direction d) { return d == Direction::LR ? "LR" : "RL"; }
inline Direction opposite(Direction d) { return d == Direction::LR ? Direction::RL : Direction::LR; }

using RuleParams = std::map<std::string, std::string>;

/// One concrete instance: lhs <-> rhs. Markov instances carry empty patterns.
struct RuleInstance {
  RuleId id = RuleId::A1;
  RuleParams params;
  Letters lhs;
  Letters rhs;

  const Letters& pattern(Direction d) const { return d == Direction::LR ? lhs : rhs; }
  const Letters& image(Direction d) const { return d == Direction::LR ? rhs : lhs; }
};

class RuleSet {
public:
  RuleSet() { allowed_.fill(true); }
  explicit RuleSet(std::initializer_list<RuleId> ids) {
    allowed_.fill(false);
    for (RuleId id : ids)
      allowed_[static_cast<int>(id)] = true;
  }
  static RuleSet all() { return {}; }
  static RuleSet none() { return RuleSet({}); }

  bool contains(RuleId id) const { return allowed_[static_cast<int>(id)]; }
  RuleSet& add(RuleId id) {
    allowed_[static_cast<int>(id)] = true;
    return *this;
  }
  RuleSet& remove(RuleId id) {
    allowed_[static_cast<int>(id)] = false;
    return *this;
  }
  bool operator==(const RuleSet&) const = default;

  std::string str() const {
    std::string out;
    for (RuleId id : all_rule_ids)
      if (contains(id))
        out += (out.empty() ? "" : ",") + rule_name(id);
    return out;
  }

private:
  std::array<bool, 16> allowed_{};
};

/// Parses "A1,A3-A13,C1"; "all" selects every rule.
inline RuleSet parse_rule_set(std::string_view text) {
  if (text == "all")
    return RuleSet::all();
  RuleSet out = RuleSet::none();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ')
      item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ')
      item.remove_suffix(1);
    if (!item.empty()) {
      std::size_t dash = item.find('-');
      auto first = rule_from_name(item.substr(0, dash));
      auto last = dash == std::string_view::npos ? first : rule_from_name(item.substr(dash + 1));
      if (!first || !last || static_cast<int>(*first) > static_cast<int>(*last))
        throw parse_error("unknown rule '" + std::string(item) + "'", pos);
      for (int r = static_cast<int>(*first); r <= static_cast<int>(*last); ++r)
        out.add(static_cast<RuleId>(r));
    }
    pos = comma + 1;
  }
  return out;
}

namespace detail {

inline Generator gen(Kind k, int i) { return {k, i}; }

inline Letters concat(std::initializer_list<Letters> parts) {
  Letters out;
  for (const auto& p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline Letters half_twist_letters(int s, int base, bool inverse) {
  auto w = build_half_twist(s, base);
  return inverse ? formal_inverse(w).letters() : w.letters();
}

inline std::string kind_param(Kind k) { return k == Kind::Cinv ? "C" : std::string(1, kind_char(k)); }

inline std::vector<RuleInstance> build_catalog(int m) {
  std::vector<RuleInstance> out;
  auto add = [&out](RuleId id, RuleParams p, Letters lhs, Letters rhs) {
    out.push_back({id, std::move(p), std::move(lhs), std::move(rhs)});
  };
  auto I = [](int v) { return std::to_string(v); };
  const int top = m - 1;

  for (int i = 1; i <= top; ++i) {
    add(RuleId::A1, {{"i", I(i)}, {"order", "cC"}}, {c(i), cinv(i)}, {});
    add(RuleId::A1, {{"i", I(i)}, {"order", "Cc"}}, {cinv(i), c(i)}, {});
  }
  for (int i = 1; i <= top; ++i)
    for (int n = 1; n <= top; ++n) {
      if (std::abs(n - i) < 2)
        continue;
      for (Kind x : all_kinds)
        for (Kind y : all_kinds)
          add(RuleId::A2, {{"i", I(i)}, {"n", I(n)}, {"x", kind_param(x)}, {"y", kind_param(y)}},
              {gen(x, i), gen(y, n)}, {gen(y, n), gen(x, i)});
    }
  for (int i = 1; i <= top; ++i)
    for (int k : {i - 1, i + 1}) {
      if (k < 1 || k > top)
        continue;
      for (Kind x : all_kinds) {
        RuleParams p{{"i", I(i)}, {"k", I(k)}, {"x", kind_param(x)}};
        add(RuleId::A3, p, {c(i), gen(x, k), cinv(i)}, {cinv(k), gen(x, i), c(k)});
        add(RuleId::A4, p, {gen(x, i), c(k), c(i)}, {c(k), c(i), gen(x, k)});
        add(RuleId::A5, p, {gen(x, i), cinv(k), cinv(i)}, {cinv(k), cinv(i), gen(x, k)});
      }
      add(RuleId::A6, {{"i", I(i)}, {"k", I(k)}}, {a(i), b(k)}, {b(k), a(i)});
    }
  for (int i = 3; i <= top; ++i) {
    Letters loop{c(i - 1), c(i - 2), c(i), c(i - 1)};
    Letters sq = concat({loop, loop});
    add(RuleId::A7, {{"i", I(i)}}, concat({{a(i), b(i - 2)}, sq}), {a(i), b(i - 2)});
    add(RuleId::A8, {{"i", I(i)}}, concat({{b(i), a(i - 2)}, sq}), {b(i), a(i - 2)});
  }
  for (int i = 1; i <= top; ++i) {
    add(RuleId::A9, {{"i", I(i)}}, {a(i), a(i)}, {a(i)});
    add(RuleId::A10, {{"i", I(i)}}, {b(i), b(i)}, {b(i)});
    add(RuleId::A11, {{"i", I(i)}}, {a(i), b(i), c(i), c(i)}, {a(i), b(i)});
  }
  for (int i = 1; i <= top; ++i)
    for (int k : {i - 1, i + 1}) {
      if (k < 1 || k > top)
        continue;
      const int base = std::min(i, k);
      RuleParams p{{"i", I(i)}, {"k", I(k)}};
      add(RuleId::A12, p, concat({{a(i), b(k)}, half_twist_letters(3, base, false)}),
          concat({{a(i), b(k)}, half_twist_letters(3, base, true)}));
      Letters head{a(i), cinv(k), b(i), c(k)};
      Letters d = half_twist_letters(3, base, false);
      add(RuleId::A14, p, concat({head, d, d}), head);
    }
  // x_{base+j-1} D = D x_{base+s-1-j} inside the window [base, base+s-1]; also with D^-1.
  for (int s = 2; s <= m; ++s)
    for (int base = 1; base + s - 1 <= m; ++base)
      for (bool inverse : {false, true}) {
        Letters d = half_twist_letters(s, base, inverse);
        for (int j = 1; j <= s - 1; ++j)
          for (Kind x : all_kinds)
            add(RuleId::A13,
                {{"s", I(s)}, {"base", I(base)}, {"j", I(j)}, {"x", kind_param(x)}, {"inverse", inverse ? "1" : "0"}},
                concat({{gen(x, base + j - 1)}, d}), concat({d, {gen(x, base + s - 1 - j)}}));
      }
  return out;
}

} // namespace detail

/// Every concrete A-rule instance on m strands (Markov moves are handled separately).
class RuleCatalog {
public:
  explicit RuleCatalog(int m) : strands_(m), instances_(detail::build_catalog(m)) {
    for (std::size_t r = 0; r < instances_.size(); ++r)
      for (Direction d : {Direction::LR, Direction::RL}) {
        const auto& pat = instances_[r].pattern(d);
        if (!pat.empty())
          by_first_[d == Direction::RL][key(pat.front())].push_back(r);
      }
  }

  static const RuleCatalog& get(int m) {
    static std::mutex lock;
    static std::map<int, std::unique_ptr<RuleCatalog>> cache;
    std::lock_guard guard(lock);
    auto& slot = cache[m];
    if (!slot)
      slot = std::make_unique<RuleCatalog>(m);
    return *slot;
  }

  int strands() const noexcept { return strands_; }
  const std::vector<RuleInstance>& instances() const noexcept { return instances_; }

  /// Instances whose pattern in direction d starts with g.
  const std::vector<std::size_t>& starting_with(Direction d, const Generator& g) const {
    static const std::vector<std::size_t> empty;
    const auto& table = by_first_[d == Direction::RL];
    auto it = table.find(key(g));
    return it == table.end() ? empty : it->second;
  }

  const RuleInstance* find(RuleId id, const RuleParams& params) const {
    for (const auto& r : instances_)
      if (r.id == id && r.params == params)
        return &r;
    return nullptr;
  }

  std::size_t count(RuleId id) const {
    return static_cast<std::size_t>(
        std::count_if(instances_.begin(), instances_.end(), [id](const RuleInstance& r) { return r.id == id; }));
  }

private:
  static int key(const Generator& g) { return static_cast<int>(g.kind) * 4096 + g.index; }

  int strands_;
  std::vector<RuleInstance> instances_;
  std::array<std::unordered_map<int, std::vector<std::size_t>>, 2> by_first_;
};

class rule_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline bool matches_at(const Letters& w, const Letters& pattern, std::size_t pos) {
  if (pos + pattern.size() > w.size())
    return false;
  return std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

/// Replace pattern(d) at pos with image(d). Empty patterns insert at pos.
inline SurfaceWord apply_instance(const SurfaceWord& w, const RuleInstance& r, Direction d, std::size_t pos) {
  const auto& pat = r.pattern(d);
  if (pos > w.size() || !matches_at(w.letters(), pat, pos))
    throw rule_error(rule_name(r.id) + " " + direction_name(d) + " does not match at position " +
                     std::to_string(pos) + " of " + w.str());
  const auto& img = r.image(d);
  Letters out(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), img.begin(), img.end());
  out.insert(out.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos + pat.size()), w.letters().end());
  return SurfaceWord(w.strands(), std::move(out));
}

/// C1: LR moves the first letter to the end, RL the last letter to the front.
inline ClosedWord apply_c1(const ClosedWord& w, Direction d) {
  if (w.size() == 0)
    throw rule_error("C1 needs a nonempty word");
  Letters out = w.letters();
  if (d == Direction::LR)
    std::rotate(out.begin(), out.begin() + 1, out.end());
  else
    std::rotate(out.rbegin(), out.rbegin() + 1, out.rend());
  return ClosedWord(w.strands(), std::move(out));
}

/// C2: LR stabilizes [S]_n -> [S x_n]_{n+1}; RL removes a trailing x_n that is the only letter of index n.
inline ClosedWord apply_c2(const ClosedWord& w, Direction d, std::optional<Kind> x = std::nullopt) {
  const int n = w.strands();
  if (d == Direction::LR) {
    if (!x)
      throw rule_error("C2 stabilization needs a letter kind");
    Letters out = w.letters();
    out.push_back({*x, n});
    return ClosedWord(n + 1, std::move(out));
  }
  if (n < 2 || w.size() == 0 || w.letters().back().index != n - 1)
    throw rule_error("C2 destabilization needs a trailing letter of index " + std::to_string(n - 1));
  Letters out(w.letters().begin(), w.letters().end() - 1);
  for (const auto& g : out)
    if (g.index == n - 1)
      throw rule_error("C2 destabilization: index " + std::to_string(n - 1) + " occurs before the last letter");
  return ClosedWord(n - 1, std::move(out));
}

/// Word fed to the CSB side condition of a C-move applied to w.
inline ClosedWord markov_condition_word(const ClosedWord& w, RuleId id, Direction d) {
  if (id == RuleId::C2 && d == Direction::RL)
    return apply_c2(w, d);
  return w;
}

inline bool can_destabilize(const ClosedWord& w) {
  const int n = w.strands();
  if (n < 2 || w.size() == 0 || w.letters().back().index != n - 1)
    return false;
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w.letters()[p].index == n - 1)
      return false;
  return true;
}

} // namespace ssb
