// Bounded breadth-first rewriting search producing replayable certificates.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ssb/certificate.hpp"
#include "ssb/rules.hpp"
#include "ssb/surface.hpp"

namespace ssb {

struct SearchBudget {
  std::size_t max_word_length = 0; // 0: longest input + 6
  std::size_t max_expansions = 1000000;
  int max_strands = 0; // 0: most strands among the inputs
};

struct SearchOptions {
  RuleSet rules = RuleSet::all();
  Strictness strictness = Strictness::Strict;
  SearchBudget budget;
  CsbBudget csb;
  int max_restarts = 64;
};

enum class SearchStatus { Found, Unknown };

struct SearchResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<RewriteCertificate> certificate;
  std::size_t expansions = 0;
  int restarts = 0;
  std::string note;

  bool found() const { return status == SearchStatus::Found; }
};

namespace detail {

inline std::string word_key(const ClosedWord& w) {
  std::string k;
  k.reserve(1 + 2 * w.size());
  k.push_back(static_cast<char>(w.strands()));
  for (const auto& g : w.letters()) {
    k.push_back(static_cast<char>(g.kind));
    k.push_back(static_cast<char>(g.index));
  }
  return k;
}

struct Edge {
  ClosedWord word;
  std::vector<RewriteStep> steps;
};

/// C-move side conditions known to fail; `eager` checks every condition while expanding.
struct MarkovFilter {
  std::unordered_set<std::string> blocked;
  bool eager = false;
};

class Expander {
public:
  Expander(const SearchOptions& opt, std::size_t max_len, int max_strands,
           const MarkovFilter& blocked)
      : opt_(opt), max_len_(max_len), max_strands_(max_strands), filter_(blocked) {}

  std::vector<Edge> successors(const ClosedWord& w) const {
    std::vector<Edge> out;
    const auto& letters = w.letters();
    const auto& catalog = RuleCatalog::get(w.strands());
    for (std::size_t p = 0; p < letters.size(); ++p)
      for (Direction d : {Direction::LR, Direction::RL})
        for (std::size_t r : catalog.starting_with(d, letters[p])) {
          const auto& inst = catalog.instances()[r];
          if (!opt_.rules.contains(inst.id) || !matches_at(letters, inst.pattern(d), p))
            continue;
          if (letters.size() - inst.pattern(d).size() + inst.image(d).size() > max_len_)
            continue;
          Edge e{ClosedWord(apply_instance(w.word(), inst, d, p)), {{inst.id, d, inst.params, p, {}}}};
          fold(e);
          out.push_back(std::move(e));
        }
    // A1 insertions stay unfolded; folding would undo them.
    if (opt_.rules.contains(RuleId::A1) && letters.size() + 2 <= max_len_)
      for (std::size_t p = 0; p <= letters.size(); ++p)
        for (int i = 1; i < w.strands(); ++i)
          for (const char* order : {"cC", "Cc"}) {
            RewriteStep s{RuleId::A1, Direction::RL, {{"i", std::to_string(i)}, {"order", order}}, p, {}};
            out.push_back({apply_step(w, s), {s}});
          }
    if (opt_.rules.contains(RuleId::C1) && w.size() >= 2 && allowed(w))
      for (Direction d : {Direction::LR, Direction::RL}) {
        Edge e{apply_c1(w, d), {{RuleId::C1, d, {}, d == Direction::LR ? 0 : w.size() - 1, {}}}};
        fold(e);
        out.push_back(std::move(e));
      }
    if (opt_.rules.contains(RuleId::C2)) {
      if (can_destabilize(w)) {
        auto s = apply_c2(w, Direction::RL);
        if (allowed(s)) {
          Edge e{s, {{RuleId::C2, Direction::RL, {{"x", kind_param_of(letters.back().kind)}}, w.size() - 1, {}}}};
          fold(e);
          out.push_back(std::move(e));
        }
      }
      if (w.strands() + 1 <= max_strands_ && w.size() + 1 <= max_len_ && allowed(w))
        for (Kind x : all_kinds) {
          Edge e{apply_c2(w, Direction::LR, x), {{RuleId::C2, Direction::LR, {{"x", kind_param_of(x)}}, w.size(), {}}}};
          fold(e);
          out.push_back(std::move(e));
        }
    }
    return out;
  }

private:
  bool allowed(const ClosedWord& condition) const {
    if (filter_.blocked.count(word_key(condition)))
      return false;
    return !filter_.eager || csb_membership(condition, opt_.csb).member();
  }

  /// Cancel adjacent c_i c_i^-1 pairs, leftmost first, recording A1 steps.
  void fold(Edge& e) const {
    if (!opt_.rules.contains(RuleId::A1))
      return;
    std::size_t p = 0;
    while (e.word.size() >= 2 && p + 1 < e.word.size()) {
      const auto& l = e.word.letters();
      if (l[p].index == l[p + 1].index &&
          ((l[p].kind == Kind::C && l[p + 1].kind == Kind::Cinv) ||
           (l[p].kind == Kind::Cinv && l[p + 1].kind == Kind::C))) {
        RewriteStep s{RuleId::A1,
                      Direction::LR,
                      {{"i", std::to_string(l[p].index)}, {"order", l[p].kind == Kind::C ? "cC" : "Cc"}},
                      p,
                      {}};
        e.word = apply_step(e.word, s);
        e.steps.push_back(std::move(s));
        p = p == 0 ? 0 : p - 1;
      } else {
        ++p;
      }
    }
  }

  const SearchOptions& opt_;
  std::size_t max_len_;
  int max_strands_;
  const MarkovFilter& filter_;
};

struct Tree {
  struct Node {
    ClosedWord word;
    int parent;
    std::vector<RewriteStep> steps; // from parent to this node
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> index;

  int add(ClosedWord w, int parent, std::vector<RewriteStep> steps, std::string key) {
    nodes.push_back({std::move(w), parent, std::move(steps)});
    const int id = static_cast<int>(nodes.size()) - 1;
    index.emplace(std::move(key), id);
    return id;
  }

  /// Steps from the root to node id.
  std::vector<RewriteStep> path_from_root(int id) const {
    std::vector<std::vector<RewriteStep>> chunks;
    for (int k = id; nodes[k].parent >= 0; k = nodes[k].parent)
      chunks.push_back(nodes[k].steps);
    std::vector<RewriteStep> out;
    for (auto it = chunks.rbegin(); it != chunks.rend(); ++it)
      out.insert(out.end(), it->begin(), it->end());
    return out;
  }

  /// Steps from node id back to the root, each edge inverted.
  std::vector<RewriteStep> path_to_root(int id) const {
    std::vector<RewriteStep> out;
    for (int k = id; nodes[k].parent >= 0; k = nodes[k].parent) {
      const auto& edge = nodes[k].steps;
      std::vector<ClosedWord> words{nodes[nodes[k].parent].word};
      for (const auto& s : edge)
        words.push_back(apply_step(words.back(), s));
      for (std::size_t j = edge.size(); j-- > 0;)
        out.push_back(inverse_step(words[j], edge[j]));
    }
    return out;
  }
};

inline std::size_t default_length(std::size_t longest, const SearchBudget& b) {
  return b.max_word_length ? b.max_word_length : longest + 6;
}

/// Re-verify every C-move side condition; returns the condition words that fail.
inline std::vector<ClosedWord> verify_strict(RewriteCertificate& cert, const CsbBudget& budget) {
  std::vector<ClosedWord> failed;
  ClosedWord cur = cert.start;
  for (auto& step : cert.steps) {
    if (is_markov(step.rule)) {
      auto cond = markov_condition_word(cur, step.rule, step.direction);
      auto v = csb_membership(cond, budget);
      if (!v.member())
        failed.push_back(cond);
      else
        step.evidence = csb_evidence(v);
    }
    cur = apply_step(cur, step);
  }
  return failed;
}

inline constexpr int lazy_restarts = 4;

inline SearchResult bidirectional(const ClosedWord& u, const ClosedWord& v, const SearchOptions& opt,
                                  const MarkovFilter& blocked) {
  SearchResult result;
  const std::size_t max_len = default_length(std::max(u.size(), v.size()), opt.budget);
  const int max_strands = opt.budget.max_strands ? opt.budget.max_strands : std::max(u.strands(), v.strands());
  Expander expand(opt, max_len, max_strands, blocked);

  Tree tree[2];
  std::vector<int> frontier[2];
  frontier[0].push_back(tree[0].add(u, -1, {}, word_key(u)));
  frontier[1].push_back(tree[1].add(v, -1, {}, word_key(v)));

  auto finish = [&](int side, int id, int other) {
    const int fwd = side == 0 ? id : other;
    const int bwd = side == 0 ? other : id;
    RewriteCertificate cert{u, v, opt.strictness, tree[0].path_from_root(fwd)};
    auto tail = tree[1].path_to_root(bwd);
    cert.steps.insert(cert.steps.end(), tail.begin(), tail.end());
    result.status = SearchStatus::Found;
    result.certificate = std::move(cert);
    return result;
  };

  if (tree[1].index.count(word_key(u)))
    return finish(0, 0, 0);
  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<int> next;
    for (int id : frontier[side]) {
      if (result.expansions >= opt.budget.max_expansions) {
        result.note = "expansion budget exhausted";
        return result;
      }
      ++result.expansions;
      auto succ = expand.successors(tree[side].nodes[id].word);
      std::stable_sort(succ.begin(), succ.end(), [](const Edge& x, const Edge& y) {
        return x.word.size() != y.word.size() ? x.word.size() < y.word.size()
                                              : word_key(x.word) < word_key(y.word);
      });
      for (auto& e : succ) {
        auto k = word_key(e.word);
        if (tree[side].index.count(k))
          continue;
        auto hit = tree[1 - side].index.find(k);
        const int nid = tree[side].add(std::move(e.word), id, std::move(e.steps), k);
        if (hit != tree[1 - side].index.end())
          return finish(side, nid, hit->second);
        next.push_back(nid);
      }
    }
    frontier[side] = std::move(next);
  }
  result.note = "search space exhausted within the length and strand limits";
  return result;
}

/// Breadth-first from start until goal holds; used for destabilization bounds.
inline SearchResult explore(const ClosedWord& start, const std::function<bool(const ClosedWord&)>& goal,
                            const SearchOptions& opt, const MarkovFilter& blocked) {
  SearchResult result;
  Expander expand(opt, default_length(start.size(), opt.budget),
                  opt.budget.max_strands ? opt.budget.max_strands : start.strands(), blocked);
  Tree tree;
  std::vector<int> frontier{tree.add(start, -1, {}, word_key(start))};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int id : frontier) {
      if (result.expansions >= opt.budget.max_expansions) {
        result.note = "expansion budget exhausted";
        return result;
      }
      ++result.expansions;
      for (auto& e : expand.successors(tree.nodes[id].word)) {
        auto k = word_key(e.word);
        if (tree.index.count(k))
          continue;
        const bool hit = goal(e.word);
        const int nid = tree.add(std::move(e.word), id, std::move(e.steps), k);
        if (hit) {
          result.status = SearchStatus::Found;
          result.certificate = RewriteCertificate{start, tree.nodes[nid].word, opt.strictness, tree.path_from_root(nid)};
          return result;
        }
        next.push_back(nid);
      }
    }
    frontier = std::move(next);
  }
  result.note = "search space exhausted within the length and strand limits";
  return result;
}

template <class Run>
SearchResult with_strict_retries(const SearchOptions& opt, Run run) {
  MarkovFilter filter;
  std::size_t spent = 0;
  for (int attempt = 0;; ++attempt) {
    filter.eager = attempt >= lazy_restarts;
    SearchResult r = run(filter);
    spent += r.expansions;
    r.expansions = spent;
    r.restarts = attempt;
    if (!r.found() || opt.strictness == Strictness::Lax)
      return r;
    auto failed = verify_strict(*r.certificate, opt.csb);
    if (failed.empty())
      return r;
    if (attempt + 1 >= opt.max_restarts) {
      SearchResult out;
      out.expansions = spent;
      out.restarts = attempt + 1;
      out.note = "restart limit reached while excluding uncertified C-moves";
      return out;
    }
    for (const auto& f : failed)
      filter.blocked.insert(word_key(f));
  }
}

} // namespace detail

/// Certificate from u to v, or Unknown. Unknown never claims non-equivalence.
inline SearchResult equiv_search(const ClosedWord& u, const ClosedWord& v, const SearchOptions& opt = {}) {
  return detail::with_strict_retries(opt, [&](const detail::MarkovFilter& blocked) {
    return detail::bidirectional(u, v, opt, blocked);
  });
}

struct IndexBound {
  int strands = 0;
  std::optional<RewriteCertificate> certificate; // start -> word on `strands` strands
  std::size_t expansions = 0;
};

/// Smallest strand count reached by certified destabilization; an upper bound only.
inline IndexBound index_upper_bound(const ClosedWord& w, const SearchOptions& opt = {}) {
  IndexBound out{w.strands(), std::nullopt, 0};
  ClosedWord cur = w;
  std::vector<RewriteStep> steps;
  while (cur.strands() > 1) {
    const int target = cur.strands();
    auto r = detail::with_strict_retries(opt, [&](const detail::MarkovFilter& blocked) {
      return detail::explore(cur, [target](const ClosedWord& x) { return x.strands() < target; }, opt, blocked);
    });
    out.expansions += r.expansions;
    if (!r.found())
      break;
    steps.insert(steps.end(), r.certificate->steps.begin(), r.certificate->steps.end());
    cur = r.certificate->end;
    out.strands = cur.strands();
    out.certificate = RewriteCertificate{w, cur, opt.strictness, steps};
  }
  return out;
}

} // namespace ssb
