// Reidemeister moves on PD codes, canonical diagram keys, a bounded
// best-first simplifier and triviality verdicts.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "ssb/bracket.hpp"
#include "ssb/tangle.hpp"

namespace ssb {

enum class Move : std::uint8_t { R1, R2, R3 };

inline const char* move_name(Move m) {
  constexpr const char* names[] = {"R1", "R2", "R3"};
  return names[static_cast<int>(m)];
}

struct MoveSet {
  bool r1 = true;
  bool r2 = true;
  bool r3 = true;

  bool allows(Move m) const { return m == Move::R1 ? r1 : m == Move::R2 ? r2 : r3; }
  static MoveSet all() { return {}; }
};

struct MoveRecord {
  Move move = Move::R1;
  bool increasing = false;
  int crossings_after = 0;
};

struct MoveCounts {
  int r1 = 0, r2 = 0, r3 = 0;
  int& operator[](Move m) { return m == Move::R1 ? r1 : m == Move::R2 ? r2 : r3; }
  int operator[](Move m) const { return m == Move::R1 ? r1 : m == Move::R2 ? r2 : r3; }
};

namespace detail {

using Dart = std::pair<int, int>; // (crossing, slot)

struct Occurrences {
  std::vector<std::array<Dart, 2>> at;

  explicit Occurrences(const PlanarDiagram& d) {
    at.assign(max_label(d) + 1, {Dart{-1, -1}, Dart{-1, -1}});
    std::vector<int> seen(at.size(), 0);
    for (int c = 0; c < d.crossing_count(); ++c)
      for (int s = 0; s < 4; ++s) {
        int lab = d.crossings[c][s];
        at[lab][seen[lab]++] = {c, s};
      }
  }
  Dart other(const PlanarDiagram& d, Dart x) const {
    const auto& o = at[d.crossings[x.first][x.second]];
    return o[0] == x ? o[1] : o[0];
  }
};

/// Face boundaries as dart cycles; the face lies to the right of each dart.
inline std::vector<std::vector<Dart>> faces(const PlanarDiagram& d) {
  Occurrences occ(d);
  const int n = d.crossing_count();
  std::vector<char> used(4 * n, 0);
  std::vector<std::vector<Dart>> out;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      if (used[4 * c + s])
        continue;
      std::vector<Dart> face;
      Dart cur{c, s};
      while (!used[4 * cur.first + cur.second]) {
        used[4 * cur.first + cur.second] = 1;
        face.push_back(cur);
        Dart arrive = occ.other(d, cur);
        cur = {arrive.first, (arrive.second + 1) % 4};
      }
      out.push_back(std::move(face));
    }
  return out;
}

/// Delete crossings, joining the strands straight through (slot 0-2, 1-3).
/// Arcs that lose every endpoint become free loops.
inline PlanarDiagram splice_out(const PlanarDiagram& d, const std::vector<int>& removed) {
  const int labels = max_label(d) + 1;
  DisjointSets ds(std::max(labels, 1));
  std::vector<char> gone(d.crossing_count(), 0);
  for (int c : removed) {
    gone[c] = 1;
    ds.unite(d.crossings[c][0], d.crossings[c][2]);
    ds.unite(d.crossings[c][1], d.crossings[c][3]);
  }
  PlanarDiagram out;
  out.free_loops = d.free_loops;
  std::vector<char> alive(std::max(labels, 1), 0);
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (gone[c])
      continue;
    std::array<int, 4> x{};
    for (int s = 0; s < 4; ++s) {
      x[s] = ds.find(d.crossings[c][s]);
      alive[x[s]] = 1;
    }
    out.crossings.push_back(x);
  }
  std::vector<char> counted(std::max(labels, 1), 0);
  for (int c : removed)
    for (int s = 0; s < 4; ++s) {
      int root = ds.find(d.crossings[c][s]);
      if (!alive[root] && !counted[root]) {
        counted[root] = 1;
        ++out.free_loops;
      }
    }
  return out;
}

inline void append_component_code(const PlanarDiagram& d, const Occurrences& occ, int start, int rot,
                                  std::string& code, std::vector<int>& members) {
  const int n = d.crossing_count();
  std::vector<int> order_of(n, -1), rot_of(n, 0);
  std::vector<int> label_of(occ.at.size(), -1);
  std::vector<int> queue{start};
  order_of[start] = 0;
  rot_of[start] = rot;
  int next_label = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int c = queue[qi];
    for (int k = 0; k < 4; ++k) {
      int s = (rot_of[c] + k) % 4;
      int lab = d.crossings[c][s];
      if (label_of[lab] < 0)
        label_of[lab] = next_label++;
      code.push_back(static_cast<char>(label_of[lab]));
      Dart far = occ.other(d, {c, s});
      if (order_of[far.first] < 0) {
        order_of[far.first] = static_cast<int>(queue.size());
        rot_of[far.first] = far.second & ~1;
        queue.push_back(far.first);
      }
    }
  }
  members = queue;
}

} // namespace detail

/// Relabeling- and rotation-invariant key: equal keys mean the diagrams agree up to
/// arc renaming, crossing reordering and choice of the under-slot start.
inline std::string canonical_key(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  detail::Occurrences occ(d);
  std::vector<char> assigned(n, 0);
  std::vector<std::string> parts;
  for (int c = 0; c < n; ++c) {
    if (assigned[c])
      continue;
    std::string best;
    std::vector<int> members;
    detail::append_component_code(d, occ, c, 0, best, members);
    for (int m : members)
      assigned[m] = 1;
    for (int start : members)
      for (int rot : {0, 2}) {
        if (start == c && rot == 0)
          continue;
        std::string code;
        std::vector<int> tmp;
        detail::append_component_code(d, occ, start, rot, code, tmp);
        if (code < best)
          best = std::move(code);
      }
    parts.push_back(std::move(best));
  }
  std::sort(parts.begin(), parts.end());
  std::string key = std::to_string(d.free_loops) + "|";
  for (const auto& p : parts) {
    key += p;
    key.push_back('\xff');
  }
  return key;
}

/// Relabel arcs 0.. in order of first appearance.
inline PlanarDiagram compact_labels(const PlanarDiagram& d) {
  std::map<int, int> relabel;
  PlanarDiagram out = d;
  for (auto& x : out.crossings)
    for (int& a : x) {
      auto [it, inserted] = relabel.emplace(a, static_cast<int>(relabel.size()));
      a = it->second;
    }
  return out;
}

struct MoveResult {
  PlanarDiagram diagram;
  MoveRecord record;
};

/// R1 reductions: a monogon at crossing c.
inline std::vector<MoveResult> r1_reductions(const PlanarDiagram& d) {
  std::vector<MoveResult> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& x = d.crossings[c];
    for (int s = 0; s < 4; ++s)
      if (x[s] == x[(s + 1) % 4]) {
        auto nd = detail::splice_out(d, {c});
        out.push_back({compact_labels(nd), {Move::R1, false, nd.crossing_count()}});
        break;
      }
  }
  return out;
}

/// R2 reductions: a bigon face whose two edges are over/over and under/under.
inline std::vector<MoveResult> r2_reductions(const PlanarDiagram& d) {
  std::vector<MoveResult> out;
  detail::Occurrences occ(d);
  for (const auto& face : detail::faces(d)) {
    if (face.size() != 2)
      continue;
    auto [c1, i] = face[0];
    auto [c2, j] = occ.other(d, face[0]);
    if (c1 == c2 || face[1].first != c2)
      continue;
    if ((i & 1) != (j & 1))
      continue;
    auto nd = detail::splice_out(d, {c1, c2});
    out.push_back({compact_labels(nd), {Move::R2, false, nd.crossing_count()}});
  }
  return out;
}

/// R3 moves across every non-alternating triangular face.
inline std::vector<MoveResult> r3_moves(const PlanarDiagram& d) {
  std::vector<MoveResult> out;
  detail::Occurrences occ(d);
  for (const auto& face : detail::faces(d)) {
    if (face.size() != 3)
      continue;
    const int X = face[0].first, i0 = face[0].second;
    auto [Y, j0] = occ.other(d, face[0]);
    auto [Z, j1] = occ.other(d, face[1]);
    auto back = occ.other(d, face[2]);
    const int j2 = back.second;
    if (X == Y || Y == Z || X == Z || back.first != X || face[1].first != Y || face[2].first != Z)
      continue;
    auto slot = [](int s) { return s % 4; };
    auto over = [](int s) { return (s & 1) == 1; };
    const bool a_top = over(slot(j2)) && over(slot(j1 + 1));
    const bool b_top = over(slot(j2 + 1)) && over(slot(j0));
    const bool c_top = over(slot(j0 + 1)) && over(slot(j1));
    if (!(a_top || b_top || c_top))
      continue;
    const auto& x = d.crossings[X];
    const auto& y = d.crossings[Y];
    const auto& z = d.crossings[Z];
    const int aZ = z[slot(j1 + 3)], aX = x[slot(j2 + 2)];
    const int bX = x[slot(j2 + 3)], bY = y[slot(j0 + 2)];
    const int cY = y[slot(j0 + 3)], cZ = z[slot(j1 + 2)];
    const int alpha = x[slot(j2)], beta = x[i0], gamma = y[slot(j0 + 1)];
    PlanarDiagram nd = d;
    auto& nx = nd.crossings[X];
    auto& ny = nd.crossings[Y];
    auto& nz = nd.crossings[Z];
    nx[slot(j2)] = aZ, nx[slot(j2 + 1)] = bY, nx[slot(j2 + 2)] = alpha, nx[slot(j2 + 3)] = beta;
    ny[slot(j0)] = bX, ny[slot(j0 + 1)] = cZ, ny[slot(j0 + 2)] = beta, ny[slot(j0 + 3)] = gamma;
    nz[slot(j1)] = cY, nz[slot(j1 + 1)] = aX, nz[slot(j1 + 2)] = gamma, nz[slot(j1 + 3)] = alpha;
    out.push_back({compact_labels(nd), {Move::R3, false, nd.crossing_count()}});
  }
  return out;
}

/// R2 moves that push one edge of a face over (or under) another edge of the same face.
inline std::vector<MoveResult> r2_increases(const PlanarDiagram& d) {
  std::vector<MoveResult> out;
  detail::Occurrences occ(d);
  const int fresh = detail::max_label(d) + 1;
  const int A1 = fresh, M1 = fresh + 1, B1 = fresh + 2, A2 = fresh + 3, M2 = fresh + 4, B2 = fresh + 5;
  for (const auto& face : detail::faces(d)) {
    for (std::size_t p = 0; p < face.size(); ++p)
      for (std::size_t q = p + 1; q < face.size(); ++q) {
        const auto u1 = face[p], u2 = face[q];
        const auto v1 = occ.other(d, u1), v2 = occ.other(d, u2);
        if (d.crossings[u1.first][u1.second] == d.crossings[u2.first][u2.second])
          continue;
        for (bool first_over : {true, false}) {
          PlanarDiagram nd = d;
          nd.crossings[u1.first][u1.second] = A1;
          nd.crossings[v1.first][v1.second] = B1;
          nd.crossings[u2.first][u2.second] = A2;
          nd.crossings[v2.first][v2.second] = B2;
          if (first_over) {
            nd.crossings.push_back({M2, A1, B2, M1});
            nd.crossings.push_back({A2, B1, M2, M1});
          } else {
            nd.crossings.push_back({A1, B2, M1, M2});
            nd.crossings.push_back({B1, M2, M1, A2});
          }
          out.push_back({compact_labels(nd), {Move::R2, true, nd.crossing_count()}});
        }
      }
  }
  return out;
}

struct SimplifyBudget {
  int max_crossings = 0; // 0: start count + headroom
  int headroom = 0;
  std::size_t max_expansions = 100000;
};

struct SimplifyResult {
  bool reached_zero = false;
  std::vector<MoveRecord> trace;
  MoveCounts counts;
  std::size_t expansions = 0;
  PlanarDiagram final_diagram;
};

/// Best-first search ordered by (crossings, depth, key). R2 increases at a node with no
/// reducing move are queued as one deferred expansion ranked at crossings + 2.
inline SimplifyResult reidemeister_simplify(const PlanarDiagram& start, MoveSet allowed, SimplifyBudget budget) {
  const int cap = budget.max_crossings > 0 ? budget.max_crossings : start.crossing_count() + budget.headroom;
  struct Node {
    PlanarDiagram diagram;
    int parent;
    MoveRecord record;
    int depth;
  };
  std::vector<Node> nodes;
  // (crossings, depth, key, node, deferred R2 increase)
  using Entry = std::tuple<int, int, std::string, int, bool>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  std::unordered_set<std::string> seen;

  SimplifyResult result;
  auto finish = [&](int idx) {
    result.reached_zero = nodes[idx].diagram.crossing_count() == 0;
    result.final_diagram = nodes[idx].diagram;
    for (int k = idx; nodes[k].parent >= 0; k = nodes[k].parent)
      result.trace.push_back(nodes[k].record);
    std::reverse(result.trace.begin(), result.trace.end());
    for (const auto& r : result.trace)
      ++result.counts[r.move];
    return result;
  };

  auto root = compact_labels(start);
  std::string root_key = canonical_key(root);
  nodes.push_back({root, -1, {}, 0});
  seen.insert(root_key);
  open.emplace(root.crossing_count(), 0, root_key, 0, false);
  int best = 0;
  while (!open.empty()) {
    auto [crossings, depth, key, idx, deferred] = open.top();
    open.pop();
    if (crossings == 0)
      return finish(idx);
    if (!deferred && crossings < nodes[best].diagram.crossing_count())
      best = idx;
    if (result.expansions >= budget.max_expansions)
      break;
    ++result.expansions;
    const PlanarDiagram current = nodes[idx].diagram;
    std::vector<MoveResult> succ;
    auto take = [&succ](std::vector<MoveResult>&& v) {
      for (auto& m : v)
        succ.push_back(std::move(m));
    };
    if (deferred) {
      take(r2_increases(current));
    } else {
      if (allowed.r1)
        take(r1_reductions(current));
      if (allowed.r2)
        take(r2_reductions(current));
      const bool reducible = !succ.empty();
      if (allowed.r3)
        take(r3_moves(current));
      if (allowed.r2 && !reducible && current.crossing_count() + 2 <= cap)
        open.emplace(current.crossing_count() + 2, depth, key + "+", idx, true);
    }
    for (auto& m : succ) {
      std::string k = canonical_key(m.diagram);
      if (!seen.insert(k).second)
        continue;
      nodes.push_back({std::move(m.diagram), idx, m.record, depth + 1});
      const int ni = static_cast<int>(nodes.size()) - 1;
      if (nodes[ni].diagram.crossing_count() == 0) {
        ++result.expansions;
        return finish(ni);
      }
      open.emplace(nodes[ni].diagram.crossing_count(), depth + 1, std::move(k), ni, false);
    }
  }
  finish(best);
  result.reached_zero = false;
  return result;
}

enum class Verdict { Trivial, NonTrivial, Unknown };

inline const char* verdict_name(Verdict v) {
  constexpr const char* names[] = {"Trivial", "NonTrivial", "Unknown"};
  return names[static_cast<int>(v)];
}

struct TrivialityVerdict {
  Verdict verdict = Verdict::Unknown;
  int components = 0;
  int crossings = 0;
  // NonTrivial witness: normalized bracket versus that of the unlink.
  LaurentPolynomial normalized;
  LaurentPolynomial unlink_value;
  // Trivial evidence.
  std::vector<MoveRecord> trace;
  MoveCounts counts;
  std::size_t expansions = 0;
};

namespace detail {

inline TrivialityVerdict verdict_from(const PlanarDiagram& d, const LaurentPolynomial* bracket, MoveSet moves,
                                      SimplifyBudget budget) {
  TrivialityVerdict v;
  v.components = count_components(d);
  v.crossings = d.crossing_count();
  v.unlink_value = delta_power(v.components - 1);
  if (bracket) {
    v.normalized = normalized_bracket(*bracket, writhe(d));
    if (v.normalized != v.unlink_value) {
      v.verdict = Verdict::NonTrivial;
      return v;
    }
  }
  auto r = reidemeister_simplify(d, moves, budget);
  v.expansions = r.expansions;
  if (r.reached_zero) {
    v.verdict = Verdict::Trivial;
    v.trace = std::move(r.trace);
    v.counts = r.counts;
  }
  return v;
}

} // namespace detail

/// NonTrivial when the normalized bracket differs from the unlink's; Trivial only when the
/// simplifier reaches a crossingless diagram; Unknown otherwise.
inline TrivialityVerdict triviality_verdict(const TangleWord& t, Closure closure, SimplifyBudget budget = {},
                                            MoveSet moves = MoveSet::all()) {
  auto d = close_tangle(t, closure);
  auto bracket = kauffman_bracket(t, closure);
  return detail::verdict_from(d, &bracket, moves, budget);
}

inline TrivialityVerdict triviality_verdict(const PlanarDiagram& d, SimplifyBudget budget = {},
                                            MoveSet moves = MoveSet::all()) {
  if (d.crossing_count() <= 24) {
    auto bracket = bracket_state_sum(d);
    return detail::verdict_from(d, &bracket, moves, budget);
  }
  return detail::verdict_from(d, nullptr, moves, budget);
}

} // namespace ssb
