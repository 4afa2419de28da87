// Kauffman bracket: Temperley-Lieb transfer over the planar-matching basis,
// plus an independent 2^c state-sum over PD codes.
#pragma once

#include <map>
#include <vector>

#include "ssb/laurent.hpp"
#include "ssb/matching.hpp"
#include "ssb/tangle.hpp"

namespace ssb {

namespace detail {

inline const LaurentPolynomial& delta_power(int k) {
  static thread_local std::vector<LaurentPolynomial> cache{LaurentPolynomial::one()};
  while (static_cast<int>(cache.size()) <= k)
    cache.push_back(cache.back() * LaurentPolynomial::delta());
  return cache[k];
}

} // namespace detail

/// Unreduced element of the TL algebra: sum of coefficient * matching.
using TLElement = std::map<PlanarMatching, LaurentPolynomial>;

/// Multiply x on the right by one tangle letter. s_i = A + A^-1 e_i, s_i^-1 = A^-1 + A e_i.
inline TLElement apply_letter(const TLElement& x, const TangleLetter& letter, int m) {
  const PlanarMatching e = PlanarMatching::cup_cap(m, letter.index);
  TLElement out;
  auto add = [&out](const PlanarMatching& p, const LaurentPolynomial& v) {
    auto& slot = out[p];
    slot += v;
    if (slot.is_zero())
      out.erase(p);
  };
  for (const auto& [p, coeff] : x) {
    auto [q, loops] = compose_matchings(p, e);
    LaurentPolynomial with_e = coeff * detail::delta_power(loops);
    switch (letter.kind) {
    case TangleKind::CupCap:
      add(q, with_e);
      break;
    case TangleKind::SigmaPos:
      add(p, coeff.shifted(1));
      add(q, with_e.shifted(-1));
      break;
    case TangleKind::SigmaNeg:
      add(p, coeff.shifted(-1));
      add(q, with_e.shifted(1));
      break;
    }
  }
  return out;
}

inline TLElement tl_element(const TangleWord& t) {
  TLElement x{{PlanarMatching::identity(t.strands()), LaurentPolynomial::one()}};
  for (const auto& letter : t.letters())
    x = apply_letter(x, letter, t.strands());
  return x;
}

/// <D> of the closure, normalized so that a single crossingless loop is 1.
inline LaurentPolynomial kauffman_bracket(const TangleWord& t, Closure closure) {
  if (closure == Closure::Plat && t.strands() % 2 == 0)
    throw domain_error("plat closure needs an odd strand count");
  LaurentPolynomial total;
  for (const auto& [p, coeff] : tl_element(t)) {
    int loops = closure == Closure::Trace ? trace_loops(p) : plat_loops(p);
    total += coeff * detail::delta_power(loops - 1);
  }
  return total;
}

/// Full state expansion over a PD code. A-smoothing joins slots (0,1),(2,3).
inline LaurentPolynomial bracket_state_sum(const PlanarDiagram& d, int max_crossings = 24) {
  const int n = d.crossing_count();
  if (n > max_crossings)
    throw domain_error("state sum limited to " + std::to_string(max_crossings) + " crossings");
  if (n == 0)
    return d.free_loops == 0 ? LaurentPolynomial::one() : detail::delta_power(d.free_loops - 1);
  const int labels = detail::max_label(d) + 1;
  std::vector<char> present(labels, 0);
  for (const auto& x : d.crossings)
    for (int a : x)
      present[a] = 1;
  int distinct = 0;
  for (char p : present)
    distinct += p;

  // count states by (#A - #B, loops)
  std::map<std::pair<int, int>, std::int64_t> tally;
  std::vector<int> parent(labels);
  auto find = [&parent](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    for (int i = 0; i < labels; ++i)
      parent[i] = i;
    int classes = distinct;
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = d.crossings[c];
      int p1, q1, p2, q2;
      if (state >> c & 1) { // A
        ++a_count;
        p1 = x[0], q1 = x[1], p2 = x[2], q2 = x[3];
      } else {
        p1 = x[0], q1 = x[3], p2 = x[1], q2 = x[2];
      }
      int r1 = find(p1), s1 = find(q1);
      if (r1 != s1) {
        parent[r1] = s1;
        --classes;
      }
      int r2 = find(p2), s2 = find(q2);
      if (r2 != s2) {
        parent[r2] = s2;
        --classes;
      }
    }
    ++tally[{a_count - (n - a_count), classes + d.free_loops}];
  }
  LaurentPolynomial total;
  for (auto [key, count] : tally)
    total += detail::delta_power(key.second - 1).shifted(key.first, count);
  return total;
}

/// Brute-force oracle for kauffman_bracket: builds the PD and expands all states.
inline LaurentPolynomial bracket_bruteforce(const TangleWord& t, Closure closure) {
  if (t.crossing_count() > 20)
    throw domain_error("bracket_bruteforce: crossing budget (20) exceeded");
  return bracket_state_sum(close_tangle(t, closure), 20);
}

/// f = (-A^3)^(-writhe) <D>, invariant under all Reidemeister moves for a fixed orientation.
inline LaurentPolynomial normalized_bracket(const LaurentPolynomial& bracket, int writhe_value) {
  int w = -writhe_value;
  return bracket.shifted(3 * w, (w % 2 == 0) ? 1 : -1);
}

} // namespace ssb
