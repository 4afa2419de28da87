// Surface-level semantics of closed surface words: resolutions, CSB membership,
// Euler characteristic and word builders.
#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "ssb/reidemeister.hpp"
#include "ssb/tangle.hpp"
#include "ssb/word.hpp"

namespace ssb {

enum class ResolutionSign { Plus, Minus };

inline const char* sign_name(ResolutionSign s) { return s == ResolutionSign::Plus ? "+" : "-"; }

/// c_i -> s_i, c_i^-1 -> s_i^-1; a_i -> e_i under Plus and is deleted under Minus; b_i the reverse.
inline TangleWord resolve(const SurfaceWord& w, ResolutionSign sign) {
  std::vector<TangleLetter> out;
  for (const auto& g : w.letters()) {
    switch (g.kind) {
    case Kind::C: out.push_back({TangleKind::SigmaPos, g.index}); break;
    case Kind::Cinv: out.push_back({TangleKind::SigmaNeg, g.index}); break;
    case Kind::A:
      if (sign == ResolutionSign::Plus)
        out.push_back({TangleKind::CupCap, g.index});
      break;
    case Kind::B:
      if (sign == ResolutionSign::Minus)
        out.push_back({TangleKind::CupCap, g.index});
      break;
    }
  }
  return TangleWord(w.strands(), std::move(out));
}

inline PlanarDiagram resolved_closure(const ClosedWord& w, ResolutionSign sign) {
  return trace_closure(resolve(w.word(), sign));
}

inline int euler_characteristic(const ClosedWord& w) {
  return count_components(resolved_closure(w, ResolutionSign::Plus)) +
         count_components(resolved_closure(w, ResolutionSign::Minus)) - w.word().saddle_count();
}

struct CsbBudget {
  int headroom = 2;
  std::size_t max_expansions = 20000;

  SimplifyBudget simplify() const {
    SimplifyBudget b;
    b.headroom = headroom;
    b.max_expansions = max_expansions;
    return b;
  }
};

struct CsbVerdict {
  TrivialityVerdict plus;
  TrivialityVerdict minus;

  bool member() const { return plus.verdict == Verdict::Trivial && minus.verdict == Verdict::Trivial; }
  bool excluded() const { return plus.verdict == Verdict::NonTrivial || minus.verdict == Verdict::NonTrivial; }
};

namespace detail {

struct CsbCache {
  std::mutex lock;
  std::map<std::tuple<std::string, int, std::size_t>, CsbVerdict> entries;

  static CsbCache& instance() {
    static CsbCache cache;
    return cache;
  }
};

} // namespace detail

/// Verdicts for the trace closures of both resolutions; memoized per word and budget.
inline CsbVerdict csb_membership(const ClosedWord& w, CsbBudget budget = {}) {
  auto& cache = detail::CsbCache::instance();
  auto key = std::make_tuple(w.str(), budget.headroom, budget.max_expansions);
  {
    std::lock_guard guard(cache.lock);
    if (auto it = cache.entries.find(key); it != cache.entries.end())
      return it->second;
  }
  CsbVerdict v{triviality_verdict(resolve(w.word(), ResolutionSign::Plus), Closure::Trace, budget.simplify()),
               triviality_verdict(resolve(w.word(), ResolutionSign::Minus), Closure::Trace, budget.simplify())};
  std::lock_guard guard(cache.lock);
  cache.entries.emplace(std::move(key), v);
  return v;
}

struct SurfaceInvariants {
  int components_plus = 0;
  int components_minus = 0;
  int saddle_count = 0;
  int euler_characteristic = 0;
  CsbVerdict csb;
};

inline SurfaceInvariants surface_invariants(const ClosedWord& w, CsbBudget budget = {}) {
  SurfaceInvariants s;
  s.components_plus = count_components(resolved_closure(w, ResolutionSign::Plus));
  s.components_minus = count_components(resolved_closure(w, ResolutionSign::Minus));
  s.saddle_count = w.word().saddle_count();
  s.euler_characteristic = s.components_plus + s.components_minus - s.saddle_count;
  s.csb = csb_membership(w, budget);
  return s;
}

/// [(prod a_{2i}) K (prod b_{2i}) K^-1 Delta^{2n}] on 2m+1 strands, Delta based at strand 1.
inline ClosedWord twist_spin(const SurfaceWord& k, int n) {
  if (!k.crossing_only())
    throw domain_error("twist_spin: tangle word must contain crossings only");
  const int strands = k.strands();
  if (strands < 3 || strands % 2 == 0)
    throw domain_error("twist_spin: strand count must be odd and at least 3");
  const int m = (strands - 1) / 2;
  Letters out;
  for (int i = 1; i <= m; ++i)
    out.push_back(a(2 * i));
  out.insert(out.end(), k.letters().begin(), k.letters().end());
  for (int i = 1; i <= m; ++i)
    out.push_back(b(2 * i));
  auto kinv = formal_inverse(k);
  out.insert(out.end(), kinv.letters().begin(), kinv.letters().end());
  auto twist = build_half_twist(strands, 1, strands).pow(2 * std::abs(n));
  if (n < 0)
    twist = formal_inverse(twist);
  out.insert(out.end(), twist.letters().begin(), twist.letters().end());
  return ClosedWord(strands, std::move(out));
}

inline ClosedWord mirror_closure(const ClosedWord& w) { return ClosedWord(mirror_word(w.word())); }

/// s1^k Delta_3^{2n} s1^-k on 3 strands.
inline TangleWord dnk_word(int n, int k) {
  if (n < 2)
    throw domain_error("dnk_word: n must be at least 2");
  if (k < 3 || k % 2 == 0)
    throw domain_error("dnk_word: k must be odd and at least 3");
  std::vector<TangleLetter> out(k, {TangleKind::SigmaPos, 1});
  auto twist = braid_from_word(build_half_twist(3, 1, 3).pow(2 * n));
  out.insert(out.end(), twist.letters().begin(), twist.letters().end());
  out.insert(out.end(), k, {TangleKind::SigmaNeg, 1});
  return TangleWord(3, std::move(out));
}

/// a2 c1^-k b2 c1^k Delta_3^4: the twist-spun torus knot tau^2(T(2,k)).
inline ClosedWord index3_family(int k) {
  if (k < 3 || k % 2 == 0)
    throw domain_error("index3_family: k must be odd and at least 3");
  return twist_spin(SurfaceWord(3, Letters(k, cinv(1))), 2);
}

} // namespace ssb
