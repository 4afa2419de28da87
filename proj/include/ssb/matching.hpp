// Planar matchings (Temperley-Lieb diagrams) on m strands.
//
// Points 0..m-1 are the top boundary, m..2m-1 the bottom boundary, both read
// left to right. A matching pairs all 2m points without crossings.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ssb {

class PlanarMatching {
public:
  PlanarMatching() = default;

  static PlanarMatching identity(int m) {
    PlanarMatching p(m);
    for (int i = 0; i < m; ++i) {
      p.partner_[i] = static_cast<std::uint8_t>(m + i);
      p.partner_[m + i] = static_cast<std::uint8_t>(i);
    }
    return p;
  }

  /// e_i: caps (i, i+1) at top and bottom, identity elsewhere (1-based i).
  static PlanarMatching cup_cap(int m, int i) {
    if (i < 1 || i >= m)
      throw std::invalid_argument("cup-cap index out of range");
    PlanarMatching p = identity(m);
    const int l = i - 1, r = i;
    p.partner_[l] = static_cast<std::uint8_t>(r);
    p.partner_[r] = static_cast<std::uint8_t>(l);
    p.partner_[m + l] = static_cast<std::uint8_t>(m + r);
    p.partner_[m + r] = static_cast<std::uint8_t>(m + l);
    return p;
  }

  static PlanarMatching from_partners(std::vector<std::uint8_t> partners) {
    PlanarMatching p;
    p.strands_ = static_cast<int>(partners.size() / 2);
    p.partner_ = std::move(partners);
    return p;
  }

  int strands() const noexcept { return strands_; }
  int partner(int point) const { return partner_[point]; }
  const std::vector<std::uint8_t>& partners() const noexcept { return partner_; }

  bool operator==(const PlanarMatching&) const = default;
  auto operator<=>(const PlanarMatching&) const = default;

private:
  explicit PlanarMatching(int m) : strands_(m), partner_(2 * m) {}

  int strands_ = 0;
  std::vector<std::uint8_t> partner_;
};

struct Composition {
  PlanarMatching matching;
  int closed_loops = 0;
};

/// Stack p on top of q (p's bottom glued to q's top).
inline Composition compose_matchings(const PlanarMatching& p, const PlanarMatching& q) {
  const int m = p.strands();
  if (q.strands() != m)
    throw std::invalid_argument("compose_matchings: strand counts differ");
  // Outer points: p-top 0..m-1 -> result 0..m-1; q-bottom m..2m-1 -> result m..2m-1.
  // Middle points: p-bottom j (== q-top j).
  std::vector<std::uint8_t> out(2 * m, 0);
  std::vector<char> middle_seen(m, 0);

  auto trace = [&](bool in_p, int point) {
    // point is a point of diagram p (if in_p) or q; follow until an outer point.
    for (;;) {
      if (in_p) {
        int nxt = p.partner(point);
        if (nxt < m)
          return nxt; // p-top
        middle_seen[nxt - m] = 1;
        in_p = false;
        point = nxt - m; // q-top index
      } else {
        int nxt = q.partner(point);
        if (nxt >= m)
          return nxt; // q-bottom
        middle_seen[nxt] = 1;
        in_p = true;
        point = m + nxt; // p-bottom index
      }
    }
  };

  for (int t = 0; t < m; ++t)
    out[t] = static_cast<std::uint8_t>(trace(true, t));
  for (int bpt = m; bpt < 2 * m; ++bpt)
    out[bpt] = static_cast<std::uint8_t>(trace(false, bpt));

  int loops = 0;
  for (int j = 0; j < m; ++j) {
    if (middle_seen[j])
      continue;
    ++loops;
    int cur = j;
    do {
      middle_seen[cur] = 1;
      int down = q.partner(cur); // q-top -> q-top
      middle_seen[down] = 1;
      cur = p.partner(m + down) - m; // p-bottom -> p-bottom
    } while (cur != j);
  }
  return {PlanarMatching::from_partners(std::move(out)), loops};
}

/// Loops formed by joining top point i to bottom point i for every i.
inline int trace_loops(const PlanarMatching& p) {
  const int m = p.strands();
  std::vector<char> seen(2 * m, 0);
  int loops = 0;
  for (int s = 0; s < 2 * m; ++s) {
    if (seen[s])
      continue;
    ++loops;
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = 1;
      int other = p.partner(cur);
      seen[other] = 1;
      cur = other < m ? other + m : other - m;
    }
  }
  return loops;
}

/// Loops formed by the (modified) plat closure on 2r+1 strands: caps on
/// (2j, 2j+1) top and bottom, strand 1 closed around the side.
inline int plat_loops(const PlanarMatching& p) {
  const int m = p.strands();
  auto closure_partner = [m](int pt) {
    int pos = pt < m ? pt : pt - m; // 0-based position
    if (pos == 0)
      return pt < m ? m : 0;
    // 1-based position pos+1; pairs (2j, 2j+1) are 0-based (2j-1, 2j)
    int mate = (pos % 2 == 1) ? pos + 1 : pos - 1;
    return pt < m ? mate : mate + m;
  };
  std::vector<char> seen(2 * m, 0);
  int loops = 0;
  for (int s = 0; s < 2 * m; ++s) {
    if (seen[s])
      continue;
    ++loops;
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = 1;
      int other = p.partner(cur);
      seen[other] = 1;
      cur = closure_partner(other);
    }
  }
  return loops;
}

} // namespace ssb
