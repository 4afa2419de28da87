// Resolved classical diagrams: tangle words over {s_i, s_i^-1, e_i} and their
// closures as planar diagram (PD) codes.
#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ssb/word.hpp"

namespace ssb {

enum class TangleKind : std::uint8_t { SigmaPos, SigmaNeg, CupCap };

struct TangleLetter {
  TangleKind kind = TangleKind::SigmaPos;
  int index = 1;

  auto operator<=>(const TangleLetter&) const = default;

  std::string str() const {
    switch (kind) {
    case TangleKind::SigmaPos: return "s" + std::to_string(index);
    case TangleKind::SigmaNeg: return "S" + std::to_string(index);
    default: return "e" + std::to_string(index);
    }
  }
};

class TangleWord {
public:
  TangleWord() = default;
  explicit TangleWord(int strands, std::vector<TangleLetter> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1)
      throw domain_error("strand count must be at least 1");
    for (const auto& l : letters_)
      if (l.index < 1 || l.index > strands_ - 1)
        throw domain_error("tangle letter " + l.str() + " out of range for " + std::to_string(strands_) +
                           " strands");
  }

  int strands() const noexcept { return strands_; }
  const std::vector<TangleLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  int crossing_count() const noexcept {
    int n = 0;
    for (const auto& l : letters_)
      n += l.kind != TangleKind::CupCap;
    return n;
  }

  TangleWord operator*(const TangleWord& rhs) const {
    auto out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return TangleWord(strands_, std::move(out));
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i)
        out += ' ';
      out += letters_[i].str();
    }
    return out;
  }

  bool operator==(const TangleWord&) const = default;

private:
  int strands_ = 1;
  std::vector<TangleLetter> letters_;
};

/// Crossing-only surface word read as a braid word.
inline TangleWord braid_from_word(const SurfaceWord& w) {
  std::vector<TangleLetter> out;
  for (const auto& g : w.letters()) {
    if (!is_crossing(g.kind))
      throw domain_error("braid_from_word: marked vertex " + g.str() + " in crossing-only context");
    out.push_back({g.kind == Kind::C ? TangleKind::SigmaPos : TangleKind::SigmaNeg, g.index});
  }
  return TangleWord(w.strands(), std::move(out));
}

/// Parse "s1 S2 e1" (also accepts c/C for crossings); powers as in the word grammar.
inline TangleWord parse_tangle(std::string_view text, int strands) {
  std::vector<TangleLetter> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto number = [&](bool sign) {
    std::size_t start = pos;
    bool neg = false;
    if (sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
      neg = text[pos++] == '-';
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected integer", start);
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return neg ? -v : v;
  };
  for (skip(); pos < text.size(); skip()) {
    std::size_t tok = pos;
    char ch = text[pos++];
    TangleKind kind;
    if (ch == 's' || ch == 'c')
      kind = TangleKind::SigmaPos;
    else if (ch == 'S' || ch == 'C')
      kind = TangleKind::SigmaNeg;
    else if (ch == 'e')
      kind = TangleKind::CupCap;
    else
      throw parse_error(std::string("unexpected character '") + ch + "'", tok);
    int index = number(false);
    if (index < 1 || index > strands - 1)
      throw parse_error("tangle index out of range", tok);
    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = number(true);
    }
    if (power < 0) {
      if (kind == TangleKind::CupCap)
        throw parse_error("negative power of e_i", tok);
      kind = kind == TangleKind::SigmaPos ? TangleKind::SigmaNeg : TangleKind::SigmaPos;
      power = -power;
    }
    for (int r = 0; r < power; ++r)
      out.push_back({kind, index});
  }
  return TangleWord(strands, std::move(out));
}

enum class Closure { Trace, Plat };

/// PD code. Each crossing lists four arc labels counterclockwise; slots 0 and 2
/// belong to the under-strand, slots 1 and 3 to the over-strand.
struct PlanarDiagram {
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;

  int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }
  bool operator==(const PlanarDiagram&) const = default;
};

namespace detail {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y)
      return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  }
};

inline int max_label(const PlanarDiagram& d) {
  int mx = -1;
  for (const auto& x : d.crossings)
    for (int a : x)
      mx = std::max(mx, a);
  return mx;
}

} // namespace detail

/// Throws unless every arc label occurs exactly twice.
inline void validate(const PlanarDiagram& d) {
  std::map<int, int> count;
  for (const auto& x : d.crossings)
    for (int a : x)
      ++count[a];
  for (auto [label, n] : count)
    if (n != 2)
      throw domain_error("PD arc " + std::to_string(label) + " occurs " + std::to_string(n) + " times");
  if (d.free_loops < 0)
    throw domain_error("negative free loop count");
}

/// Build the closed diagram of a tangle word. Arcs are labeled 0,1,... in order of first
/// appearance scanning crossings top to bottom, slots TL, TR, BL, BR.
inline PlanarDiagram close_tangle(const TangleWord& t, Closure closure) {
  const int m = t.strands();
  const int levels = static_cast<int>(t.size()) + 1;
  if (closure == Closure::Plat && m % 2 == 0)
    throw domain_error("plat closure needs an odd strand count");
  auto point = [m](int level, int pos) { return level * (m + 1) + pos; };
  const int num_points = levels * (m + 1);
  const int num_cross = t.crossing_count();
  const int terminal0 = num_points;
  std::vector<std::pair<int, int>> edges;
  PlanarDiagram d;
  d.crossings.resize(num_cross);
  // terminal ids in slot order for each crossing
  std::vector<std::array<int, 4>> slot_terminal(num_cross);

  int xi = 0;
  for (int l = 0; l < static_cast<int>(t.size()); ++l) {
    const auto& letter = t.letters()[l];
    const int i = letter.index;
    for (int p = 1; p <= m; ++p)
      if (p != i && p != i + 1)
        edges.push_back({point(l, p), point(l + 1, p)});
    if (letter.kind == TangleKind::CupCap) {
      edges.push_back({point(l, i), point(l, i + 1)});
      edges.push_back({point(l + 1, i), point(l + 1, i + 1)});
      continue;
    }
    const int tl = terminal0 + 4 * xi, tr = tl + 1, bl = tl + 2, br = tl + 3;
    edges.push_back({tl, point(l, i)});
    edges.push_back({tr, point(l, i + 1)});
    edges.push_back({bl, point(l + 1, i)});
    edges.push_back({br, point(l + 1, i + 1)});
    if (letter.kind == TangleKind::SigmaPos)
      slot_terminal[xi] = {tl, bl, br, tr}; // under-strand TL-BR
    else
      slot_terminal[xi] = {tr, tl, bl, br}; // under-strand TR-BL
    ++xi;
  }
  const int last = levels - 1;
  if (closure == Closure::Trace) {
    for (int p = 1; p <= m; ++p)
      edges.push_back({point(last, p), point(0, p)});
  } else {
    edges.push_back({point(last, 1), point(0, 1)});
    for (int p = 2; p + 1 <= m; p += 2) {
      edges.push_back({point(0, p), point(0, p + 1)});
      edges.push_back({point(last, p), point(last, p + 1)});
    }
  }

  const int num_nodes = terminal0 + 4 * num_cross;
  std::vector<std::vector<int>> adj(num_nodes);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].first].push_back(e);
    adj[edges[e].second].push_back(e);
  }
  std::vector<char> used(edges.size(), 0);
  std::vector<int> label_of_terminal(4 * num_cross, -1);
  int next_label = 0;
  for (int x = 0; x < num_cross; ++x) {
    for (int k = 0; k < 4; ++k) {
      const int start = terminal0 + 4 * x + k; // TL, TR, BL, BR order
      if (label_of_terminal[start - terminal0] >= 0)
        continue;
      int node = start;
      int e = adj[node][0];
      for (;;) {
        used[e] = 1;
        int other = edges[e].first == node ? edges[e].second : edges[e].first;
        node = other;
        if (node >= terminal0)
          break;
        e = adj[node][0] == e ? adj[node][1] : adj[node][0];
      }
      label_of_terminal[start - terminal0] = next_label;
      label_of_terminal[node - terminal0] = next_label;
      ++next_label;
    }
  }
  for (int x = 0; x < num_cross; ++x)
    for (int s = 0; s < 4; ++s)
      d.crossings[x][s] = label_of_terminal[slot_terminal[x][s] - terminal0];

  // Remaining edges form crossingless loops.
  detail::DisjointSets ds(num_points);
  std::vector<char> touched(num_points, 0);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (used[e])
      continue;
    ds.unite(edges[e].first, edges[e].second);
    touched[edges[e].first] = touched[edges[e].second] = 1;
  }
  for (int p = 0; p < num_points; ++p)
    if (touched[p] && ds.find(p) == p)
      ++d.free_loops;
  return d;
}

inline PlanarDiagram trace_closure(const TangleWord& t) { return close_tangle(t, Closure::Trace); }

inline PlanarDiagram plat_closure(const TangleWord& t) { return close_tangle(t, Closure::Plat); }

inline int count_components(const PlanarDiagram& d) {
  const int n = detail::max_label(d) + 1;
  detail::DisjointSets ds(std::max(n, 1));
  int classes = n;
  for (const auto& x : d.crossings) {
    classes -= ds.unite(x[0], x[2]);
    classes -= ds.unite(x[1], x[3]);
  }
  // labels that never occur do not count
  std::vector<char> present(std::max(n, 1), 0);
  for (const auto& x : d.crossings)
    for (int a : x)
      present[a] = 1;
  for (int i = 0; i < n; ++i)
    if (!present[i])
      --classes;
  return classes + d.free_loops;
}

/// Orientation of every strand end: in[c][s] is true when the strand enters
/// crossing c through slot s.
struct Orientation {
  std::vector<std::array<bool, 4>> in;
  std::vector<int> order; // arcs in traversal order (each once)
};

inline Orientation orient(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  const int labels = detail::max_label(d) + 1;
  std::vector<std::vector<std::pair<int, int>>> occ(std::max(labels, 0));
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s)
      occ[d.crossings[c][s]].push_back({c, s});
  Orientation o;
  o.in.assign(n, {false, false, false, false});
  std::vector<char> done(std::max(labels, 0), 0);
  for (int start = 0; start < labels; ++start) {
    if (occ[start].empty() || done[start])
      continue;
    int arc = start;
    auto [c, s] = occ[arc][0];
    while (!done[arc]) {
      done[arc] = 1;
      o.order.push_back(arc);
      o.in[c][s] = true;
      int out = (s + 2) % 4;
      int next = d.crossings[c][out];
      // the other end of `next`
      auto e0 = occ[next][0], e1 = occ[next][1];
      auto far = (e0 == std::pair<int, int>{c, out}) ? e1 : e0;
      arc = next;
      c = far.first;
      s = far.second;
    }
  }
  return o;
}

/// +1/-1 per crossing for the traversal orientation.
inline std::vector<int> crossing_signs(const PlanarDiagram& d, const Orientation& o) {
  std::vector<int> signs;
  for (int c = 0; c < d.crossing_count(); ++c) {
    int under_in = o.in[c][0] ? 0 : 2;
    int over_in = o.in[c][1] ? 1 : 3;
    // positive iff the over-strand enters just clockwise of the incoming under-strand
    signs.push_back(((over_in - under_in + 4) % 4) == 3 ? +1 : -1);
  }
  return signs;
}

inline int writhe(const PlanarDiagram& d) {
  auto signs = crossing_signs(d, orient(d));
  return std::accumulate(signs.begin(), signs.end(), 0);
}

/// Conventional text form: "X[a,b,c,d], ...; loops=N". Arcs are renumbered 1.. along the
/// traversal orientation and each tuple starts at the incoming under-strand.
inline std::string export_pd(const PlanarDiagram& d) {
  auto o = orient(d);
  std::map<int, int> relabel;
  for (int arc : o.order)
    relabel.emplace(arc, static_cast<int>(relabel.size()) + 1);
  std::ostringstream os;
  for (int c = 0; c < d.crossing_count(); ++c) {
    int r = o.in[c][0] ? 0 : 2;
    if (c)
      os << ", ";
    os << "X[";
    for (int k = 0; k < 4; ++k)
      os << (k ? "," : "") << relabel.at(d.crossings[c][(r + k) % 4]);
    os << "]";
  }
  os << "; loops=" << d.free_loops;
  return os.str();
}

inline PlanarDiagram import_pd(std::string_view text) {
  PlanarDiagram d;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  auto number = [&] {
    std::size_t start = pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected arc label", start);
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return v;
  };
  if (text.substr(0, 3) == "PD[")
    pos = 3;
  for (skip(); pos < text.size(); skip()) {
    if (text[pos] == 'X' && pos + 1 < text.size() && text[pos + 1] == '[') {
      pos += 2;
      std::array<int, 4> x{};
      for (int k = 0; k < 4; ++k) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
          ++pos;
        x[k] = number();
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
          ++pos;
        if (k < 3) {
          if (pos >= text.size() || text[pos] != ',')
            throw parse_error("expected ','", pos);
          ++pos;
        }
      }
      if (pos >= text.size() || text[pos] != ']')
        throw parse_error("expected ']'", pos);
      ++pos;
      d.crossings.push_back(x);
    } else if (text[pos] == ']') {
      ++pos;
    } else if (text[pos] == ';') {
      ++pos;
      skip();
      if (text.substr(pos, 6) != "loops=")
        throw parse_error("expected 'loops='", pos);
      pos += 6;
      d.free_loops = number();
    } else {
      throw parse_error(std::string("unexpected character '") + text[pos] + "'", pos);
    }
  }
  validate(d);
  return d;
}

inline bool looks_like_pd(std::string_view text) {
  auto p = text.find_first_not_of(" \t\n");
  return p != std::string_view::npos && (text.substr(p, 2) == "X[" || text.substr(p, 3) == "PD[");
}

} // namespace ssb
