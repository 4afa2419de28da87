// Words in the surface singular braid monoid SSB_m.
//
// A word is a sequence of generators a_i, b_i (marked vertices) and
// c_i, c_i^-1 (crossings) on m strands. Closed words additionally carry the
// strand count of their trace closure.
#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ssb {

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

private:
  std::size_t pos_;
};

class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Kind : std::uint8_t { A = 0, B = 1, C = 2, Cinv = 3 };

inline constexpr Kind all_kinds[] = {Kind::A, Kind::B, Kind::C, Kind::Cinv};

constexpr bool is_crossing(Kind k) noexcept { return k == Kind::C || k == Kind::Cinv; }
constexpr bool is_saddle(Kind k) noexcept { return k == Kind::A || k == Kind::B; }

constexpr Kind inverted(Kind k) noexcept {
  switch (k) {
  case Kind::C: return Kind::Cinv;
  case Kind::Cinv: return Kind::C;
  default: return k;
  }
}

inline char kind_char(Kind k) noexcept {
  constexpr char chars[] = {'a', 'b', 'c', 'C'};
  return chars[static_cast<int>(k)];
}

struct Generator {
  Kind kind = Kind::C;
  int index = 1;

  auto operator<=>(const Generator&) const = default;

  std::string str() const { return kind_char(kind) + std::to_string(index); }
};

inline Generator a(int i) { return {Kind::A, i}; }
inline Generator b(int i) { return {Kind::B, i}; }
inline Generator c(int i) { return {Kind::C, i}; }
inline Generator cinv(int i) { return {Kind::Cinv, i}; }

using Letters = std::vector<Generator>;

/// A word on a fixed number of strands. Every letter index lies in [1, strands-1].
class SurfaceWord {
public:
  SurfaceWord() = default;
  explicit SurfaceWord(int strands, Letters letters = {}) : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1)
      throw domain_error("strand count must be at least 1");
    for (const auto& g : letters_)
      if (g.index < 1 || g.index > strands_ - 1)
        throw domain_error("generator " + g.str() + " out of range for " + std::to_string(strands_) +
                           " strands");
  }

  int strands() const noexcept { return strands_; }
  const Letters& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Generator& operator[](std::size_t i) const { return letters_[i]; }

  int saddle_count() const noexcept {
    return static_cast<int>(std::count_if(letters_.begin(), letters_.end(),
                                          [](const Generator& g) { return is_saddle(g.kind); }));
  }
  bool crossing_only() const noexcept {
    return std::all_of(letters_.begin(), letters_.end(), [](const Generator& g) { return is_crossing(g.kind); });
  }

  SurfaceWord operator*(const SurfaceWord& rhs) const {
    if (rhs.strands_ != strands_)
      throw domain_error("cannot concatenate words on different strand counts");
    Letters out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return SurfaceWord(strands_, std::move(out));
  }

  SurfaceWord pow(int p) const {
    if (p < 0)
      throw domain_error("negative power of a general word; use formal_inverse");
    Letters out;
    for (int r = 0; r < p; ++r)
      out.insert(out.end(), letters_.begin(), letters_.end());
    return SurfaceWord(strands_, std::move(out));
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

  bool operator==(const SurfaceWord&) const = default;

private:
  int strands_ = 1;
  Letters letters_;
};

/// The closure [w]_n of a word; n is always w.strands().
class ClosedWord {
public:
  ClosedWord() = default;
  explicit ClosedWord(SurfaceWord w) : word_(std::move(w)) {}
  ClosedWord(int strands, Letters letters) : word_(strands, std::move(letters)) {}

  const SurfaceWord& word() const noexcept { return word_; }
  int strands() const noexcept { return word_.strands(); }
  const Letters& letters() const noexcept { return word_.letters(); }
  std::size_t size() const noexcept { return word_.size(); }

  std::string str() const { return "[" + word_.str() + "]_" + std::to_string(word_.strands()); }

  bool operator==(const ClosedWord&) const = default;

private:
  SurfaceWord word_;
};

inline std::ostream& operator<<(std::ostream& os, const SurfaceWord& w) { return os << w.str(); }
inline std::ostream& operator<<(std::ostream& os, const ClosedWord& w) { return os << w.str(); }

/// Delta_s anchored at strand `base`: prod_{r=1}^{s-1} (c_{base+r-1} ... c_base).
inline SurfaceWord build_half_twist(int s, int base, int strands) {
  if (s < 1 || base < 1)
    throw domain_error("half twist needs s >= 1 and base >= 1");
  if (base + s - 1 > strands)
    throw domain_error("half twist window [" + std::to_string(base) + ", " + std::to_string(base + s - 1) +
                       "] exceeds " + std::to_string(strands) + " strands");
  Letters out;
  for (int r = 1; r <= s - 1; ++r)
    for (int j = base + r - 1; j >= base; --j)
      out.push_back(c(j));
  return SurfaceWord(strands, std::move(out));
}

inline SurfaceWord build_half_twist(int s, int base) { return build_half_twist(s, base, base + s - 1); }

/// Reverse the letters and swap c <-> c^-1; markers are fixed.
inline SurfaceWord mirror_word(const SurfaceWord& w) {
  Letters out(w.letters().rbegin(), w.letters().rend());
  for (auto& g : out)
    g.kind = inverted(g.kind);
  return SurfaceWord(w.strands(), std::move(out));
}

inline SurfaceWord formal_inverse(const SurfaceWord& w) {
  if (!w.crossing_only())
    throw domain_error("formal inverse requires a crossing-only word (a_i, b_i are not invertible)");
  return mirror_word(w);
}

namespace detail {

class WordLexer {
public:
  explicit WordLexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool consume(char ch) {
    if (peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char ch) {
    if (!consume(ch))
      throw parse_error(std::string("expected '") + ch + "'", pos_);
  }
  bool consume_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  int integer(bool allow_sign) {
    std::size_t start = pos_;
    bool neg = false;
    if (allow_sign && (peek() == '-' || peek() == '+'))
      neg = text_[pos_++] == '-';
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("expected integer", start);
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1'000'000)
        throw parse_error("integer too large", start);
    }
    return static_cast<int>(neg ? -value : value);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Letters parse_letters(std::string_view text, int strands, std::size_t offset) {
  WordLexer lex(text);
  Letters out;
  while (!lex.done()) {
    const std::size_t tok = lex.pos();
    Letters atom;
    bool invertible = true;
    if (lex.consume_word("delta(")) {
      lex.skip_ws();
      int s = lex.integer(false);
      lex.skip_ws();
      lex.expect(',');
      lex.skip_ws();
      int base = lex.integer(false);
      lex.skip_ws();
      lex.expect(')');
      try {
        atom = build_half_twist(s, base, strands).letters();
      } catch (const domain_error& e) {
        throw parse_error(e.what(), offset + tok);
      }
    } else {
      const char ch = lex.peek();
      Kind kind;
      switch (ch) {
      case 'a': kind = Kind::A; break;
      case 'b': kind = Kind::B; break;
      case 'c': kind = Kind::C; break;
      case 'C': kind = Kind::Cinv; break;
      default: throw parse_error(std::string("unexpected character '") + ch + "'", offset + tok);
      }
      lex.consume(ch);
      int index = lex.integer(false);
      if (index < 1 || index > strands - 1)
        throw parse_error("generator index " + std::to_string(index) + " out of range for " +
                              std::to_string(strands) + " strands",
                          offset + tok);
      atom.push_back({kind, index});
      invertible = is_crossing(kind);
    }
    int power = 1;
    if (lex.consume('^'))
      power = lex.integer(true);
    if (power < 0) {
      if (!invertible)
        throw parse_error("negative power of a non-invertible generator", offset + tok);
      atom = mirror_word(SurfaceWord(strands, atom)).letters();
      power = -power;
    }
    for (int r = 0; r < power; ++r)
      out.insert(out.end(), atom.begin(), atom.end());
    const char next = lex.peek();
    if (next != '\0' && !std::isspace(static_cast<unsigned char>(next)))
      throw parse_error("tokens must be separated by whitespace", offset + lex.pos());
  }
  return out;
}

} // namespace detail

/// Parse a word in the grammar: (a|b|c|C)INT, delta(s,base), each optionally ^SIGNED_INT.
inline SurfaceWord parse_word(std::string_view text, int strands) {
  if (strands < 1)
    throw domain_error("strand count must be at least 1");
  return SurfaceWord(strands, detail::parse_letters(text, strands, 0));
}

/// Parse "[ word ]_n".
inline ClosedWord parse_closed(std::string_view text) {
  std::size_t open = text.find('[');
  std::size_t close = text.rfind(']');
  if (open == std::string_view::npos)
    throw parse_error("closed word must start with '['", 0);
  for (std::size_t i = 0; i < open; ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw parse_error("unexpected text before '['", i);
  if (close == std::string_view::npos || close < open)
    throw parse_error("missing ']'", text.size());
  detail::WordLexer tail(text.substr(close + 1));
  tail.skip_ws();
  if (!tail.consume('_'))
    throw parse_error("closure needs an explicit strand subscript '_n'", close + 1 + tail.pos());
  int strands = tail.integer(false);
  if (!tail.done())
    throw parse_error("trailing text after closure", close + 1 + tail.pos());
  if (strands < 1)
    throw parse_error("closure strand count must be at least 1", close + 1);
  auto inner = text.substr(open + 1, close - open - 1);
  return ClosedWord(strands, detail::parse_letters(inner, strands, open + 1));
}

/// Strand permutation induced by the crossing letters: result[p] is the
/// bottom position reached by the strand starting at top position p (1-based; slot 0 unused).
inline std::vector<int> crossing_permutation(const SurfaceWord& w) {
  std::vector<int> at(w.strands() + 1);
  for (int p = 0; p <= w.strands(); ++p)
    at[p] = p;
  // at[pos] = strand currently at position pos
  for (const auto& g : w.letters())
    if (is_crossing(g.kind))
      std::swap(at[g.index], at[g.index + 1]);
  std::vector<int> result(w.strands() + 1, 0);
  for (int pos = 1; pos <= w.strands(); ++pos)
    result[at[pos]] = pos;
  return result;
}

} // namespace ssb
