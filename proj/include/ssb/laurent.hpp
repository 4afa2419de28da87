// Integer Laurent polynomials in A.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ssb {

class LaurentPolynomial {
public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(std::int64_t coeff, int exponent) {
    LaurentPolynomial p;
    if (coeff != 0)
      p.terms_[exponent] = coeff;
    return p;
  }
  static LaurentPolynomial one() { return monomial(1, 0); }
  /// Loop value -A^2 - A^-2.
  static LaurentPolynomial delta() { return monomial(-1, 2) + monomial(-1, -2); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs) {
    for (auto [e, v] : rhs.terms_)
      add_term(e, v);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs) {
    for (auto [e, v] : rhs.terms_)
      add_term(e, -v);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) { return lhs += rhs; }
  friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) { return lhs -= rhs; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
    LaurentPolynomial out;
    for (auto [e1, v1] : lhs.terms_)
      for (auto [e2, v2] : rhs.terms_)
        out.add_term(e1 + e2, v1 * v2);
    return out;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs) { return *this = *this * rhs; }

  LaurentPolynomial pow(int n) const {
    LaurentPolynomial out = one();
    for (int i = 0; i < n; ++i)
      out *= *this;
    return out;
  }

  /// Multiply by c*A^e.
  LaurentPolynomial shifted(int e, std::int64_t c = 1) const {
    LaurentPolynomial out;
    for (auto [k, v] : terms_)
      out.add_term(k + e, v * c);
    return out;
  }

  /// Substitute A -> A^-1.
  LaurentPolynomial reflected() const {
    LaurentPolynomial out;
    for (auto [k, v] : terms_)
      out.terms_[-k] = v;
    return out;
  }

  bool operator==(const LaurentPolynomial&) const = default;

  /// Sparse "(exponent,coefficient)" pairs, exponents ascending.
  std::string pairs() const {
    std::ostringstream os;
    bool first = true;
    for (auto [e, v] : terms_) {
      if (!first)
        os << ' ';
      os << '(' << e << ',' << v << ')';
      first = false;
    }
    return os.str();
  }

  std::vector<std::pair<int, std::int64_t>> to_pairs() const { return {terms_.begin(), terms_.end()}; }

  static LaurentPolynomial from_pairs(const std::vector<std::pair<int, std::int64_t>>& pairs) {
    LaurentPolynomial p;
    for (auto [e, v] : pairs)
      p.add_term(e, v);
    return p;
  }

  std::string str() const {
    if (terms_.empty())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, v] : terms_) {
      std::int64_t mag = v < 0 ? -v : v;
      if (first)
        os << (v < 0 ? "-" : "");
      else
        os << (v < 0 ? " - " : " + ");
      if (mag != 1 || e == 0)
        os << mag;
      if (e != 0) {
        os << "A";
        if (e != 1)
          os << '^' << e;
      }
      first = false;
    }
    return os.str();
  }

private:
  void add_term(int e, std::int64_t v) {
    if (v == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(e, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Returns j with p == (-A^3)^j * q, if any.
inline std::optional<int> framing_shift(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.is_zero() || q.is_zero())
    return p.is_zero() && q.is_zero() ? std::optional<int>(0) : std::nullopt;
  int diff = p.min_exponent() - q.min_exponent();
  if (diff % 3 != 0)
    return std::nullopt;
  int j = diff / 3;
  if (q.shifted(3 * j, (j % 2 == 0) ? 1 : -1) == p)
    return j;
  return std::nullopt;
}

inline bool equal_up_to_framing(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  return framing_shift(p, q).has_value();
}

} // namespace ssb
