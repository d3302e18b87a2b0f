#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace ospchar {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector over a VariableSet. Slots beyond the set's size stay zero,
/// so comparisons and hashing never need the size.
class Monomial {
 public:
  using Exponent = std::int16_t;

  Monomial() = default;

  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);
  void add(std::size_t i, int delta) { set(i, exps_[i] + delta); }

  int degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_one() const { return *this == Monomial{}; }

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial inverse() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

  /// Graded lexicographic comparison: total degree first, then the first
  /// differing exponent. The order is compatible with multiplication on Z^n,
  /// so leading terms multiply.
  static std::strong_ordering compare(const Monomial& a, const Monomial& b);

  static Monomial min(const Monomial& a, const Monomial& b);
  static Monomial max(const Monomial& a, const Monomial& b);

 private:
  std::array<Exponent, kMaxVariables> exps_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Strict "comes first in canonical order" predicate (descending graded lex).
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) == std::strong_ordering::greater;
  }
};

}  // namespace ospchar
