#pragma once

#include <span>
#include <string>
#include <vector>

#include "ospchar/algebra/laurent.hpp"

namespace ospchar {

/// Quotient num / (f_1 * ... * f_k) of Laurent polynomials.
///
/// The denominator is stored as a multiset of normalized factors: each factor
/// has no monomial content and a positive leading coefficient, so `x - y` and
/// `y - x`, or `x^-1 + y` and `x*y + 1`, land on the same key with the unit
/// pushed into the numerator. Sums take the multiset LCM of the two
/// denominators, which keeps cofactor expansions over rows sharing a
/// denominator from compounding. No gcd reduction of the numerator is ever
/// attempted; equality is cross-multiplication after cancelling shared
/// factors.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(VarSetPtr vars) : num_(std::move(vars)) {}
  RationalFunction(LaurentPolynomial num);  // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPolynomial num, const LaurentPolynomial& den);
  RationalFunction(LaurentPolynomial num, std::span<const LaurentPolynomial> den_factors);

  const VarSetPtr& vars() const { return num_.vars(); }
  const LaurentPolynomial& num() const { return num_; }
  const std::vector<LaurentPolynomial>& den_factors() const { return den_; }
  LaurentPolynomial den() const;
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  /// Cross-multiplication test.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// Exact conversion; throws NonExactDivision when the value is not a
  /// Laurent polynomial.
  LaurentPolynomial to_laurent() const;

  /// this * prod(mul) / prod(div) as a Laurent polynomial. Factors shared
  /// between `mul` and the stored denominator cancel before any division.
  LaurentPolynomial to_laurent_scaled(std::span<const LaurentPolynomial> mul,
                                      std::span<const LaurentPolynomial> div) const;

  std::string to_string() const;

 private:
  void add_den_factor(const LaurentPolynomial& f);
  LaurentPolynomial num_;
  std::vector<LaurentPolynomial> den_;
};

/// Splits f = u * g with u a unit (sign times monomial) and g normalized:
/// no negative exponents, no monomial content, positive leading coefficient.
struct FactorSplit {
  LaurentPolynomial unit;
  LaurentPolynomial normalized;
};
FactorSplit split_unit(const LaurentPolynomial& f);

}  // namespace ospchar
