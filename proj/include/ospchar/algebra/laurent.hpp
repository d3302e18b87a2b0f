#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ospchar/algebra/monomial.hpp"
#include "ospchar/algebra/variables.hpp"

namespace ospchar {

using Integer = boost::multiprecision::cpp_int;

/// Multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients. Terms are kept sorted in descending graded-lex order with no
/// zero coefficients, so structural equality is polynomial equality.
class LaurentPolynomial {
 public:
  struct Term {
    Monomial monomial;
    Integer coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(VarSetPtr vars) : vars_(std::move(vars)) {}

  static LaurentPolynomial constant(VarSetPtr vars, const Integer& c);
  static LaurentPolynomial variable(VarSetPtr vars, std::size_t index, int exponent = 1);
  static LaurentPolynomial monomial(VarSetPtr vars, const Monomial& m, const Integer& c = 1);
  /// Collects like terms and drops zeros; input order is irrelevant.
  static LaurentPolynomial from_terms(VarSetPtr vars, std::vector<Term> terms);

  const VarSetPtr& vars() const { return vars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Single term with coefficient +1 or -1, i.e. a unit of the Laurent ring.
  bool is_unit() const;
  const Term& leading_term() const { return terms_.front(); }

  /// Coefficient of `m` (zero when absent).
  Integer coefficient(const Monomial& m) const;

  /// Per-variable minimum / maximum exponent over all terms. Zero polynomial
  /// yields the zero vector.
  Monomial min_exponents() const;
  Monomial max_exponents() const;
  /// True when no variable appears with a negative exponent.
  bool is_polynomial() const;
  /// True when variable `index` does not occur.
  bool is_free_of(std::size_t index) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  LaurentPolynomial scaled(const Integer& c) const;
  LaurentPolynomial shifted(const Monomial& m) const;
  LaurentPolynomial pow(unsigned e) const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// Canonical text, e.g. `x1^2 + x1*y1 + 1 + x1^-2`.
  std::string to_string() const;

 private:
  void check_ring(const LaurentPolynomial& o) const;
  VarSetPtr vars_;
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };

LaurentPolynomial arith(const LaurentPolynomial& a, const LaurentPolynomial& b, ArithOp op);

/// Replaces variable `var` by `value` (same ring). A negative power of `var`
/// needs `value` to be a unit; zero there raises PoleAtZero.
LaurentPolynomial substitute(const LaurentPolynomial& p, std::size_t var, const LaurentPolynomial& value);
LaurentPolynomial substitute(const LaurentPolynomial& p, std::string_view var, const LaurentPolynomial& value);

/// Exact quotient in the Laurent ring. Throws NonExactDivision with the
/// first unresolvable remainder term when `b` does not divide `a`.
LaurentPolynomial exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Re-expresses `p` over `target`, matching variables by name. Every variable
/// that occurs in `p` must exist in `target`.
LaurentPolynomial change_ring(const LaurentPolynomial& p, const VarSetPtr& target);

/// Product of a list of polynomials (1 for the empty list).
LaurentPolynomial product(const VarSetPtr& vars, std::span<const LaurentPolynomial> factors);

std::string monomial_to_string(const Monomial& m, const VariableSet& vars);

}  // namespace ospchar
