#include "ospchar/algebra/rational.hpp"

#include <algorithm>

#include "ospchar/algebra/errors.hpp"

namespace ospchar {

namespace {

using Factors = std::vector<LaurentPolynomial>;

// a minus b as multisets.
Factors multiset_minus(const Factors& a, const Factors& b) {
  Factors out = a;
  for (const auto& f : b) {
    auto it = std::find(out.begin(), out.end(), f);
    if (it != out.end()) out.erase(it);
  }
  return out;
}

LaurentPolynomial unit_inverse(const LaurentPolynomial& u) {
  const auto& t = u.leading_term();
  return LaurentPolynomial::monomial(u.vars(), t.monomial.inverse(), t.coeff);
}

}  // namespace

FactorSplit split_unit(const LaurentPolynomial& f) {
  if (f.is_zero()) throw Error("cannot normalize the zero polynomial");
  Monomial content = f.min_exponents();
  LaurentPolynomial g = f.shifted(content.inverse());
  Integer sign = g.leading_term().coeff < 0 ? -1 : 1;
  if (sign < 0) g = -g;
  return {LaurentPolynomial::monomial(f.vars(), content, sign), std::move(g)};
}

RationalFunction::RationalFunction(LaurentPolynomial num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(LaurentPolynomial num, const LaurentPolynomial& den) : num_(std::move(num)) {
  add_den_factor(den);
  if (num_.is_zero()) den_.clear();
}

RationalFunction::RationalFunction(LaurentPolynomial num, std::span<const LaurentPolynomial> den_factors)
    : num_(std::move(num)) {
  for (const auto& f : den_factors) add_den_factor(f);
  if (num_.is_zero()) den_.clear();
}

void RationalFunction::add_den_factor(const LaurentPolynomial& f) {
  if (!same_variables(num_.vars(), f.vars())) throw RingMismatch("denominator lives in another ring");
  if (f.is_zero()) throw Error("rational function with zero denominator");
  auto [unit, g] = split_unit(f);
  num_ = num_ * unit_inverse(unit);
  if (g.is_constant() && g.leading_term().coeff == 1) return;
  den_.push_back(std::move(g));
}

LaurentPolynomial RationalFunction::den() const { return product(vars(), den_); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (!same_variables(a.vars(), b.vars())) throw RingMismatch("operands belong to different variable sets");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Factors a_missing = multiset_minus(b.den_, a.den_);
  Factors b_missing = multiset_minus(a.den_, b.den_);
  RationalFunction r(a.vars());
  r.num_ = a.num_ * product(a.vars(), a_missing) + b.num_ * product(a.vars(), b_missing);
  if (r.num_.is_zero()) return r;
  r.den_ = a.den_;
  r.den_.insert(r.den_.end(), a_missing.begin(), a_missing.end());
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (!same_variables(a.vars(), b.vars())) throw RingMismatch("operands belong to different variable sets");
  RationalFunction r(a.vars());
  r.num_ = a.num_ * b.num_;
  if (r.num_.is_zero()) return r;
  r.den_ = a.den_;
  r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (!same_variables(a.vars(), b.vars())) throw RingMismatch("operands belong to different variable sets");
  if (b.is_zero()) throw Error("division by zero rational function");
  Factors extra = multiset_minus(b.den_, a.den_);
  RationalFunction r(a.vars());
  r.num_ = a.num_ * product(a.vars(), extra);
  if (r.num_.is_zero()) return r;
  r.den_ = multiset_minus(a.den_, b.den_);
  r.add_den_factor(b.num_);
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (!same_variables(a.vars(), b.vars())) return false;
  Factors only_a = multiset_minus(a.den_, b.den_);
  Factors only_b = multiset_minus(b.den_, a.den_);
  return a.num_ * product(a.vars(), only_b) == b.num_ * product(a.vars(), only_a);
}

LaurentPolynomial RationalFunction::to_laurent() const {
  LaurentPolynomial q = num_;
  for (const auto& f : den_) q = exact_div(q, f);
  return q;
}

LaurentPolynomial RationalFunction::to_laurent_scaled(std::span<const LaurentPolynomial> mul,
                                                      std::span<const LaurentPolynomial> div) const {
  RationalFunction r = *this;
  for (const auto& f : div) r.add_den_factor(f);
  Factors keep;
  for (const auto& f : mul) {
    if (f.is_zero()) return LaurentPolynomial(vars());
    auto [unit, g] = split_unit(f);
    r.num_ = r.num_ * unit;
    auto it = std::find(r.den_.begin(), r.den_.end(), g);
    if (it != r.den_.end()) {
      r.den_.erase(it);
    } else {
      keep.push_back(std::move(g));
    }
  }
  r.num_ = r.num_ * product(vars(), keep);
  return r.to_laurent();
}

std::string RationalFunction::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string out = "(" + num_.to_string() + ") / ";
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i) out += '*';
    out += "(" + den_[i].to_string() + ")";
  }
  return out;
}

}  // namespace ospchar
