#include "ospchar/algebra/laurent.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "ospchar/algebra/errors.hpp"

namespace ospchar {

namespace {

void sort_terms(std::vector<LaurentPolynomial::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return TermOrder{}(a.monomial, b.monomial); });
}

// Merges two canonical term lists; `sign` is +1 for addition, -1 for subtraction.
std::vector<LaurentPolynomial::Term> merge(std::span<const LaurentPolynomial::Term> a,
                                           std::span<const LaurentPolynomial::Term> b, int sign) {
  std::vector<LaurentPolynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && TermOrder{}(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || TermOrder{}(b[j].monomial, a[i].monomial)) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coeff : Integer(-b[j].coeff)});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(a[i].coeff + b[j].coeff) : Integer(a[i].coeff - b[j].coeff);
      if (!c.is_zero()) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(VarSetPtr vars, const Integer& c) {
  return monomial(std::move(vars), Monomial{}, c);
}

LaurentPolynomial LaurentPolynomial::variable(VarSetPtr vars, std::size_t index, int exponent) {
  if (!vars || index >= vars->size()) throw RingMismatch("variable index out of range");
  Monomial m;
  m.set(index, exponent);
  return monomial(std::move(vars), m);
}

LaurentPolynomial LaurentPolynomial::monomial(VarSetPtr vars, const Monomial& m, const Integer& c) {
  LaurentPolynomial p(std::move(vars));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(VarSetPtr vars, std::vector<Term> terms) {
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(terms.size());
  for (auto& t : terms) acc[t.monomial] += t.coeff;
  LaurentPolynomial p(std::move(vars));
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  }
  sort_terms(p.terms_);
  return p;
}

bool LaurentPolynomial::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

Integer LaurentPolynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return TermOrder{}(t.monomial, key); });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Monomial LaurentPolynomial::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial r = terms_[0].monomial;
  for (const auto& t : terms_) r = Monomial::min(r, t.monomial);
  return r;
}

Monomial LaurentPolynomial::max_exponents() const {
  if (terms_.empty()) return {};
  Monomial r = terms_[0].monomial;
  for (const auto& t : terms_) r = Monomial::max(r, t.monomial);
  return r;
}

bool LaurentPolynomial::is_polynomial() const {
  auto lo = min_exponents();
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (lo[i] < 0) return false;
  }
  return true;
}

bool LaurentPolynomial::is_free_of(std::size_t index) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial[index] == 0; });
}

void LaurentPolynomial::check_ring(const LaurentPolynomial& o) const {
  if (!same_variables(vars_, o.vars_)) throw RingMismatch("operands belong to different variable sets");
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  check_ring(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  check_ring(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_ring(b);
  LaurentPolynomial r(a.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].monomial).scaled(a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].monomial).scaled(b.terms_[0].coeff);

  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1u << 20));
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      acc[s.monomial * t.monomial] += s.coeff * t.coeff;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
  }
  sort_terms(r.terms_);
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Integer& c) const {
  LaurentPolynomial r(vars_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  if (c != 1) {
    for (auto& t : r.terms_) t.coeff *= c;
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const Monomial& m) const {
  // Multiplying by a monomial preserves graded-lex order.
  LaurentPolynomial r = *this;
  if (!m.is_one()) {
    for (auto& t : r.terms_) t.monomial = t.monomial * m;
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result = constant(vars_, 1);
  LaurentPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return same_variables(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

std::string monomial_to_string(const Monomial& m, const VariableSet& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    int e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    Integer mag = negative ? Integer(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_to_string(t.monomial, *vars_);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + '*' + mono;
    }
  }
  return out;
}

LaurentPolynomial arith(const LaurentPolynomial& a, const LaurentPolynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
  }
  throw Error("unknown arithmetic operation");
}

LaurentPolynomial substitute(const LaurentPolynomial& p, std::size_t var, const LaurentPolynomial& value) {
  if (!same_variables(p.vars(), value.vars())) throw RingMismatch("substituted value lives in another ring");
  if (var >= p.vars()->size()) throw RingMismatch("substitution variable out of range");

  // Group terms by the exponent of `var`, stripped of that variable.
  std::map<int, std::vector<LaurentPolynomial::Term>> groups;
  for (const auto& t : p.terms()) {
    Monomial rest = t.monomial;
    int e = rest[var];
    rest.set(var, 0);
    groups[e].push_back({rest, t.coeff});
  }

  LaurentPolynomial result(p.vars());
  for (auto& [e, terms] : groups) {
    LaurentPolynomial part = LaurentPolynomial::from_terms(p.vars(), std::move(terms));
    if (e == 0) {
      result += part;
      continue;
    }
    if (value.is_zero()) {
      if (e < 0) {
        throw PoleAtZero("pole at zero: " + p.vars()->name(var) + "^" + std::to_string(e) +
                         " cannot be evaluated at 0");
      }
      continue;
    }
    LaurentPolynomial power(p.vars());
    if (e > 0) {
      power = value.pow(static_cast<unsigned>(e));
    } else {
      if (!value.is_unit()) {
        throw PreconditionError("negative power of " + p.vars()->name(var) +
                                " requires a unit substitution value, got " + value.to_string());
      }
      const auto& t = value.leading_term();
      LaurentPolynomial inv = LaurentPolynomial::monomial(p.vars(), t.monomial.inverse(), t.coeff);
      power = inv.pow(static_cast<unsigned>(-e));
    }
    result += part * power;
  }
  return result;
}

LaurentPolynomial substitute(const LaurentPolynomial& p, std::string_view var, const LaurentPolynomial& value) {
  return substitute(p, p.vars()->require(var), value);
}

LaurentPolynomial exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (!same_variables(a.vars(), b.vars())) throw RingMismatch("operands belong to different variable sets");
  if (b.is_zero()) throw Error("division by zero polynomial");
  LaurentPolynomial q(a.vars());
  if (a.is_zero()) return q;

  const auto& lead = b.leading_term();
  const std::size_t nvars = a.vars()->size();
  auto fail = [&](const Monomial& m, const Integer& c) -> NonExactDivision {
    auto rem = LaurentPolynomial::monomial(a.vars(), m, c).to_string();
    return NonExactDivision("non-exact division: (" + a.to_string() + ") / (" + b.to_string() + ") leaves " + rem,
                            rem);
  };

  if (b.size() == 1) {
    std::vector<LaurentPolynomial::Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      Integer qc, r;
      boost::multiprecision::divide_qr(t.coeff, lead.coeff, qc, r);
      if (!r.is_zero()) throw fail(t.monomial, t.coeff);
      out.push_back({t.monomial / lead.monomial, std::move(qc)});
    }
    return LaurentPolynomial::from_terms(a.vars(), std::move(out));
  }

  // Every quotient monomial sits in the box [min(a)-min(b), max(a)-max(b)];
  // leaving it means the division cannot be exact, which also bounds the loop.
  Monomial lo = a.min_exponents() / b.min_exponents();
  Monomial hi = a.max_exponents() / b.max_exponents();
  auto in_box = [&](const Monomial& m) {
    for (std::size_t i = 0; i < nvars; ++i) {
      if (m[i] < lo[i] || m[i] > hi[i]) return false;
    }
    return true;
  };

  std::map<Monomial, Integer, TermOrder> rem;
  for (const auto& t : a.terms()) rem.emplace_hint(rem.end(), t.monomial, t.coeff);

  std::vector<LaurentPolynomial::Term> out;
  while (!rem.empty()) {
    auto it = rem.begin();
    Monomial qm = it->first / lead.monomial;
    if (!in_box(qm)) throw fail(it->first, it->second);
    Integer qc, r;
    boost::multiprecision::divide_qr(it->second, lead.coeff, qc, r);
    if (!r.is_zero()) throw fail(it->first, it->second);
    for (const auto& t : b.terms()) {
      Monomial key = qm * t.monomial;
      auto [pos, inserted] = rem.try_emplace(key, 0);
      pos->second -= qc * t.coeff;
      if (pos->second.is_zero()) rem.erase(pos);
    }
    out.push_back({qm, std::move(qc)});
  }
  // Quotient terms were produced in strictly descending order.
  return LaurentPolynomial::from_terms(a.vars(), std::move(out));
}

LaurentPolynomial change_ring(const LaurentPolynomial& p, const VarSetPtr& target) {
  if (same_variables(p.vars(), target)) {
    return LaurentPolynomial::from_terms(target, {p.terms().begin(), p.terms().end()});
  }
  const auto& src = *p.vars();
  std::vector<std::size_t> map(src.size());
  Monomial used = Monomial::max(p.max_exponents(), p.min_exponents().inverse());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto j = target->index_of(src.name(i));
    if (!j) {
      if (used[i] != 0) throw RingMismatch("variable " + src.name(i) + " missing from target ring");
      map[i] = kMaxVariables;
      continue;
    }
    map[i] = *j;
  }
  std::vector<LaurentPolynomial::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.monomial[i] != 0) m.set(map[i], t.monomial[i]);
    }
    out.push_back({m, t.coeff});
  }
  return LaurentPolynomial::from_terms(target, std::move(out));
}

LaurentPolynomial product(const VarSetPtr& vars, std::span<const LaurentPolynomial> factors) {
  LaurentPolynomial r = LaurentPolynomial::constant(vars, 1);
  for (const auto& f : factors) r *= f;
  return r;
}

}  // namespace ospchar
