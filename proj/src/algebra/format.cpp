#include "ospchar/algebra/format.hpp"

#include <cctype>
#include <nlohmann/json.hpp>

#include "ospchar/algebra/errors.hpp"

namespace ospchar {

namespace {

class TextParser {
 public:
  TextParser(std::string_view text, const VarSetPtr& vars) : s_(text), vars_(vars) {}

  LaurentPolynomial parse() {
    std::vector<LaurentPolynomial::Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial text");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(parse_term(sign));
    }
    return LaurentPolynomial::from_terms(vars_, std::move(terms));
  }

 private:
  LaurentPolynomial::Term parse_term(int sign) {
    Integer coeff = 1;
    Monomial mono;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer();
      have_factor = true;
      skip_ws();
      if (peek() != '*') return {mono, sign * coeff};
      get();
      skip_ws();
    }
    while (true) {
      if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
        fail(have_factor ? "expected variable after '*'" : "expected coefficient or variable");
      }
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += get();
      auto idx = vars_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      int e = 1;
      skip_ws();
      if (peek() == '^') {
        get();
        skip_ws();
        int es = 1;
        if (peek() == '-') {
          get();
          es = -1;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        e = es * static_cast<int>(parse_integer());
      }
      mono.add(*idx, e);
      have_factor = true;
      skip_ws();
      if (peek() != '*') break;
      get();
      skip_ws();
    }
    return {mono, sign * coeff};
  }

  Integer parse_integer() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    return Integer(digits);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const VarSetPtr& vars_;
};

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text, const VarSetPtr& vars) {
  return TextParser(text, vars).parse();
}

std::string to_json(const LaurentPolynomial& p) {
  nlohmann::ordered_json j;
  j["vars"] = p.vars()->names();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json e = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < p.vars()->size(); ++i) e.push_back(t.monomial[i]);
    nlohmann::ordered_json term;
    term["c"] = t.coeff.str();
    term["e"] = std::move(e);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

LaurentPolynomial polynomial_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
  }
  try {
    auto vars = VariableSet::make(j.at("vars").get<std::vector<std::string>>());
    std::vector<LaurentPolynomial::Term> terms;
    for (const auto& t : j.at("terms")) {
      auto exps = t.at("e").get<std::vector<int>>();
      if (exps.size() != vars->size()) throw ParseError("exponent vector length does not match vars");
      Monomial m;
      for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
      terms.push_back({m, Integer(t.at("c").get<std::string>())});
    }
    return LaurentPolynomial::from_terms(vars, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace ospchar
