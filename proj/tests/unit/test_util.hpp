#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "ospchar/algebra/format.hpp"
#include "ospchar/algebra/laurent.hpp"
#include "ospchar/algebra/variables.hpp"

namespace ospchar {

inline void PrintTo(const LaurentPolynomial& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace ospchar

namespace ospchar::test {

inline LaurentPolynomial P(const std::string& text, const VarSetPtr& ring) { return parse_polynomial(text, ring); }

/// Random Laurent polynomial with up to `terms` terms, exponents in
/// [lo, hi] and coefficients in [-5, 5].
inline LaurentPolynomial random_poly(std::mt19937_64& rng, const VarSetPtr& ring, int terms, int lo = -2,
                                     int hi = 2) {
  std::uniform_int_distribution<int> exp(lo, hi);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<LaurentPolynomial::Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (std::size_t i = 0; i < ring->size(); ++i) m.set(i, exp(rng));
    ts.push_back({m, coeff(rng)});
  }
  return LaurentPolynomial::from_terms(ring, std::move(ts));
}

inline LaurentPolynomial random_nonzero(std::mt19937_64& rng, const VarSetPtr& ring, int terms, int lo = -2,
                                        int hi = 2) {
  for (;;) {
    auto p = random_poly(rng, ring, terms, lo, hi);
    if (!p.is_zero()) return p;
  }
}

}  // namespace ospchar::test
