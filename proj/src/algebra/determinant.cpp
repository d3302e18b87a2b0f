#include <bit>
#include <cstdint>
#include <optional>

#include "ospchar/algebra/matrix.hpp"

namespace ospchar {

namespace {

constexpr std::size_t kCofactorLimit = 24;

template <typename T>
T det_cofactor_impl(const SquareMatrix<T>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(LaurentPolynomial::constant(m.ring(), 1));
  if (n > kCofactorLimit) throw PreconditionError("cofactor expansion limited to " + std::to_string(kCofactorLimit) + " rows");

  // minors[mask] = determinant of the last popcount(mask) rows restricted to
  // the columns in mask. Built bottom-up one row at a time.
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::optional<T>> prev(full), cur(full);
  for (std::size_t c = 0; c < n; ++c) prev[std::size_t{1} << c] = m(n - 1, c);

  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t row = n - k;
    for (auto& v : cur) v.reset();
    for (std::size_t mask = 1; mask < full; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
      T acc(m.ring());
      bool any = false;
      int pos = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(mask & (std::size_t{1} << c))) continue;
        const T& entry = m(row, c);
        const auto& minor = prev[mask & ~(std::size_t{1} << c)];
        if (!entry.is_zero() && minor && !minor->is_zero()) {
          T term = entry * *minor;
          if (pos % 2) {
            acc = any ? acc - term : -term;
          } else {
            acc = any ? acc + term : term;
          }
          any = true;
        }
        ++pos;
      }
      cur[mask] = std::move(acc);
    }
    std::swap(prev, cur);
  }
  return prev[full - 1] ? *prev[full - 1] : T(m.ring());
}

}  // namespace

LaurentPolynomial det_bareiss(const PolyMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return LaurentPolynomial::constant(input.ring(), 1);
  PolyMatrix a = input;
  bool negate = false;
  LaurentPolynomial prev = LaurentPolynomial::constant(input.ring(), 1);

  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      // Prefer the sparsest nonzero pivot below.
      std::size_t best = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (!a(i, k).is_zero() && (best == n || a(i, k).size() < a(best, k).size())) best = i;
      }
      if (best == n) return LaurentPolynomial(input.ring());
      a.swap_rows(k, best);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPolynomial v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = prev.is_constant() && prev.leading_term().coeff == 1 ? std::move(v) : exact_div(v, prev);
      }
      a(i, k) = LaurentPolynomial(input.ring());
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

LaurentPolynomial det_cofactor(const PolyMatrix& m) { return det_cofactor_impl(m); }

RationalFunction det_cofactor(const RationalMatrix& m) { return det_cofactor_impl(m); }

RationalMatrix to_rational(const PolyMatrix& m) {
  RationalMatrix r(m.ring(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = RationalFunction(m(i, j));
  return r;
}

}  // namespace ospchar
