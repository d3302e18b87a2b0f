#include "ospchar/symfun/generators.hpp"

#include <algorithm>

#include "ospchar/algebra/errors.hpp"

namespace ospchar {

std::vector<LaurentPolynomial> letters(const VarList& vars) {
  std::vector<LaurentPolynomial> out;
  for (auto i : vars.idx) out.push_back(LaurentPolynomial::variable(vars.ring, i));
  return out;
}

std::vector<LaurentPolynomial> letters_with_inverses(const VarList& vars) {
  auto out = letters(vars);
  for (auto i : vars.idx) out.push_back(LaurentPolynomial::variable(vars.ring, i, -1));
  return out;
}

std::vector<LaurentPolynomial> elementary_upto(int max, std::span<const LaurentPolynomial> alphabet,
                                               const VarSetPtr& ring) {
  std::vector<LaurentPolynomial> e(static_cast<std::size_t>(std::max(max, -1) + 1), LaurentPolynomial(ring));
  if (max < 0) return e;
  e[0] = LaurentPolynomial::constant(ring, 1);
  for (const auto& letter : alphabet) {
    for (int r = max; r >= 1; --r) {
      auto& prev = e[static_cast<std::size_t>(r - 1)];
      if (!prev.is_zero()) e[static_cast<std::size_t>(r)] += letter * prev;
    }
  }
  return e;
}

std::vector<LaurentPolynomial> complete_upto(int max, std::span<const LaurentPolynomial> alphabet,
                                             const VarSetPtr& ring) {
  std::vector<LaurentPolynomial> h(static_cast<std::size_t>(std::max(max, -1) + 1), LaurentPolynomial(ring));
  if (max < 0) return h;
  h[0] = LaurentPolynomial::constant(ring, 1);
  for (const auto& letter : alphabet) {
    // Ascending order reuses the already-updated h_{r-1}: h_r += x * h_{r-1}.
    for (int r = 1; r <= max; ++r) {
      h[static_cast<std::size_t>(r)] += letter * h[static_cast<std::size_t>(r - 1)];
    }
  }
  return h;
}

IndexedSeries complete_series(int max, const VarList& vars) {
  auto ls = letters(vars);
  return {vars.ring, complete_upto(max, ls, vars.ring)};
}

IndexedSeries elementary_series(int max, const VarList& vars) {
  auto ls = letters(vars);
  return {vars.ring, elementary_upto(max, ls, vars.ring)};
}

IndexedSeries laurent_h_series(int max, const VarList& x) {
  auto ls = letters_with_inverses(x);
  return {x.ring, complete_upto(max, ls, x.ring)};
}

IndexedSeries super_H_series(int max, const VarList& x, const VarList& y) {
  auto h = complete_series(max, x);
  auto e = elementary_series(max, y);
  std::vector<LaurentPolynomial> out;
  for (int r = 0; r <= max; ++r) {
    LaurentPolynomial acc(x.ring);
    for (int j = 0; j <= r; ++j) acc += h[j] * e[r - j];
    out.push_back(std::move(acc));
  }
  return {x.ring, std::move(out)};
}

IndexedSeries J_series(int max, const VarList& x, const VarList& y) {
  auto hb = laurent_h_series(max, x);
  auto e = elementary_series(max, y);
  std::vector<LaurentPolynomial> out;
  for (int r = 0; r <= max; ++r) {
    LaurentPolynomial acc(x.ring);
    for (int l = 0; l <= r; ++l) {
      if (!e[r - l].is_zero()) acc += hb[l] * e[r - l];
    }
    out.push_back(std::move(acc));
  }
  return {x.ring, std::move(out)};
}

LaurentPolynomial elementary_e(int r, const VarList& vars) { return elementary_series(r, vars)[r]; }

LaurentPolynomial complete_h(int r, const VarList& vars) { return complete_series(r, vars)[r]; }

LaurentPolynomial super_E(int r, const VarList& x, const VarList& y) {
  if (!same_variables(x.ring, y.ring)) throw RingMismatch("alphabets X and Y live in different rings");
  auto e = elementary_series(r, x);
  auto h = complete_series(r, y);
  LaurentPolynomial acc(x.ring);
  for (int j = 0; j <= r; ++j) acc += e[j] * h[r - j];
  return acc;
}

LaurentPolynomial super_H(int r, const VarList& x, const VarList& y) {
  if (!same_variables(x.ring, y.ring)) throw RingMismatch("alphabets X and Y live in different rings");
  return super_H_series(r, x, y)[r];
}

LaurentPolynomial laurent_h(int r, const VarList& x) { return laurent_h_series(r, x)[r]; }

LaurentPolynomial J(int r, const VarList& x, const VarList& y) {
  if (!same_variables(x.ring, y.ring)) throw RingMismatch("alphabets X and Y live in different rings");
  return J_series(r, x, y)[r];
}

LaurentPolynomial skew_schur_jt(const Partition& lambda, const Partition& mu, const VarList& x, std::size_t size) {
  if (!lambda.contains(mu)) {
    throw PreconditionError("skew shape requires mu inside lambda: lambda=(" + lambda.to_string() + "), mu=(" +
                            mu.to_string() + ")");
  }
  std::size_t n = size == 0 ? std::max<std::size_t>(lambda.length(), 1) : size;
  if (n < lambda.length()) throw PreconditionError("Jacobi-Trudi size must be at least l(lambda)");
  auto h = complete_series(lambda.part(1) + static_cast<int>(n), x);
  PolyMatrix m(x.ring, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      m(i - 1, j - 1) = h[lambda.part(i) - mu.part(j) - static_cast<int>(i) + static_cast<int>(j)];
    }
  }
  return det(m);
}

int k_index(const Partition& lambda, int n, int m) {
  for (int j = 1;; ++j) {
    if (lambda.part(static_cast<std::size_t>(j)) + n + 1 - j <= m) return j;
  }
}

}  // namespace ospchar
