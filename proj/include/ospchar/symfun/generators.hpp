#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ospchar/algebra/laurent.hpp"
#include "ospchar/algebra/matrix.hpp"
#include "ospchar/symfun/partition.hpp"

namespace ospchar {

/// Letters of an alphabet as ring elements: the variables of X.
std::vector<LaurentPolynomial> letters(const VarList& vars);
/// The 2n-letter alphabet x_1..x_n, x_1^{-1}..x_n^{-1}.
std::vector<LaurentPolynomial> letters_with_inverses(const VarList& vars);

/// e_0..e_max / h_0..h_max over arbitrary ring-element letters, one letter at
/// a time (dynamic programming, no monomial enumeration).
std::vector<LaurentPolynomial> elementary_upto(int max, std::span<const LaurentPolynomial> letters,
                                               const VarSetPtr& ring);
std::vector<LaurentPolynomial> complete_upto(int max, std::span<const LaurentPolynomial> letters,
                                             const VarSetPtr& ring);

/// e_r(X); 1 for r = 0, 0 for r < 0 or r > |X|.
LaurentPolynomial elementary_e(int r, const VarList& vars);
/// h_r(X); 1 for r = 0, 0 for r < 0.
LaurentPolynomial complete_h(int r, const VarList& vars);
/// E_r(X;Y) = sum_j e_j(X) h_{r-j}(Y).
LaurentPolynomial super_E(int r, const VarList& x, const VarList& y);
/// H_r(X;Y) = sum_j h_j(X) e_{r-j}(Y).
LaurentPolynomial super_H(int r, const VarList& x, const VarList& y);
/// h_r(X, X^{-1}).
LaurentPolynomial laurent_h(int r, const VarList& x);
/// J_r(X;Y) = sum_l h_l(X, X^{-1}) e_{r-l}(Y).
LaurentPolynomial J(int r, const VarList& x, const VarList& y);

/// Table of a sequence indexed by integers with a zero default outside
/// [0, values.size()).
class IndexedSeries {
 public:
  IndexedSeries(VarSetPtr ring, std::vector<LaurentPolynomial> values)
      : zero_(std::move(ring)), values_(std::move(values)) {}
  const LaurentPolynomial& operator[](int r) const {
    return (r < 0 || static_cast<std::size_t>(r) >= values_.size()) ? zero_ : values_[static_cast<std::size_t>(r)];
  }

 private:
  LaurentPolynomial zero_;
  std::vector<LaurentPolynomial> values_;
};

IndexedSeries complete_series(int max, const VarList& vars);
IndexedSeries elementary_series(int max, const VarList& vars);
IndexedSeries super_H_series(int max, const VarList& x, const VarList& y);
IndexedSeries laurent_h_series(int max, const VarList& x);
IndexedSeries J_series(int max, const VarList& x, const VarList& y);

/// s_{lambda/mu}(X) = det(h_{lambda_i - mu_j - i + j}), matrix size
/// max(l(lambda), 1) unless `size` is given (must be >= l(lambda)).
LaurentPolynomial skew_schur_jt(const Partition& lambda, const Partition& mu, const VarList& x,
                                std::size_t size = 0);

/// min { j >= 1 : lambda_j + n + 1 - j <= m }.
int k_index(const Partition& lambda, int n, int m);

}  // namespace ospchar
