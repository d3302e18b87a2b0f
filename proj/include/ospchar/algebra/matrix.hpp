#pragma once

#include <cstddef>
#include <vector>

#include "ospchar/algebra/errors.hpp"
#include "ospchar/algebra/laurent.hpp"
#include "ospchar/algebra/rational.hpp"

namespace ospchar {

/// Dense square matrix over Laurent polynomials or rational functions. The
/// ring is stored so that the empty matrix still knows where its determinant
/// (1) lives.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix(VarSetPtr ring, std::size_t size)
      : ring_(std::move(ring)), size_(size), data_(size * size, T(ring_)) {}

  std::size_t size() const { return size_; }
  const VarSetPtr& ring() const { return ring_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

  SquareMatrix transposed() const {
    SquareMatrix t(ring_, size_);
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < size_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  VarSetPtr ring_;
  std::size_t size_;
  std::vector<T> data_;
};

using PolyMatrix = SquareMatrix<LaurentPolynomial>;
using RationalMatrix = SquareMatrix<RationalFunction>;

/// Fraction-free (Bareiss) elimination with row pivoting; every division is
/// an exact Laurent division by the previous pivot.
LaurentPolynomial det_bareiss(const PolyMatrix& m);

/// Laplace expansion along rows with minors memoized by column subset
/// (O(n 2^n) ring multiplications). Division-free, so it doubles as the
/// independent route against Bareiss.
LaurentPolynomial det_cofactor(const PolyMatrix& m);
RationalFunction det_cofactor(const RationalMatrix& m);

/// Default determinant per entry ring: Bareiss over polynomials, cofactor
/// expansion over rational functions. The 0x0 determinant is 1.
inline LaurentPolynomial det(const PolyMatrix& m) { return det_bareiss(m); }
inline RationalFunction det(const RationalMatrix& m) { return det_cofactor(m); }

/// Lifts a polynomial matrix entrywise into rational functions.
RationalMatrix to_rational(const PolyMatrix& m);

}  // namespace ospchar
