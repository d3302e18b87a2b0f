#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ospchar/algebra/laurent.hpp"
#include "ospchar/symfun/partition.hpp"

namespace ospchar {

enum class TableauFamily { Ssyt, Super, Symplectic, Orthosymplectic, OddSymplectic };

/// One ordered entry of an alphabet. Codes are positions in the total order.
struct Letter {
  std::string label;  // "3", "3b" (barred), "2p" (primed)
  bool primed = false;
  Monomial weight;    // contribution of one occurrence
};

/// Ordered entry set of a tableau family:
///   ssyt(n):             1 < ... < n
///   super(n,m):          1 < ... < n < 1' < ... < m'
///   symplectic(n):       1 < 1b < ... < n < nb
///   orthosymplectic(n,m): 1 < 1b < ... < n < nb < 1' < ... < m'
///   odd_symplectic(n):   1 < 1b < ... < (n-1) < (n-1)b < n
class Alphabet {
 public:
  static Alphabet ssyt(const VarList& x);
  static Alphabet super(const VarList& x, const VarList& y);
  static Alphabet symplectic(const VarList& x);
  static Alphabet orthosymplectic(const VarList& x, const VarList& y);
  static Alphabet odd_symplectic(const VarList& x);

  TableauFamily family() const { return family_; }
  const VarSetPtr& ring() const { return ring_; }
  std::size_t size() const { return letters_.size(); }
  const Letter& operator[](std::size_t code) const { return letters_[code]; }

  /// Smallest code allowed in (1-based) row `row` for the unprimed part:
  /// the letter `row` itself in the symplectic families, 0 otherwise.
  std::size_t row_floor(std::size_t row) const;
  /// Whether `code` may be placed in `row` given its left and upper
  /// neighbours (-1 when absent). This is the pruning rule of the enumerator.
  bool admissible(std::size_t row, int left, int top, std::size_t code) const;

 private:
  TableauFamily family_ = TableauFamily::Ssyt;
  VarSetPtr ring_;
  std::vector<Letter> letters_;
  std::size_t unprimed_ = 0;  // number of letters before the primed block
  bool row_bounded_ = false;
};

/// A filling of the skew shape shape/inner. rows[i] holds the codes of row
/// i+1, left to right, starting at column inner_{i+1}+1.
struct Tableau {
  Partition shape;
  Partition inner;
  std::vector<std::vector<std::size_t>> rows;

  std::string to_string(const Alphabet& alphabet) const;
  Monomial weight(const Alphabet& alphabet) const;
};

/// Checks a filling against the family's definition directly, independent
/// of the enumerator's pruning. Returns an empty string when valid, else the
/// first violated rule.
std::string validate(const Tableau& t, const Alphabet& alphabet);

/// Row-major backtracking enumeration of all tableaux of a (skew) shape.
class TableauEnumerator {
 public:
  TableauEnumerator(Alphabet alphabet, Partition shape, Partition inner = {});

  /// Visits every tableau once; tableaux are not stored.
  void for_each(const std::function<void(const Tableau&)>& visit) const;
  /// Sum of weights, accumulated without materializing tableaux.
  LaurentPolynomial weight_sum() const;
  std::size_t count() const;

  const Alphabet& alphabet() const { return alphabet_; }

 private:
  Alphabet alphabet_;
  Partition shape_;
  Partition inner_;
};

/// s_{lambda/mu}(X) as a sum over semistandard tableaux.
LaurentPolynomial enum_ssyt(const Partition& lambda, const Partition& mu, const VarList& x);
/// hs_lambda(X;Y) over supertableaux.
LaurentPolynomial enum_super(const Partition& lambda, const VarList& x, const VarList& y);
/// sp_lambda(X) over King symplectic tableaux.
LaurentPolynomial enum_symplectic(const Partition& lambda, const VarList& x);
/// spo_lambda(X;Y) over orthosymplectic tableaux.
LaurentPolynomial enum_orthosymplectic(const Partition& lambda, const VarList& x, const VarList& y);
/// sp^{(n-1,1)}_lambda(x_1..x_{n-1} | x_n); requires l(lambda) <= n.
LaurentPolynomial enum_odd_symplectic(const Partition& lambda, const VarList& x);

}  // namespace ospchar
