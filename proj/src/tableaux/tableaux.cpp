#include "ospchar/tableaux/tableaux.hpp"

#include <unordered_map>

#include "ospchar/algebra/errors.hpp"

namespace ospchar {

namespace {

Monomial unit_exponent(std::size_t var, int e) {
  Monomial m;
  m.set(var, e);
  return m;
}

void check_rings(const VarList& x, const VarList& y) {
  if (!same_variables(x.ring, y.ring)) throw RingMismatch("alphabets X and Y live in different rings");
}

}  // namespace

Alphabet Alphabet::ssyt(const VarList& x) {
  Alphabet a;
  a.family_ = TableauFamily::Ssyt;
  a.ring_ = x.ring;
  for (std::size_t i = 0; i < x.size(); ++i) {
    a.letters_.push_back({std::to_string(i + 1), false, unit_exponent(x.idx[i], 1)});
  }
  a.unprimed_ = a.letters_.size();
  return a;
}

Alphabet Alphabet::super(const VarList& x, const VarList& y) {
  check_rings(x, y);
  Alphabet a = ssyt(x);
  a.family_ = TableauFamily::Super;
  for (std::size_t j = 0; j < y.size(); ++j) {
    a.letters_.push_back({std::to_string(j + 1) + "p", true, unit_exponent(y.idx[j], 1)});
  }
  return a;
}

Alphabet Alphabet::symplectic(const VarList& x) {
  Alphabet a;
  a.family_ = TableauFamily::Symplectic;
  a.ring_ = x.ring;
  a.row_bounded_ = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    a.letters_.push_back({std::to_string(i + 1), false, unit_exponent(x.idx[i], 1)});
    a.letters_.push_back({std::to_string(i + 1) + "b", false, unit_exponent(x.idx[i], -1)});
  }
  a.unprimed_ = a.letters_.size();
  return a;
}

Alphabet Alphabet::orthosymplectic(const VarList& x, const VarList& y) {
  check_rings(x, y);
  Alphabet a = symplectic(x);
  a.family_ = TableauFamily::Orthosymplectic;
  for (std::size_t j = 0; j < y.size(); ++j) {
    a.letters_.push_back({std::to_string(j + 1) + "p", true, unit_exponent(y.idx[j], 1)});
  }
  return a;
}

Alphabet Alphabet::odd_symplectic(const VarList& x) {
  Alphabet a;
  a.family_ = TableauFamily::OddSymplectic;
  a.ring_ = x.ring;
  a.row_bounded_ = true;
  if (x.size() == 0) return a;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    a.letters_.push_back({std::to_string(i + 1), false, unit_exponent(x.idx[i], 1)});
    a.letters_.push_back({std::to_string(i + 1) + "b", false, unit_exponent(x.idx[i], -1)});
  }
  a.letters_.push_back({std::to_string(x.size()), false, unit_exponent(x.idx.back(), 1)});
  a.unprimed_ = a.letters_.size();
  return a;
}

std::size_t Alphabet::row_floor(std::size_t row) const { return row_bounded_ ? 2 * (row - 1) : 0; }

bool Alphabet::admissible(std::size_t row, int left, int top, std::size_t code) const {
  const int c = static_cast<int>(code);
  switch (family_) {
    case TableauFamily::Ssyt:
      return (left < 0 || left <= c) && (top < 0 || top < c);
    case TableauFamily::Symplectic:
    case TableauFamily::OddSymplectic:
      return code >= row_floor(row) && (left < 0 || left <= c) && (top < 0 || top < c);
    case TableauFamily::Super: {
      bool primed = letters_[code].primed;
      bool row_ok = left < 0 || left < c || (left == c && !primed);
      bool col_ok = top < 0 || top < c || (top == c && primed);
      return row_ok && col_ok;
    }
    case TableauFamily::Orthosymplectic: {
      auto is_primed = [&](int k) { return letters_[static_cast<std::size_t>(k)].primed; };
      if (!letters_[code].primed) {
        // Unprimed cells form a Young sub-diagram holding a symplectic tableau.
        return code >= row_floor(row) && (left < 0 || (!is_primed(left) && left <= c)) &&
               (top < 0 || (!is_primed(top) && top < c));
      }
      return (left < 0 || !is_primed(left) || left < c) && (top < 0 || !is_primed(top) || top <= c);
    }
  }
  return false;
}

std::string Tableau::to_string(const Alphabet& alphabet) const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ',';
    out += '[';
    bool first = true;
    for (int k = 0; k < inner.part(i + 1); ++k) {
      out += first ? "." : ",.";
      first = false;
    }
    for (auto code : rows[i]) {
      if (!first) out += ',';
      out += alphabet[code].label;
      first = false;
    }
    out += ']';
  }
  return out + "]";
}

Monomial Tableau::weight(const Alphabet& alphabet) const {
  Monomial w;
  for (const auto& row : rows)
    for (auto code : row) w = w * alphabet[code].weight;
  return w;
}

std::string validate(const Tableau& t, const Alphabet& a) {
  if (!t.shape.contains(t.inner)) return "inner shape not contained in outer shape";
  if (t.rows.size() != t.shape.length()) return "row count does not match shape";
  auto at = [&](std::size_t i, std::size_t j) -> int {
    // 1-based row i, 1-based column j; -1 outside the skew shape.
    if (i < 1 || i > t.rows.size()) return -1;
    int lo = t.inner.part(i);
    if (static_cast<int>(j) <= lo || static_cast<int>(j) > t.shape.part(i)) return -1;
    return static_cast<int>(t.rows[i - 1][j - 1 - static_cast<std::size_t>(lo)]);
  };
  for (std::size_t i = 1; i <= t.rows.size(); ++i) {
    if (static_cast<int>(t.rows[i - 1].size()) != t.shape.part(i) - t.inner.part(i)) return "row length mismatch";
    for (auto c : t.rows[i - 1]) {
      if (c >= a.size()) return "entry outside alphabet";
    }
  }
  const bool row_bounded = a.family() == TableauFamily::Symplectic || a.family() == TableauFamily::OddSymplectic ||
                           a.family() == TableauFamily::Orthosymplectic;
  for (std::size_t i = 1; i <= t.rows.size(); ++i) {
    for (int jj = t.inner.part(i) + 1; jj <= t.shape.part(i); ++jj) {
      auto j = static_cast<std::size_t>(jj);
      int c = at(i, j);
      int right = at(i, j + 1);
      int below = at(i + 1, j);
      bool primed = a[static_cast<std::size_t>(c)].primed;
      switch (a.family()) {
        case TableauFamily::Ssyt:
        case TableauFamily::Symplectic:
        case TableauFamily::OddSymplectic:
          if (right >= 0 && right < c) return "row not weakly increasing";
          if (below >= 0 && below <= c) return "column not strictly increasing";
          break;
        case TableauFamily::Super:
          if (right >= 0 && (right < c || (right == c && primed))) return "row rule violated";
          if (below >= 0 && (below < c || (below == c && !primed))) return "column rule violated";
          break;
        case TableauFamily::Orthosymplectic: {
          if (!primed) {
            // Sub-diagram S: every unprimed cell has unprimed left/upper neighbours.
            int left = at(i, j - 1);
            int up = at(i - 1, j);
            if (left >= 0 && a[static_cast<std::size_t>(left)].primed) return "unprimed cells are not a Young diagram";
            if (up >= 0 && a[static_cast<std::size_t>(up)].primed) return "unprimed cells are not a Young diagram";
            if (right >= 0 && !a[static_cast<std::size_t>(right)].primed && right < c) return "S row not weak";
            if (below >= 0 && !a[static_cast<std::size_t>(below)].primed && below <= c) return "S column not strict";
          } else {
            if (right >= 0 && right <= c) return "primed row not strictly increasing";
            if (below >= 0 && below < c) return "primed column not weakly increasing";
          }
          break;
        }
      }
      if (row_bounded && !primed && static_cast<std::size_t>(c) < 2 * (i - 1)) return "entry smaller than its row index";
    }
  }
  return {};
}

TableauEnumerator::TableauEnumerator(Alphabet alphabet, Partition shape, Partition inner)
    : alphabet_(std::move(alphabet)), shape_(std::move(shape)), inner_(std::move(inner)) {
  if (!shape_.contains(inner_)) {
    throw PreconditionError("skew shape requires mu inside lambda: lambda=(" + shape_.to_string() + "), mu=(" +
                            inner_.to_string() + ")");
  }
}

namespace {

// Shared backtracking core. `leaf` is called with the filled rows and the
// accumulated weight.
template <typename Leaf>
void backtrack(const Alphabet& a, const Partition& shape, const Partition& inner, Leaf&& leaf) {
  std::vector<std::vector<std::size_t>> rows(shape.length());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].resize(static_cast<std::size_t>(shape.part(i + 1) - inner.part(i + 1)));
  }
  // Flattened cell list, row-major.
  struct Cell {
    std::size_t row, col;  // 1-based
  };
  std::vector<Cell> cells;
  for (std::size_t i = 1; i <= shape.length(); ++i) {
    for (int j = inner.part(i) + 1; j <= shape.part(i); ++j) cells.push_back({i, static_cast<std::size_t>(j)});
  }
  auto get = [&](std::size_t i, std::size_t j) -> int {
    if (i < 1) return -1;
    int lo = inner.part(i);
    if (static_cast<int>(j) <= lo || static_cast<int>(j) > shape.part(i)) return -1;
    return static_cast<int>(rows[i - 1][j - 1 - static_cast<std::size_t>(lo)]);
  };

  Monomial weight;
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == cells.size()) {
      leaf(rows, weight);
      return;
    }
    const auto [i, j] = cells[k];
    const int left = j > 1 ? get(i, j - 1) : -1;
    const int top = get(i - 1, j);
    auto& slot = rows[i - 1][j - 1 - static_cast<std::size_t>(inner.part(i))];
    for (std::size_t c = 0; c < a.size(); ++c) {
      if (!a.admissible(i, left, top, c)) continue;
      slot = c;
      Monomial saved = weight;
      weight = weight * a[c].weight;
      self(self, k + 1);
      weight = saved;
    }
  };
  rec(rec, 0);
}

}  // namespace

void TableauEnumerator::for_each(const std::function<void(const Tableau&)>& visit) const {
  Tableau t{shape_, inner_, {}};
  backtrack(alphabet_, shape_, inner_, [&](const auto& rows, const Monomial&) {
    t.rows = rows;
    visit(t);
  });
}

LaurentPolynomial TableauEnumerator::weight_sum() const {
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> counts;
  backtrack(alphabet_, shape_, inner_, [&](const auto&, const Monomial& w) { ++counts[w]; });
  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(counts.size());
  for (const auto& [m, c] : counts) terms.push_back({m, Integer(c)});
  return LaurentPolynomial::from_terms(alphabet_.ring(), std::move(terms));
}

std::size_t TableauEnumerator::count() const {
  std::size_t n = 0;
  backtrack(alphabet_, shape_, inner_, [&](const auto&, const Monomial&) { ++n; });
  return n;
}

LaurentPolynomial enum_ssyt(const Partition& lambda, const Partition& mu, const VarList& x) {
  return TableauEnumerator(Alphabet::ssyt(x), lambda, mu).weight_sum();
}

LaurentPolynomial enum_super(const Partition& lambda, const VarList& x, const VarList& y) {
  return TableauEnumerator(Alphabet::super(x, y), lambda).weight_sum();
}

LaurentPolynomial enum_symplectic(const Partition& lambda, const VarList& x) {
  return TableauEnumerator(Alphabet::symplectic(x), lambda).weight_sum();
}

LaurentPolynomial enum_orthosymplectic(const Partition& lambda, const VarList& x, const VarList& y) {
  return TableauEnumerator(Alphabet::orthosymplectic(x, y), lambda).weight_sum();
}

LaurentPolynomial enum_odd_symplectic(const Partition& lambda, const VarList& x) {
  if (lambda.length() > x.size()) {
    throw PreconditionError("odd symplectic tableaux need l(lambda) <= n; got l=" + std::to_string(lambda.length()) +
                            ", n=" + std::to_string(x.size()));
  }
  return TableauEnumerator(Alphabet::odd_symplectic(x), lambda).weight_sum();
}

}  // namespace ospchar
