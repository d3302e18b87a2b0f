#include <gtest/gtest.h>

#include <functional>

#include "ospchar/algebra/errors.hpp"
#include "ospchar/characters/characters.hpp"
#include "ospchar/symfun/generators.hpp"
#include "ospchar/tableaux/tableaux.hpp"
#include "test_util.hpp"

using namespace ospchar;
using test::P;

namespace {

struct Rings {
  VarSetPtr ring;
  VarList x, y;
  Rings(std::size_t n, std::size_t m)
      : ring(standard_ring(n, m)), x(named_block(ring, "x", n)), y(named_block(ring, "y", m)) {}
};

// Every filling of the shape by alphabet codes, kept when validate() accepts.
std::pair<std::size_t, LaurentPolynomial> brute_force(const Alphabet& a, const Partition& shape) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 1; r <= shape.length(); ++r)
    for (int c = 0; c < shape.part(r); ++c) cells.emplace_back(r - 1, static_cast<std::size_t>(c));
  Tableau t{shape, Partition{}, {}};
  t.rows.resize(shape.length());
  for (std::size_t r = 1; r <= shape.length(); ++r) t.rows[r - 1].assign(static_cast<std::size_t>(shape.part(r)), 0);
  std::size_t count = 0;
  LaurentPolynomial sum(a.ring());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      if (validate(t, a).empty()) {
        ++count;
        sum += LaurentPolynomial::monomial(a.ring(), t.weight(a));
      }
      return;
    }
    for (std::size_t code = 0; code < a.size(); ++code) {
      t.rows[cells[k].first][cells[k].second] = code;
      rec(k + 1);
    }
  };
  rec(0);
  return {count, sum};
}

}  // namespace

TEST(Tableaux, AlphabetOrders) {
  Rings r(2, 2);
  auto o = Alphabet::orthosymplectic(r.x, r.y);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < o.size(); ++i) labels.push_back(o[i].label);
  EXPECT_EQ(labels, (std::vector<std::string>{"1", "1b", "2", "2b", "1p", "2p"}));
  auto odd = Alphabet::odd_symplectic(named_block(standard_ring(3, 0), "x", 3));
  labels.clear();
  for (std::size_t i = 0; i < odd.size(); ++i) labels.push_back(odd[i].label);
  EXPECT_EQ(labels, (std::vector<std::string>{"1", "1b", "2", "2b", "3"}));
  auto sup = Alphabet::super(r.x, r.y);
  EXPECT_EQ(sup.size(), 4u);
  EXPECT_TRUE(sup[2].primed);
}

TEST(Tableaux, SsytExamples) {
  Rings r(2, 0);
  EXPECT_EQ(enum_ssyt(Partition({1}), Partition{}, r.x), P("x1 + x2", r.ring));
  EXPECT_EQ(enum_ssyt(Partition({2, 1}), Partition{}, r.x), P("x1^2*x2 + x1*x2^2", r.ring));
  EXPECT_TRUE(enum_ssyt(Partition({1, 1, 1}), Partition{}, r.x).is_zero());
  EXPECT_THROW(enum_ssyt(Partition({1}), Partition({1, 1}), r.x), PreconditionError);
  EXPECT_EQ(enum_ssyt(Partition({2, 1}), Partition({2, 1}), r.x), P("1", r.ring));
}

TEST(Tableaux, SuperExample) {
  Rings r(2, 1);
  EXPECT_EQ(enum_super(Partition({2, 1}), r.x, r.y),
            P("x1^2*x2 + x1*x2^2 + x1^2*y1 + 2*x1*x2*y1 + x2^2*y1 + x1*y1^2 + x2*y1^2", r.ring));
  TableauEnumerator en(Alphabet::super(r.x, r.y), Partition({2, 1}));
  EXPECT_EQ(en.count(), 8u);
  EXPECT_EQ(enum_super(Partition{}, r.x, r.y), P("1", r.ring));
  Rings s(1, 1);
  EXPECT_TRUE(enum_super(Partition({2, 2}), s.x, s.y).is_zero());
}

TEST(Tableaux, SuperZeroExactlyOutsideHook) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      Rings r(n, m);
      for (const auto& l : partitions_up_to(6, 6, 6)) {
        const bool outside = l.part(n + 1) > static_cast<int>(m);
        EXPECT_EQ(enum_super(l, r.x, r.y).is_zero(), outside) << l.to_string() << " n=" << n << " m=" << m;
      }
    }
  }
}

TEST(Tableaux, SymplecticExamples) {
  Rings r(1, 0);
  EXPECT_EQ(enum_symplectic(Partition({1}), r.x), P("x1 + x1^-1", r.ring));
  EXPECT_TRUE(enum_symplectic(Partition({1, 1}), r.x).is_zero());

  Rings r4(4, 0);
  auto a = Alphabet::symplectic(r4.x);
  // Codes: 1=0, 1b=1, 2=2, 2b=3, 3=4, 3b=5, 4=6, 4b=7.
  Tableau t{Partition({3, 2, 2}), Partition{}, {{0, 1, 2}, {3, 3}, {6, 7}}};
  EXPECT_EQ(validate(t, a), "");
  EXPECT_EQ(t.to_string(a), "[[1,1b,2],[2b,2b],[4,4b]]");
  EXPECT_EQ(LaurentPolynomial::monomial(r4.ring, t.weight(a)), P("x2^-1", r4.ring));
  Tableau bad{Partition({1, 1}), Partition{}, {{0}, {1}}};
  EXPECT_NE(validate(bad, a), "");  // row 2 needs an entry >= 2
}

TEST(Tableaux, OrthosymplecticExamples) {
  Rings r(1, 2);
  EXPECT_EQ(enum_orthosymplectic(Partition({2}), r.x, r.y),
            P("x1^2 + x1^-2 + 1 + x1*y1 + x1^-1*y1 + x1*y2 + x1^-1*y2 + y1*y2", r.ring));
  TableauEnumerator en(Alphabet::orthosymplectic(r.x, r.y), Partition({2}));
  EXPECT_EQ(en.count(), 8u);
  EXPECT_EQ(enum_orthosymplectic(Partition{}, r.x, r.y), P("1", r.ring));

  Rings r43(4, 3);
  auto a = Alphabet::orthosymplectic(r43.x, r43.y);
  // 1..4b = 0..7, 1p=8, 2p=9, 3p=10.
  Tableau t{Partition({3, 3, 2, 1}), Partition{}, {{1, 2, 10}, {3, 8, 10}, {6, 10}, {9}}};
  EXPECT_EQ(validate(t, a), "");
  EXPECT_EQ(t.to_string(a), "[[1b,2,3p],[2b,1p,3p],[4,3p],[2p]]");
  EXPECT_EQ(LaurentPolynomial::monomial(r43.ring, t.weight(a)), P("x1^-1*x4*y1*y2*y3^3", r43.ring));
  // Unprimed cells must form a Young diagram.
  Tableau hole{Partition({2}), Partition{}, {{8, 9}}};
  EXPECT_EQ(validate(hole, a), "");
  Tableau not_young{Partition({2}), Partition{}, {{8, 0}}};
  EXPECT_NE(validate(not_young, a), "");
  // Primed part: strict along rows, weak down columns.
  Tableau row_repeat{Partition({2}), Partition{}, {{8, 8}}};
  EXPECT_NE(validate(row_repeat, a), "");
  Tableau col_repeat{Partition({1, 1}), Partition{}, {{8}, {8}}};
  EXPECT_EQ(validate(col_repeat, a), "");
}

TEST(Tableaux, OddSymplecticExamples) {
  Rings r(2, 0);
  EXPECT_EQ(enum_odd_symplectic(Partition({2, 1}), r.x),
            P("x1^2*x2 + x2 + x1*x2^2 + x1^-2*x2 + x1^-1*x2^2", r.ring));
  EXPECT_EQ(enum_odd_symplectic(Partition{}, r.x), P("1", r.ring));
  Rings r1(1, 0);
  EXPECT_EQ(enum_odd_symplectic(Partition({1}), r1.x), P("x1", r1.ring));
  EXPECT_THROW(enum_odd_symplectic(Partition({1, 1}), r1.x), PreconditionError);
}

TEST(Tableaux, EnumeratorMatchesBruteForce) {
  Rings r(2, 2);
  const std::vector<Alphabet> alphabets{Alphabet::ssyt(r.x), Alphabet::super(r.x, r.y), Alphabet::symplectic(r.x),
                                        Alphabet::orthosymplectic(r.x, r.y), Alphabet::odd_symplectic(r.x)};
  for (const auto& a : alphabets) {
    for (const auto& l : partitions_up_to(5, 5, 5)) {
      if (a.family() == TableauFamily::OddSymplectic && l.length() > 2) continue;
      if (l.weight() == 5 && a.size() > 4) continue;  // keep 6^5 fillings out
      auto [count, sum] = brute_force(a, l);
      TableauEnumerator en(a, l);
      EXPECT_EQ(en.count(), count) << l.to_string();
      EXPECT_EQ(en.weight_sum(), sum) << l.to_string();
      en.for_each([&](const Tableau& t) { EXPECT_EQ(validate(t, a), "") << t.to_string(a); });
    }
  }
}

TEST(Tableaux, SkewEnumeration) {
  Rings r(3, 0);
  TableauEnumerator en(Alphabet::ssyt(r.x), Partition({2, 1}), Partition({1}));
  EXPECT_EQ(en.weight_sum(), skew_schur_jt(Partition({2, 1}), Partition({1}), r.x));
  en.for_each([&](const Tableau& t) { EXPECT_NE(t.to_string(en.alphabet()).find('.'), std::string::npos); });
}

TEST(Tableaux, SymplecticBarSymmetry) {
  for (std::size_t n = 1; n <= 3; ++n) {
    Rings r(n, 0);
    for (const auto& l : partitions_up_to(5, n, 5)) {
      auto s = enum_symplectic(l, r.x);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(substitute(s, r.x.idx[i], LaurentPolynomial::variable(r.ring, r.x.idx[i], -1)), s);
      }
    }
  }
}

TEST(Tableaux, OrthosymplecticWithoutYIsSymplectic) {
  for (std::size_t n = 1; n <= 3; ++n) {
    Rings r(n, 0);
    for (const auto& l : partitions_up_to(6, 6, 6)) {
      EXPECT_EQ(enum_orthosymplectic(l, r.x, r.y), enum_symplectic(l, r.x)) << l.to_string();
    }
  }
}

TEST(Tableaux, OrthosymplecticExpansion) {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      Rings r(n, m);
      for (const auto& l : partitions_up_to(6, 6, 6)) {
        LaurentPolynomial sum(r.ring);
        for (const auto& mu : subpartitions(l)) {
          if (mu.length() > n) continue;
          sum += enum_symplectic(mu, r.x) * skew_schur_jt(l.conjugate(), mu.conjugate(), r.y);
        }
        EXPECT_EQ(enum_orthosymplectic(l, r.x, r.y), sum) << l.to_string();
      }
    }
  }
}
