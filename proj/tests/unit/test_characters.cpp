#include <gtest/gtest.h>

#include <set>

#include "ospchar/algebra/errors.hpp"
#include "ospchar/algebra/matrix.hpp"
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

// Koike-Terada: sp_lambda = det(h_{l_i-i+j} + h_{l_i-i-j+2}) over X and X^-1,
// first column halved.
LaurentPolynomial sp_oracle(const Partition& l, const VarList& x) {
  const std::size_t size = l.length();
  PolyMatrix a(x.ring, size);
  for (std::size_t i = 1; i <= size; ++i) {
    for (std::size_t j = 1; j <= size; ++j) {
      const int r = l.part(i) - static_cast<int>(i);
      const int c = static_cast<int>(j);
      a(i - 1, j - 1) = j == 1 ? laurent_h(r + 1, x) : laurent_h(r + c, x) + laurent_h(r - c + 2, x);
    }
  }
  return det_cofactor(a);
}

// hs_lambda(X;Y) = sum_mu s_mu(X) s_{lambda'/mu'}(Y).
LaurentPolynomial hook_oracle(const Partition& l, const VarList& x, const VarList& y) {
  LaurentPolynomial sum(x.ring);
  for (const auto& mu : subpartitions(l)) {
    if (mu.length() > x.size()) continue;
    sum += enum_ssyt(mu, Partition{}, x) * enum_ssyt(l.conjugate(), mu.conjugate(), y);
  }
  return sum;
}

// Entries equal to the top letter form a horizontal strip lambda/mu; the rest
// is a symplectic tableau on the first n-1 letters.
LaurentPolynomial odd_oracle(const Partition& l, const VarList& x) {
  const std::size_t n = x.size();
  const auto lower = x.prefix(n - 1);
  LaurentPolynomial sum(x.ring);
  for (const auto& mu : subpartitions(l)) {
    if (mu.length() > n - 1) continue;
    bool strip = true;
    for (std::size_t i = 1; i <= l.length(); ++i)
      if (mu.part(i) < l.part(i + 1)) strip = false;
    if (!strip) continue;
    auto sp = n == 1 ? P("1", x.ring) : sp_oracle(mu, lower);
    sum += sp * LaurentPolynomial::variable(x.ring, x.idx[n - 1], l.weight() - mu.weight());
  }
  return sum;
}

CharacterRequest req(Family f, Method m, const Partition& l, int n, int mm = 0) { return {f, m, l, n, mm}; }

}  // namespace

TEST(Characters, NamesRoundTrip) {
  for (auto f : {Family::Schur, Family::Hook, Family::Symplectic, Family::Orthosymplectic, Family::OddSymplectic}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
    for (auto m : methods_for(f)) EXPECT_EQ(parse_method(method_name(m)), m);
  }
  EXPECT_FALSE(parse_family("spin").has_value());
  EXPECT_FALSE(parse_method("").has_value());
  EXPECT_EQ(parse_family("orthosymplectic"), Family::Orthosymplectic);
  EXPECT_EQ(parse_method("jt"), Method::JacobiTrudi);
}

TEST(Characters, OrthosymplecticExample) {
  const Partition l{2};
  const auto ring = request_ring(req(Family::Orthosymplectic, Method::Tableau, l, 1, 2));
  const auto expected = P("x1^2 + x1*y1 + x1*y2 + 1 + y1*y2 + x1^-1*y1 + x1^-1*y2 + x1^-2", ring);
  for (auto m : methods_for(Family::Orthosymplectic)) {
    if (m == Method::SingleY) continue;
    EXPECT_EQ(compute(req(Family::Orthosymplectic, m, l, 1, 2)), expected) << method_name(m);
  }
}

TEST(Characters, HookAndOddExamples) {
  const Partition l{2, 1};
  for (auto m : methods_for(Family::Hook)) {
    auto r = req(Family::Hook, m, l, 2, 1);
    EXPECT_EQ(compute(r), P("x1^2*x2 + x1*x2^2 + x1^2*y1 + 2*x1*x2*y1 + x2^2*y1 + x1*y1^2 + x2*y1^2",
                            request_ring(r)))
        << method_name(m);
  }
  for (auto m : methods_for(Family::OddSymplectic)) {
    auto r = req(Family::OddSymplectic, m, l, 2);
    EXPECT_EQ(compute(r), P("x1^2*x2 + x1*x2^2 + x2 + x1^-1*x2^2 + x1^-2*x2", request_ring(r))) << method_name(m);
  }
}

TEST(Characters, EmptyPartitionIsOne) {
  for (auto f : {Family::Schur, Family::Hook, Family::Symplectic, Family::Orthosymplectic, Family::OddSymplectic}) {
    for (auto m : methods_for(f)) {
      auto r = req(f, m, Partition{}, 2, f == Family::Hook || f == Family::Orthosymplectic ? 1 : 0);
      EXPECT_EQ(compute(r), P("1", request_ring(r))) << family_name(f) << " " << method_name(m);
    }
  }
}

TEST(Characters, PreconditionErrors) {
  EXPECT_THROW(validate(req(Family::Schur, Method::Okada, Partition{1}, 2)), PreconditionError);
  EXPECT_THROW(validate(req(Family::Schur, Method::Tableau, Partition{1, 1, 1}, 2)), PreconditionError);
  EXPECT_THROW(validate(req(Family::Symplectic, Method::Weyl, Partition{1, 1, 1}, 2)), PreconditionError);
  EXPECT_THROW(validate(req(Family::OddSymplectic, Method::Okada, Partition{}, 0)), PreconditionError);
  EXPECT_THROW(validate(req(Family::Hook, Method::Det, Partition{2, 2}, 1, 1)), PreconditionError);
  EXPECT_THROW(validate(req(Family::Orthosymplectic, Method::JacobiTrudi, Partition{1, 1}, 1, 2)),
               PreconditionError);
  EXPECT_THROW(validate(req(Family::Orthosymplectic, Method::SingleY, Partition{1}, 1, 2)), PreconditionError);
  EXPECT_THROW(validate(req(Family::Orthosymplectic, Method::SingleY, Partition{2, 2}, 1, 1)), PreconditionError);
  EXPECT_THROW(validate(req(Family::Schur, Method::Tableau, Partition{1}, 17)), PreconditionError);
  EXPECT_THROW(validate(req(Family::Hook, Method::Tableau, Partition{1}, 9, 8)), PreconditionError);
  EXPECT_NO_THROW(validate(req(Family::Orthosymplectic, Method::Tableau, Partition{1, 1, 1}, 1, 2)));
  EXPECT_NO_THROW(validate(req(Family::Orthosymplectic, Method::SingleY, Partition{2, 1, 1}, 1, 1)));
}

TEST(Characters, SymplecticMatchesKoikeTerada) {
  for (std::size_t n = 1; n <= 3; ++n) {
    Rings r(n, 0);
    for (const auto& l : partitions_up_to(6, n, 6)) {
      const auto oracle = sp_oracle(l, r.x);
      EXPECT_EQ(symplectic_weyl(l, r.x), oracle) << l.to_string();
      EXPECT_EQ(enum_symplectic(l, r.x), oracle) << l.to_string();
    }
  }
}

TEST(Characters, HookMatchesSchurExpansion) {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      Rings r(n, m);
      for (const auto& l : partitions_up_to(5, 5, 5)) {
        const auto oracle = hook_oracle(l, r.x, r.y);
        EXPECT_EQ(hook_schur_jt(l, r.x, r.y), oracle) << l.to_string();
        if (l.part(n + 1) <= static_cast<int>(m)) EXPECT_EQ(hook_schur_det(l, r.x, r.y), oracle) << l.to_string();
      }
    }
  }
}

TEST(Characters, OddSymplecticMatchesBranching) {
  for (std::size_t n = 1; n <= 3; ++n) {
    Rings r(n, 0);
    for (const auto& l : partitions_up_to(6, n, 6)) {
      const auto oracle = odd_oracle(l, r.x);
      EXPECT_EQ(odd_symplectic_okada(l, r.x), oracle) << l.to_string();
      EXPECT_EQ(enum_odd_symplectic(l, r.x), oracle) << l.to_string();
    }
  }
}

TEST(Characters, SchurBialternant) {
  for (std::size_t n = 1; n <= 3; ++n) {
    Rings r(n, 0);
    for (const auto& l : partitions_up_to(6, n, 6))
      EXPECT_EQ(schur_bialternant(l, r.x), enum_ssyt(l, Partition{}, r.x)) << l.to_string();
  }
}

TEST(Characters, OrthosymplecticFormulasAgreeAcrossKIndex) {
  std::set<int> ks;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      if (n * m > 4) continue;
      Rings r(n, m);
      for (const auto& l : partitions_up_to(5, n, 5)) {
        ks.insert(k_index(l, static_cast<int>(n), static_cast<int>(m)));
        const auto oracle = ortho_sp_schur_sum(l, r.x, r.y);
        EXPECT_EQ(enum_orthosymplectic(l, r.x, r.y), oracle) << l.to_string();
        EXPECT_EQ(ortho_jt(l, r.x, r.y), oracle) << l.to_string();
        EXPECT_EQ(ortho_det_main(l, r.x, r.y), oracle) << l.to_string() << " n=" << n << " m=" << m;
        EXPECT_EQ(ortho_det_equiv(l, r.x, r.y), oracle) << l.to_string() << " n=" << n << " m=" << m;
      }
    }
  }
  // Every row split of the block determinant is exercised.
  EXPECT_EQ(ks, (std::set<int>{1, 2, 3, 4}));
}

TEST(Characters, OrthosymplecticSingleY) {
  for (std::size_t n = 1; n <= 3; ++n) {
    Rings r(n, 1);
    for (const auto& l : partitions_up_to(6, 6, 6)) {
      if (l.part(n + 1) > 1) continue;
      auto got = l.length() <= n ? ortho_single_y(l, r.x, r.y.idx[0]) : ortho_single_y_long(l, r.x, r.y.idx[0]);
      EXPECT_EQ(got, enum_orthosymplectic(l, r.x, r.y)) << l.to_string();
    }
  }
}

TEST(Characters, OrthosymplecticWithEmptyYIsSymplectic) {
  Rings r(2, 0);
  for (const auto& l : partitions_up_to(5, 2, 5)) EXPECT_EQ(ortho_det_main(l, r.x, r.y), sp_oracle(l, r.x));
}

TEST(Characters, Denominators) {
  for (std::size_t n = 1; n <= 4; ++n) {
    Rings r(n, 0);
    auto prod = P("1", r.ring);
    for (const auto& f : symplectic_denominator_factors(r.x)) prod *= f;
    EXPECT_EQ(symplectic_denominator_alternant(r.x), prod) << n;
    auto okada = P("1", r.ring);
    for (const auto& f : okada_denominator_factors(r.x)) okada *= f;
    EXPECT_EQ(okada_denominator_determinant(r.x), okada) << n;
  }
}

TEST(Characters, HookSupersymmetry) {
  // Setting y1 = -x1 removes both letters.
  Rings r(2, 2);
  auto minus_x1 = -LaurentPolynomial::variable(r.ring, r.x.idx[0]);
  for (const auto& l : partitions_up_to(5, 5, 5)) {
    auto full = substitute(hook_schur_jt(l, r.x, r.y), r.y.idx[0], minus_x1);
    auto reduced = hook_schur_jt(l, r.x.drop_front(1), r.y.drop_front(1));
    EXPECT_EQ(full, reduced) << l.to_string();
  }
}
