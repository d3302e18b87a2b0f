#include "ospchar/characters/characters.hpp"

#include <algorithm>
#include <array>

#include "ospchar/algebra/errors.hpp"
#include "ospchar/algebra/matrix.hpp"
#include "ospchar/algebra/rational.hpp"
#include "ospchar/symfun/generators.hpp"
#include "ospchar/tableaux/tableaux.hpp"

namespace ospchar {
namespace {

using Poly = LaurentPolynomial;

Poly var(const VarList& v, std::size_t i, int e = 1) { return Poly::variable(v.ring, v.idx[i], e); }

Poly one(const VarSetPtr& ring) { return Poly::constant(ring, 1); }

// x_i^e - x_i^{-e}
Poly phi(const VarList& x, std::size_t i, int e) { return var(x, i, e) - var(x, i, -e); }

int ipart(const Partition& p, int i) { return p.part(static_cast<std::size_t>(i)); }

Poly divide_by_factors(Poly p, const std::vector<Poly>& factors) {
  for (const auto& f : factors) p = exact_div(p, f);
  return p;
}

std::vector<Poly> vandermonde_factors(const VarList& v) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) out.push_back(var(v, i) - var(v, j));
  return out;
}

void require_length(const Partition& lambda, std::size_t n, const char* what) {
  if (lambda.length() > n) {
    throw PreconditionError(std::string(what) + " requires l(lambda) <= n: lambda=(" + lambda.to_string() +
                            "), n=" + std::to_string(n));
  }
}

void require_same_ring(const VarList& x, const VarList& y) {
  if (!same_variables(x.ring, y.ring)) throw RingMismatch("alphabets X and Y live in different rings");
}

Poly signed_value(Poly p, bool negate) { return negate ? -p : p; }

}  // namespace

LaurentPolynomial schur_bialternant(const Partition& lambda, const VarList& x) {
  require_length(lambda, x.size(), "bialternant");
  const int n = static_cast<int>(x.size());
  PolyMatrix num(x.ring, x.size());
  PolyMatrix den(x.ring, x.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= n; ++j) {
      num(i, j - 1) = var(x, i, ipart(lambda, j) + n - j);
      den(i, j - 1) = var(x, i, n - j);
    }
  }
  return exact_div(det(num), det(den));
}

LaurentPolynomial hook_schur_jt(const Partition& lambda, const VarList& x, const VarList& y) {
  require_same_ring(x, y);
  const std::size_t size = std::max<std::size_t>(lambda.length(), 1);
  auto H = super_H_series(lambda.part(1) + static_cast<int>(size), x, y);
  PolyMatrix m(x.ring, size);
  for (std::size_t i = 1; i <= size; ++i)
    for (std::size_t j = 1; j <= size; ++j)
      m(i - 1, j - 1) = H[lambda.part(i) - static_cast<int>(i) + static_cast<int>(j)];
  return det(m);
}

LaurentPolynomial hook_schur_det(const Partition& lambda, const VarList& x, const VarList& y) {
  require_same_ring(x, y);
  const int n = static_cast<int>(x.size());
  const int m = static_cast<int>(y.size());
  if (ipart(lambda, n + 1) > m) {
    throw PreconditionError("hook determinant requires lambda_{n+1} <= m: lambda=(" + lambda.to_string() + ")");
  }
  const int k = k_index(lambda, n, m);
  const int extra_rows = m - n + k - 1;
  if (extra_rows < 0) throw PreconditionError("hook determinant: shape outside the (n,m)-hook");
  const auto size = static_cast<std::size_t>(m + k - 1);
  const auto conj = lambda.conjugate();
  RationalMatrix a(x.ring, size);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const std::array<Poly, 1> den{var(x, i) + var(y, j)};
      a(i, j) = RationalFunction(one(x.ring), den);
    }
    for (int j = 1; j <= k - 1; ++j) a(i, m + j - 1) = var(x, i, ipart(lambda, j) + n - m - j);
  }
  for (int i = 1; i <= extra_rows; ++i) {
    for (int j = 0; j < m; ++j) a(n + i - 1, j) = var(y, j, ipart(conj, i) + m - n - i);
  }
  std::vector<Poly> cauchy;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) cauchy.push_back(var(x, i) + var(y, j));
  auto vdm = vandermonde_factors(x);
  auto vy = vandermonde_factors(y);
  vdm.insert(vdm.end(), vy.begin(), vy.end());
  const bool negate = ((m * n - n + k - 1) % 2 + 2) % 2 == 1;
  return signed_value(det(a).to_laurent_scaled(cauchy, vdm), negate);
}

std::vector<LaurentPolynomial> symplectic_denominator_factors(const VarList& x) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(phi(x, i, 1));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      out.push_back(var(x, i) + var(x, i, -1) - var(x, j) - var(x, j, -1));
  return out;
}

LaurentPolynomial symplectic_denominator_alternant(const VarList& x) {
  const int n = static_cast<int>(x.size());
  PolyMatrix a(x.ring, x.size());
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) a(i, j - 1) = phi(x, i, n - j + 1);
  return det(a);
}

LaurentPolynomial symplectic_weyl(const Partition& lambda, const VarList& x) {
  require_length(lambda, x.size(), "symplectic Weyl quotient");
  const int n = static_cast<int>(x.size());
  PolyMatrix a(x.ring, x.size());
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) a(i, j - 1) = phi(x, i, ipart(lambda, j) + n - j + 1);
  const auto factors = symplectic_denominator_factors(x);
  if (symplectic_denominator_alternant(x) != product(x.ring, factors)) {
    throw InvariantBreach("symplectic denominator alternant differs from its product formula");
  }
  return divide_by_factors(det(a), factors);
}

LaurentPolynomial ortho_jt(const Partition& lambda, const VarList& x, const VarList& y) {
  require_same_ring(x, y);
  require_length(lambda, x.size(), "orthosymplectic Jacobi-Trudi");
  const int n = static_cast<int>(x.size());
  if (n == 0) return one(x.ring);
  auto Js = J_series(lambda.part(1) + n, x, y);
  PolyMatrix a(x.ring, x.size());
  for (int i = 1; i <= n; ++i) {
    const int base = ipart(lambda, i) - i;
    a(i - 1, 0) = Js[base + 1];
    for (int j = 2; j <= n; ++j) a(i - 1, j - 1) = Js[base + j] + Js[base - j + 2];
  }
  return det(a);
}

LaurentPolynomial ortho_det_main(const Partition& lambda, const VarList& x, const VarList& y) {
  require_same_ring(x, y);
  require_length(lambda, x.size(), "orthosymplectic determinant");
  if (y.size() == 0) return symplectic_weyl(lambda, x);
  if (x.size() == 0) throw PreconditionError("orthosymplectic determinant requires n >= 1");
  const int n = static_cast<int>(x.size());
  const int m = static_cast<int>(y.size());
  const int k = k_index(lambda, n, m);
  const int extra_rows = m - n + k - 1;
  if (extra_rows < 0) throw PreconditionError("orthosymplectic determinant: inconsistent block sizes");
  const auto size = static_cast<std::size_t>(m + k - 1);
  const auto conj = lambda.conjugate();

  std::vector<std::vector<Poly>> plus(x.size()), minus(x.size());
  for (int i = 0; i < n; ++i) {
    for (int q = 0; q < m; ++q) {
      plus[i].push_back(var(x, i) + var(y, q));
      minus[i].push_back(var(x, i, -1) + var(y, q));
    }
  }

  RationalMatrix a(x.ring, size);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      auto d1 = minus[i];
      d1.push_back(plus[i][j]);
      auto d2 = plus[i];
      d2.push_back(minus[i][j]);
      a(i, j) = RationalFunction(var(x, i), d1) - RationalFunction(var(x, i, -1), d2);
    }
    for (int j = 1; j <= k - 1; ++j) {
      const int e = ipart(lambda, j) + n - m - j + 1;
      a(i, m + j - 1) = RationalFunction(var(x, i, e), minus[i]) - RationalFunction(var(x, i, -e), plus[i]);
    }
  }
  for (int i = 1; i <= extra_rows; ++i)
    for (int j = 0; j < m; ++j) a(n + i - 1, j) = var(y, j, ipart(conj, i) + m - n - i);

  std::vector<Poly> mul;
  for (int i = 0; i < n; ++i) {
    mul.insert(mul.end(), plus[i].begin(), plus[i].end());
    mul.insert(mul.end(), minus[i].begin(), minus[i].end());
  }
  auto div = symplectic_denominator_factors(x);
  auto vy = vandermonde_factors(y);
  div.insert(div.end(), vy.begin(), vy.end());
  const bool negate = ((m * n - n + k - 1) % 2 + 2) % 2 == 1;
  return signed_value(det(a).to_laurent_scaled(mul, div), negate);
}

LaurentPolynomial ortho_det_equiv(const Partition& lambda, const VarList& x, const VarList& y) {
  require_same_ring(x, y);
  require_length(lambda, x.size(), "orthosymplectic determinant");
  if (x.size() == 0) throw PreconditionError("orthosymplectic determinant requires n >= 1");
  const int n = static_cast<int>(x.size());
  const int m = static_cast<int>(y.size());
  const int k = k_index(lambda, n, m);
  const int extra_rows = m - n + k - 1;
  if (extra_rows < 0) throw PreconditionError("orthosymplectic determinant: inconsistent block sizes");
  const auto size = static_cast<std::size_t>(m + k - 1);
  const auto conj = lambda.conjugate();

  PolyMatrix a(x.ring, size);
  for (int i = 0; i < n; ++i) {
    Poly pp = one(x.ring), pm = one(x.ring);
    for (int q = 0; q < m; ++q) {
      pp *= var(x, i) + var(y, q);
      pm *= var(x, i, -1) + var(y, q);
    }
    for (int j = 1; j <= m; ++j) a(i, j - 1) = signed_value(phi(x, i, j), (m - j) % 2 == 1);
    for (int j = 1; j <= k - 1; ++j) {
      const int e = ipart(lambda, j) + n - m - j + 1;
      a(i, m + j - 1) = var(x, i, e) * pp - var(x, i, -e) * pm;
    }
  }
  if (extra_rows > 0) {
    auto h = complete_series(conj.part(1) + m, y);
    for (int i = 1; i <= extra_rows; ++i)
      for (int j = 1; j <= m; ++j) a(n + i - 1, j - 1) = h[ipart(conj, i) - n - i + j];
  }
  const bool negate = ((m * n - n + k - 1) % 2 + 2) % 2 == 1;
  return signed_value(divide_by_factors(det(a), symplectic_denominator_factors(x)), negate);
}

LaurentPolynomial ortho_single_y(const Partition& lambda, const VarList& x, std::size_t y) {
  require_length(lambda, x.size(), "one-letter determinant");
  const int n = static_cast<int>(x.size());
  const auto yv = Poly::variable(x.ring, y);
  PolyMatrix a(x.ring, x.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int e = ipart(lambda, j) + n - j;
      a(i, j - 1) = phi(x, i, e + 1) + yv * phi(x, i, e);
    }
  }
  return divide_by_factors(det(a), symplectic_denominator_factors(x));
}

LaurentPolynomial ortho_single_y_long(const Partition& lambda, const VarList& x, std::size_t y) {
  const auto n = x.size();
  if (lambda.length() <= n) return ortho_single_y(lambda, x, y);
  if (lambda.part(n + 1) > 1) {
    throw PreconditionError("one-letter Y requires lambda_{n+1} <= 1: lambda=(" + lambda.to_string() + ")");
  }
  std::vector<int> head(lambda.parts().begin(), lambda.parts().begin() + static_cast<std::ptrdiff_t>(n));
  const auto extra = static_cast<int>(lambda.length() - n);
  return Poly::variable(x.ring, y, extra) * ortho_single_y(Partition(head), x, y);
}

std::vector<LaurentPolynomial> okada_denominator_factors(const VarList& x) {
  std::vector<Poly> out;
  const auto n = x.size();
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(phi(x, i, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(var(x, i) + var(x, i, -1) - var(x, j) - var(x, j, -1));
  return out;
}

namespace {

PolyMatrix okada_matrix(const Partition& lambda, const VarList& x) {
  const int n = static_cast<int>(x.size());
  const auto yinv = var(x, x.size() - 1, -1);
  PolyMatrix a(x.ring, x.size());
  for (int j = 1; j <= n; ++j) {
    const int e = ipart(lambda, j) + n - j;
    for (int i = 0; i + 1 < n; ++i) a(i, j - 1) = phi(x, i, e + 1) - yinv * phi(x, i, e);
    a(n - 1, j - 1) = var(x, x.size() - 1, e);
  }
  return a;
}

}  // namespace

LaurentPolynomial okada_denominator_determinant(const VarList& x) {
  if (x.size() == 0) throw PreconditionError("odd symplectic characters require n >= 1");
  return det(okada_matrix(Partition{}, x));
}

LaurentPolynomial odd_symplectic_okada(const Partition& lambda, const VarList& x) {
  if (x.size() == 0) throw PreconditionError("odd symplectic characters require n >= 1");
  require_length(lambda, x.size(), "Okada determinant");
  const auto factors = okada_denominator_factors(x);
  if (okada_denominator_determinant(x) != product(x.ring, factors)) {
    throw InvariantBreach("det A_empty differs from its product formula");
  }
  return divide_by_factors(det(okada_matrix(lambda, x)), factors);
}

LaurentPolynomial ortho_sp_schur_sum(const Partition& lambda, const VarList& x, const VarList& y) {
  require_same_ring(x, y);
  const auto conj = lambda.conjugate();
  Poly acc(x.ring);
  for (const auto& mu : subpartitions(lambda)) {
    if (mu.length() > x.size()) continue;
    auto s = skew_schur_jt(conj, mu.conjugate(), y);
    if (s.is_zero()) continue;
    acc += symplectic_weyl(mu, x) * s;
  }
  return acc;
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 5> kFamilies{{
    {Family::Schur, "schur"},
    {Family::Hook, "hook"},
    {Family::Symplectic, "symplectic"},
    {Family::Orthosymplectic, "orthosymplectic"},
    {Family::OddSymplectic, "odd_symplectic"},
}};

constexpr std::array<std::pair<Method, std::string_view>, 8> kMethods{{
    {Method::Tableau, "tableau"},
    {Method::JacobiTrudi, "jt"},
    {Method::Det, "det"},
    {Method::DetEquiv, "det_equiv"},
    {Method::Weyl, "weyl"},
    {Method::Okada, "okada"},
    {Method::SpSchurSum, "sp_schur_sum"},
    {Method::SingleY, "single_y"},
}};

bool has_y(Family f) { return f == Family::Hook || f == Family::Orthosymplectic; }

}  // namespace

std::optional<Family> parse_family(std::string_view s) {
  for (const auto& [f, name] : kFamilies)
    if (name == s) return f;
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view s) {
  for (const auto& [m, name] : kMethods)
    if (name == s) return m;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  for (const auto& [g, name] : kFamilies)
    if (g == f) return name;
  return "?";
}

std::string_view method_name(Method m) {
  for (const auto& [g, name] : kMethods)
    if (g == m) return name;
  return "?";
}

std::vector<Method> methods_for(Family family) {
  switch (family) {
    case Family::Schur:
      return {Method::Tableau, Method::JacobiTrudi, Method::Weyl};
    case Family::Hook:
      return {Method::Tableau, Method::JacobiTrudi, Method::Det};
    case Family::Symplectic:
      return {Method::Tableau, Method::Weyl};
    case Family::Orthosymplectic:
      return {Method::Tableau, Method::JacobiTrudi, Method::Det, Method::DetEquiv, Method::SpSchurSum,
              Method::SingleY};
    case Family::OddSymplectic:
      return {Method::Tableau, Method::Okada};
  }
  return {};
}

void validate(const CharacterRequest& req) {
  const auto methods = methods_for(req.family);
  if (std::find(methods.begin(), methods.end(), req.method) == methods.end()) {
    throw PreconditionError("method '" + std::string(method_name(req.method)) + "' is not available for family '" +
                            std::string(family_name(req.family)) + "'");
  }
  if (req.n < 0 || req.m < 0) throw PreconditionError("n and m must be non-negative");
  const auto total = static_cast<std::size_t>(req.n) + (has_y(req.family) ? static_cast<std::size_t>(req.m) : 0);
  if (total > kMaxVariables) {
    throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  const auto n = static_cast<std::size_t>(req.n);
  const auto& lambda = req.lambda;
  switch (req.family) {
    case Family::Schur:
    case Family::Symplectic:
      require_length(lambda, n, family_name(req.family) == "schur" ? "Schur polynomial" : "symplectic character");
      break;
    case Family::OddSymplectic:
      if (n == 0) throw PreconditionError("odd symplectic characters require n >= 1");
      require_length(lambda, n, "odd symplectic character");
      break;
    case Family::Hook:
      if (lambda.part(n + 1) > req.m) {
        throw PreconditionError("lambda must lie in the (n,m)-hook: lambda_{n+1} <= m");
      }
      break;
    case Family::Orthosymplectic:
      if (req.method == Method::Tableau || req.method == Method::SpSchurSum) break;
      if (req.method == Method::SingleY) {
        if (req.m != 1) throw PreconditionError("method 'single_y' requires m = 1");
        if (lambda.part(n + 1) > 1) throw PreconditionError("method 'single_y' requires lambda_{n+1} <= 1");
        break;
      }
      if (n == 0) throw PreconditionError("this method requires n >= 1");
      require_length(lambda, n, "orthosymplectic determinant formulas");
      break;
  }
}

VarSetPtr request_ring(const CharacterRequest& req) {
  return standard_ring(static_cast<std::size_t>(req.n), has_y(req.family) ? static_cast<std::size_t>(req.m) : 0);
}

LaurentPolynomial compute(const CharacterRequest& req) {
  validate(req);
  auto ring = request_ring(req);
  auto x = named_block(ring, "x", static_cast<std::size_t>(req.n));
  VarList y{ring, {}};
  if (has_y(req.family)) y = named_block(ring, "y", static_cast<std::size_t>(req.m));
  const auto& l = req.lambda;
  switch (req.family) {
    case Family::Schur:
      switch (req.method) {
        case Method::Tableau: return enum_ssyt(l, Partition{}, x);
        case Method::JacobiTrudi: return skew_schur_jt(l, Partition{}, x);
        default: return schur_bialternant(l, x);
      }
    case Family::Hook:
      switch (req.method) {
        case Method::Tableau: return enum_super(l, x, y);
        case Method::JacobiTrudi: return hook_schur_jt(l, x, y);
        default: return hook_schur_det(l, x, y);
      }
    case Family::Symplectic:
      return req.method == Method::Tableau ? enum_symplectic(l, x) : symplectic_weyl(l, x);
    case Family::Orthosymplectic:
      switch (req.method) {
        case Method::Tableau: return enum_orthosymplectic(l, x, y);
        case Method::JacobiTrudi: return ortho_jt(l, x, y);
        case Method::Det: return ortho_det_main(l, x, y);
        case Method::DetEquiv: return ortho_det_equiv(l, x, y);
        case Method::SpSchurSum: return ortho_sp_schur_sum(l, x, y);
        default: return ortho_single_y_long(l, x, y.idx[0]);
      }
    case Family::OddSymplectic:
      return req.method == Method::Tableau ? enum_odd_symplectic(l, x) : odd_symplectic_okada(l, x);
  }
  throw PreconditionError("unknown family");
}

}  // namespace ospchar
