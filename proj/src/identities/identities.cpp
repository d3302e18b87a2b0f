#include "ospchar/identities/identities.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <set>
#include <thread>

#include "ospchar/algebra/errors.hpp"
#include "ospchar/algebra/format.hpp"
#include "ospchar/algebra/matrix.hpp"
#include "ospchar/symfun/generators.hpp"
#include "ospchar/tableaux/tableaux.hpp"

namespace ospchar {
namespace {

using Poly = LaurentPolynomial;
using ojson = nlohmann::ordered_json;

Poly var(const VarList& v, std::size_t i, int e = 1) { return Poly::variable(v.ring, v.idx[i], e); }

Poly zeta(const VarList& x, std::size_t j, int p) { return var(x, j, p) - var(x, j, -p); }

std::string term_name(const Monomial& m, const VariableSet& vars) {
  auto s = monomial_to_string(m, vars);
  return s.empty() ? "1" : s;
}

// x_1^e ... x_k^e for the variables of `v`.
Monomial uniform_power(const VarList& v, int e) {
  Monomial m;
  for (auto i : v.idx) m.set(i, e);
  return m;
}

VarList single(const VarSetPtr& ring, std::string_view name) { return VarList{ring, {ring->require(name)}}; }

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

}  // namespace

std::string first_difference(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  const auto ta = a.terms();
  const auto tb = b.terms();
  const auto& vars = a.vars() ? *a.vars() : *b.vars();
  std::size_t i = 0, j = 0;
  auto describe = [&](const Monomial& m, const Integer& l, const Integer& r) {
    return term_name(m, vars) + ": left " + l.str() + ", right " + r.str();
  };
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && TermOrder{}(ta[i].monomial, tb[j].monomial))) {
      return describe(ta[i].monomial, ta[i].coeff, 0);
    }
    if (i == ta.size() || TermOrder{}(tb[j].monomial, ta[i].monomial)) {
      return describe(tb[j].monomial, 0, tb[j].coeff);
    }
    if (ta[i].coeff != tb[j].coeff) return describe(ta[i].monomial, ta[i].coeff, tb[j].coeff);
    ++i;
    ++j;
  }
  return {};
}

VerificationReport compare(std::string identity, ojson params, const LaurentPolynomial& left,
                           const LaurentPolynomial& right, std::string note) {
  VerificationReport r{std::move(identity), std::move(params), Status::Pass, std::nullopt, std::move(note)};
  if (!(left == right)) {
    r.status = Status::Fail;
    r.witness = Witness{left.to_string(), right.to_string(), first_difference(left, right)};
  }
  return r;
}

VerificationReport compare(std::string identity, ojson params, const RationalFunction& left,
                           const RationalFunction& right, std::string note) {
  VerificationReport r{std::move(identity), std::move(params), Status::Pass, std::nullopt, std::move(note)};
  if (!(left == right)) {
    r.status = Status::Fail;
    const auto l = left.num() * right.den();
    const auto rr = right.num() * left.den();
    r.witness = Witness{left.to_string(), right.to_string(), "cross-multiplied " + first_difference(l, rr)};
  }
  return r;
}

VerificationReport verify_supersymmetry(const Partition& lambda, int n, int m) {
  require(n >= 1 && m >= 1, "supersymmetry check requires n, m >= 1");
  auto ring = standard_ring(static_cast<std::size_t>(n), static_cast<std::size_t>(m), {"t"});
  auto x = named_block(ring, "x", static_cast<std::size_t>(n));
  auto y = named_block(ring, "y", static_cast<std::size_t>(m));
  const auto t = ring->require("t");
  auto p = hook_schur_jt(lambda, x, y);
  p = substitute(p, x.idx.back(), Poly::variable(ring, t));
  p = substitute(p, y.idx.back(), -Poly::variable(ring, t));
  auto t_free = substitute(p, t, Poly(ring));
  return compare("supersymmetry", ojson{{"lambda", lambda.to_string()}, {"n", n}, {"m", m}}, p, t_free,
                 "right side is the t = 0 part of the left side");
}

VerificationReport verify_lemma_evaluation(int n, int l) {
  require(n >= 1 && l >= 0, "evaluation lemma requires n >= 1, l >= 0");
  auto ring = standard_ring(static_cast<std::size_t>(n), 0);
  auto x = named_block(ring, "x", static_cast<std::size_t>(n));
  auto hbar = laurent_h_series(std::max(l, 0), x);
  auto both = letters_with_inverses(x);
  auto e = elementary_upto(n, both, ring);
  std::vector<Poly> row;
  row.push_back(hbar[l - n]);
  for (int c = 2; c <= n; ++c) row.push_back(hbar[l - n - 1 + c] + hbar[l - n + 1 - c]);
  // row * ((-1)^{v-u} e_{v-u})
  std::vector<Poly> rowm(static_cast<std::size_t>(n), Poly(ring));
  for (int u = 1; u <= n; ++u) {
    for (int v = u; v <= n; ++v) {
      auto entry = e[static_cast<std::size_t>(v - u)];
      if ((v - u) % 2 == 1) entry = -entry;
      rowm[v - 1] += row[u - 1] * entry;
    }
  }
  ojson params{{"n", n}, {"l", l}};
  for (int j = 0; j < n; ++j) {
    Poly value(ring);
    for (int v = 1; v <= n; ++v) value += rowm[v - 1] * zeta(x, static_cast<std::size_t>(j), n + 1 - v);
    auto r = compare("lemma-evaluation", params, value, zeta(x, static_cast<std::size_t>(j), l));
    if (!r.passed()) {
      r.note = "column j=" + std::to_string(j + 1);
      return r;
    }
  }
  return compare("lemma-evaluation", params, Poly(ring), Poly(ring));
}

VerificationReport verify_lemma_separate(const Partition& lambda, int n1, int n2) {
  require(n1 >= 0 && n2 >= 0, "set partition lemma requires n1, n2 >= 0");
  require(lambda.length() <= static_cast<std::size_t>(n1) && lambda.part(1) <= n2,
          "set partition lemma requires l(lambda) <= n1 and lambda_1 <= n2");
  const auto conj = lambda.conjugate();
  std::vector<int> all;
  for (int i = 1; i <= n1; ++i) all.push_back(lambda.part(static_cast<std::size_t>(i)) + n1 - i);
  for (int j = 1; j <= n2; ++j) all.push_back(n1 - 1 + j - conj.part(static_cast<std::size_t>(j)));
  std::sort(all.begin(), all.end());
  std::vector<int> expected(static_cast<std::size_t>(n1 + n2));
  for (int i = 0; i < n1 + n2; ++i) expected[static_cast<std::size_t>(i)] = i;

  auto join = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  VerificationReport r{"lemma-separate", ojson{{"lambda", lambda.to_string()}, {"n1", n1}, {"n2", n2}}, Status::Pass, std::nullopt, {}};
  if (all != expected) {
    r.status = Status::Fail;
    std::string diff;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i] != expected[i]) {
        diff = "position " + std::to_string(i) + ": left " + std::to_string(all[i]) + ", right " +
               std::to_string(expected[i]);
        break;
      }
    }
    r.witness = Witness{join(all), join(expected), diff};
  }
  return r;
}

VerificationReport verify_cauchy_binet(int m, int n, std::uint64_t seed, bool symbolic) {
  require(m >= 1 && m <= n, "Cauchy-Binet requires 1 <= m <= n");
  require(n <= 12, "Cauchy-Binet check limited to n <= 12");
  std::vector<std::string> names;
  if (symbolic) {
    require(2 * m * n <= static_cast<int>(kMaxVariables), "symbolic Cauchy-Binet needs 2mn <= 16 variables");
    for (char c : {'a', 'b'})
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) names.push_back(std::string(1, c) + std::to_string(i) + "_" + std::to_string(j));
  }
  auto ring = VariableSet::make(names);
  std::mt19937_64 rng(seed);
  auto entry = [&](char c, int i, int j) {
    if (symbolic) return Poly::variable(ring, ring->require(std::string(1, c) + std::to_string(i + 1) + "_" +
                                                            std::to_string(j + 1)));
    return Poly::constant(ring, static_cast<int>(rng() % 19) - 9);
  };
  std::vector<std::vector<Poly>> X(m), Y(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) X[i].push_back(entry('a', i, j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) Y[i].push_back(entry('b', i, j));

  Poly lhs(ring);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != m) continue;
    std::vector<int> cols;
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) cols.push_back(j);
    PolyMatrix xb(ring, static_cast<std::size_t>(m)), yb(ring, static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) {
        xb(i, k) = X[i][cols[k]];
        yb(i, k) = Y[i][cols[k]];
      }
    }
    lhs += det(xb) * det(yb);
  }
  PolyMatrix prod(ring, static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      Poly s(ring);
      for (int j = 0; j < n; ++j) s += X[i][j] * Y[k][j];
      prod(i, k) = s;
    }
  }
  ojson params{{"m", m}, {"n", n}, {"mode", symbolic ? "symbolic" : "integer"}};
  if (!symbolic) params["seed"] = seed;
  return compare("cauchy-binet", params, lhs, det(prod));
}

VerificationReport verify_lemma_ind(const Partition& lambda, int n, int r, IndVariant variant) {
  require(n >= 1 && r >= 0, "specialization lemma requires n >= 1, r >= 0");
  require(lambda.length() <= static_cast<std::size_t>(n) && lambda.part(1) <= r,
          "specialization lemma requires l(lambda) <= n and lambda_1 <= r");
  const bool spo = variant == IndVariant::Spo;
  auto ring = spo ? standard_ring(static_cast<std::size_t>(n), 0, {"z"}) : standard_ring(static_cast<std::size_t>(n), 0);
  auto x = named_block(ring, "x", static_cast<std::size_t>(n));
  auto character = [&](const Partition& mu, const VarList& v) {
    return spo ? ortho_single_y(mu, v, ring->require("z")) : symplectic_weyl(mu, v);
  };
  ojson params{{"lambda", lambda.to_string()}, {"n", n}, {"r", r}, {"variant", spo ? "spo" : "sp"}};
  auto f = character(lambda, x).shifted(uniform_power(x, r));
  if (!f.is_polynomial()) {
    VerificationReport rep{"lemma-ind", params, Status::Fail, std::nullopt, {}};
    const auto lo = f.min_exponents();
    rep.witness = Witness{f.to_string(), "polynomial", "negative exponent " + term_name(lo, *ring)};
    rep.note = "not a polynomial";
    return rep;
  }
  auto left = substitute(f, x.idx[0], Poly(ring));
  Poly right(ring);
  if (lambda.part(1) == r) {
    auto rest = x.drop_front(1);
    right = character(lambda.tail(2), rest).shifted(uniform_power(rest, r));
  }
  return compare("lemma-ind", params, left, right);
}

VerificationReport verify_lemma_pq(int n, PqVariant variant) {
  require(n >= 1 && n <= 2, "p/q lemma is checked for n in {1, 2}");
  const bool is_p = variant == PqVariant::P;
  std::vector<std::string> names;
  for (char c : {'x', 'y', 'a', 'b'})
    for (int i = 1; i <= n; ++i) names.push_back(std::string(1, c) + std::to_string(i));
  names.push_back("z");
  if (is_p) names.push_back("c");
  auto ring = VariableSet::make(names);
  auto v = [&](char c, int i) { return Poly::variable(ring, ring->require(std::string(1, c) + std::to_string(i))); };
  const auto one = Poly::constant(ring, 1);
  const auto z = Poly::variable(ring, ring->require("z"));
  // p for s = -1, q for s = +1: (1 + s x z)(1 + s y z)/(1 - x y) - ...
  const Poly sz = is_p ? -z : z;
  auto pq = [&](const Poly& x, const Poly& y, const Poly& a, const Poly& b) {
    const std::array<Poly, 1> d1{one - x * y};
    const std::array<Poly, 1> d2{x - y};
    return RationalFunction((one + x * sz) * (one + y * sz), d1) -
           RationalFunction(a * (x + sz) * (one + y * sz), d2) + RationalFunction(b * (one + x * sz) * (y + sz), d2) -
           RationalFunction(a * b * (x + sz) * (y + sz), d1);
  };
  const std::size_t size = is_p ? static_cast<std::size_t>(n + 1) : static_cast<std::size_t>(n);
  RationalMatrix lhs_m(ring, size);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) lhs_m(i - 1, j - 1) = pq(v('x', i), v('y', j), v('a', i), v('b', j));
  if (is_p) {
    const auto c = Poly::variable(ring, ring->require("c"));
    for (int i = 1; i <= n; ++i) {
      lhs_m(i - 1, n) = RationalFunction(one - v('a', i));
      lhs_m(n, i - 1) = RationalFunction(one - v('b', i));
    }
    const std::array<Poly, 1> d{one - z * z};
    lhs_m(n, n) = RationalFunction(one - c, d);
  }
  const auto lhs = det(lhs_m);

  const std::size_t big = static_cast<std::size_t>(2 * n + 1);
  PolyMatrix w(ring, big);
  auto power = [&](const Poly& base, int e) { return base.pow(static_cast<unsigned>(e)); };
  for (int j = 1; j <= 2 * n + 1; ++j) {
    for (int i = 1; i <= n; ++i) {
      w(i - 1, j - 1) = power(v('x', i), j - 1) - v('a', i) * power(v('x', i), 2 * n + 1 - j);
      w(n + i - 1, j - 1) = power(v('y', i), j - 1) - v('b', i) * power(v('y', i), 2 * n + 1 - j);
    }
    if (is_p) {
      const auto c = Poly::variable(ring, ring->require("c"));
      w(2 * n, j - 1) = power(z, j - 1) - c * power(z, 2 * n + 1 - j);
    } else {
      w(2 * n, j - 1) = power(-z, 2 * n + 1 - j);
    }
  }
  std::vector<Poly> den;
  if (is_p) den.push_back(one - z * z);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      den.push_back(v('x', i) - v('y', j));
      den.push_back(one - v('x', i) * v('y', j));
    }
  }
  auto numerator = det(w);
  if (n % 2 == 1) numerator = -numerator;
  return compare("lemma-pq", ojson{{"n", n}, {"variant", is_p ? "p" : "q"}}, lhs, RationalFunction(numerator, den));
}

VerificationReport verify_bkw_general(int n, int m, int r) {
  require(n >= 1 && n <= m, "generalized BKW requires 1 <= n <= m");
  require(r >= 0, "generalized BKW requires r >= 0");
  auto ring = standard_ring(static_cast<std::size_t>(n), static_cast<std::size_t>(m), {"z"});
  auto x = named_block(ring, "x", static_cast<std::size_t>(n));
  auto y = named_block(ring, "y", static_cast<std::size_t>(m));
  const auto zi = ring->require("z");
  auto zpow = [&](int e) { return Poly::variable(ring, zi, e); };

  Poly left(ring);
  for (const auto& lambda : partitions_up_to(n * r, static_cast<std::size_t>(n), r)) {
    left += zpow(r) * ortho_single_y(lambda, x, zi) *
            ortho_single_y(lambda.prepend_rows(r, static_cast<std::size_t>(m - n)), y, zi);
  }
  auto xy = x.concat(y);
  Poly right(ring);
  const int top = m + n + 1;
  for (int j = 1; j <= top; ++j) {
    if (r == 0 && j < top) continue;
    std::vector<int> parts(static_cast<std::size_t>(j - 1), r);
    parts.insert(parts.end(), static_cast<std::size_t>(top - j), r - 1);
    right += zpow(r + top - j) * symplectic_weyl(Partition(parts), xy);
  }
  ojson params{{"n", n}, {"m", m}, {"r", r}};
  std::string note;
  if (r == 0) {
    note = "r = 0: right-side labels with a part -1 omitted";
    if (!(left == Poly::constant(ring, 1))) return compare("bkw-general", params, left, Poly::constant(ring, 1), note);
  }
  return compare("bkw-general", params, left, right, note);
}

VerificationReport verify_bkw_original(int n, int m, int r) {
  require(n >= 1 && n <= m, "BKW requires 1 <= n <= m");
  require(r >= 0, "BKW requires r >= 0");
  auto ring = standard_ring(static_cast<std::size_t>(n), static_cast<std::size_t>(m), {"z"});
  auto x = named_block(ring, "x", static_cast<std::size_t>(n));
  auto y = named_block(ring, "y", static_cast<std::size_t>(m));
  auto z = single(ring, "z");
  auto xz = x.concat(z);
  auto yz = y.concat(z);
  Poly left(ring);
  for (const auto& lambda : partitions_up_to((n + 1) * r, static_cast<std::size_t>(n + 1), r)) {
    left += odd_symplectic_okada(lambda, xz) *
            odd_symplectic_okada(lambda.prepend_rows(r, static_cast<std::size_t>(m - n)), yz);
  }
  left = left.shifted(uniform_power(z, -r));
  auto right =
      symplectic_weyl(Partition(std::vector<int>(static_cast<std::size_t>(m + n + 1), r)), x.concat(y).concat(z));
  return compare("bkw-original", ojson{{"n", n}, {"m", m}, {"r", r}}, left, right);
}

VerificationReport verify_agreement(Family family, const Partition& lambda, int n, int m) {
  const std::string identity = std::string(family_name(family)) + "-agreement";
  ojson params{{"lambda", lambda.to_string()}, {"n", n}, {"m", m}};
  CharacterRequest base{family, Method::Tableau, lambda, n, m};
  const auto reference = compute(base);
  std::string compared = "tableau";
  for (auto method : methods_for(family)) {
    if (method == Method::Tableau) continue;
    CharacterRequest req = base;
    req.method = method;
    try {
      validate(req);
    } catch (const PreconditionError&) {
      continue;
    }
    auto r = compare(identity, params, reference, compute(req), "method " + std::string(method_name(method)));
    if (!r.passed()) return r;
    compared += "," + std::string(method_name(method));
  }
  return compare(identity, params, reference, reference, "methods " + compared);
}

VerificationReport verify_odd_specialization(const Partition& lambda, int n) {
  require(n >= 1, "odd specialization requires n >= 1");
  require(lambda.length() <= static_cast<std::size_t>(n), "odd specialization requires l(lambda) <= n");
  auto ring = standard_ring(static_cast<std::size_t>(n), 0, {"y"});
  auto x = named_block(ring, "x", static_cast<std::size_t>(n));
  const auto yi = ring->require("y");
  const auto xn = x.idx.back();
  auto left = odd_symplectic_okada(lambda, x);
  auto right = ortho_single_y(lambda, x, yi);
  right = substitute(right, xn, Poly::variable(ring, xn, -1));
  right = substitute(right, yi, -Poly::variable(ring, xn, -1));
  return compare("odd-specialization", ojson{{"lambda", lambda.to_string()}, {"n", n}}, left, right);
}

VerificationReport verify_sp_denominator(int n) {
  require(n >= 1, "denominator check requires n >= 1");
  auto ring = standard_ring(static_cast<std::size_t>(n), 0);
  auto x = named_block(ring, "x", static_cast<std::size_t>(n));
  return compare("sp-denominator", ojson{{"n", n}}, symplectic_denominator_alternant(x),
                 product(ring, symplectic_denominator_factors(x)));
}

VerificationReport verify_okada_denominator(int n) {
  require(n >= 1, "denominator check requires n >= 1");
  auto ring = standard_ring(static_cast<std::size_t>(n), 0);
  auto x = named_block(ring, "x", static_cast<std::size_t>(n));
  return compare("okada-denominator", ojson{{"n", n}}, okada_denominator_determinant(x),
                 product(ring, okada_denominator_factors(x)));
}

VerificationReport verify_golden(const nlohmann::json& golden, const std::string& name) {
  try {
    const auto family = parse_family(golden.at("family").get<std::string>());
    if (!family) throw ParseError("unknown family in golden file");
    CharacterRequest req{*family, Method::Tableau, Partition::parse(golden.at("lambda").get<std::string>()),
                         golden.at("n").get<int>(), golden.value("m", 0)};
    const auto ring = request_ring(req);
    const auto expected = parse_polynomial(golden.at("expected").get<std::string>(), ring);
    ojson params{{"file", name}, {"family", family_name(req.family)}, {"lambda", req.lambda.to_string()},
                 {"n", req.n}, {"m", req.m}};
    std::string compared;
    for (const auto& mname : golden.at("methods")) {
      const auto method = parse_method(mname.get<std::string>());
      if (!method) throw ParseError("unknown method in golden file: " + mname.get<std::string>());
      req.method = *method;
      auto r = compare("golden", params, compute(req), expected, "method " + mname.get<std::string>());
      if (!r.passed()) return r;
      compared += (compared.empty() ? "" : ",") + mname.get<std::string>();
    }
    return compare("golden", params, expected, expected, "methods " + compared);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed golden file: ") + e.what());
  }
}

std::vector<SuiteTask> suite_tasks(const SuiteBounds& b) {
  require(b.max_n >= 1 && b.max_m >= 1 && b.max_weight >= 1, "suite bounds must be >= 1");
  std::vector<SuiteTask> tasks;
  auto add = [&](std::string identity, ojson params, std::function<VerificationReport()> run) {
    tasks.push_back({std::move(identity), std::move(params), std::move(run)});
  };
  const int W = b.max_weight;
  const auto all = partitions_up_to(W, static_cast<std::size_t>(W), W);

  for (int n = 1; n <= b.max_n; ++n) {
    for (const auto& l : partitions_up_to(W, static_cast<std::size_t>(n), W)) {
      const ojson p{{"lambda", l.to_string()}, {"n", n}};
      add("schur-agreement", p, [=] { return verify_agreement(Family::Schur, l, n, 0); });
      add("symplectic-agreement", p, [=] { return verify_agreement(Family::Symplectic, l, n, 0); });
      add("odd_symplectic-agreement", p, [=] { return verify_agreement(Family::OddSymplectic, l, n, 0); });
      add("odd-specialization", p, [=] { return verify_odd_specialization(l, n); });
    }
  }
  for (int n = 1; n <= b.max_n; ++n) {
    for (int m = 1; m <= b.max_m; ++m) {
      for (const auto& l : partitions_up_to(W, static_cast<std::size_t>(n), W)) {
        add("orthosymplectic-agreement", ojson{{"lambda", l.to_string()}, {"n", n}, {"m", m}},
            [=] { return verify_agreement(Family::Orthosymplectic, l, n, m); });
      }
      for (const auto& l : all) {
        const ojson p{{"lambda", l.to_string()}, {"n", n}, {"m", m}};
        if (l.part(static_cast<std::size_t>(n + 1)) <= m) {
          add("hook-agreement", p, [=] { return verify_agreement(Family::Hook, l, n, m); });
        }
        add("supersymmetry", p, [=] { return verify_supersymmetry(l, n, m); });
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    add("sp-denominator", ojson{{"n", n}}, [=] { return verify_sp_denominator(n); });
    add("okada-denominator", ojson{{"n", n}}, [=] { return verify_okada_denominator(n); });
  }
  for (int n = 1; n <= b.max_n; ++n)
    for (int l = 0; l <= W; ++l) add("lemma-evaluation", ojson{{"n", n}, {"l", l}}, [=] { return verify_lemma_evaluation(n, l); });
  for (int n1 = 1; n1 <= b.max_n; ++n1) {
    for (int n2 = 1; n2 <= b.max_m; ++n2) {
      for (const auto& l : partitions_up_to(n1 * n2, static_cast<std::size_t>(n1), n2)) {
        add("lemma-separate", ojson{{"lambda", l.to_string()}, {"n1", n1}, {"n2", n2}},
            [=] { return verify_lemma_separate(l, n1, n2); });
      }
    }
  }
  for (int m = 1; m <= std::min(b.max_n, 2); ++m) {
    for (int n = m; n <= 4; ++n) {
      add("cauchy-binet", ojson{{"m", m}, {"n", n}, {"mode", "integer"}},
          [=] { return verify_cauchy_binet(m, n, 20240607u + static_cast<unsigned>(10 * m + n)); });
      if (2 * m * n <= 12) {
        add("cauchy-binet", ojson{{"m", m}, {"n", n}, {"mode", "symbolic"}},
            [=] { return verify_cauchy_binet(m, n, 0, true); });
      }
    }
  }
  for (int n = 1; n <= std::min(b.max_n, 2); ++n) {
    for (int r = 0; r <= std::min(W, 3); ++r) {
      for (const auto& l : partitions_up_to(n * r, static_cast<std::size_t>(n), r)) {
        for (auto v : {IndVariant::Sp, IndVariant::Spo}) {
          add("lemma-ind",
              ojson{{"lambda", l.to_string()}, {"n", n}, {"r", r}, {"variant", v == IndVariant::Sp ? "sp" : "spo"}},
              [=] { return verify_lemma_ind(l, n, r, v); });
        }
      }
    }
  }
  for (int n = 1; n <= std::min(b.max_n, 2); ++n) {
    add("lemma-pq", ojson{{"n", n}, {"variant", "p"}}, [=] { return verify_lemma_pq(n, PqVariant::P); });
    add("lemma-pq", ojson{{"n", n}, {"variant", "q"}}, [=] { return verify_lemma_pq(n, PqVariant::Q); });
  }
  // Weyl alternants in six or more letters are out of reach at desk scale.
  for (int n = 1; n <= b.max_n; ++n) {
    for (int m = n; m <= b.max_m && n + m <= 5; ++m) {
      for (int r = 0; r <= std::min(W, 3) && (n + m) * r <= 8; ++r)
        add("bkw-general", ojson{{"n", n}, {"m", m}, {"r", r}}, [=] { return verify_bkw_general(n, m, r); });
      for (int r = 0; r <= W && n + m + 1 <= 5 && (n + m + 1) * r <= 6; ++r)
        add("bkw-original", ojson{{"n", n}, {"m", m}, {"r", r}}, [=] { return verify_bkw_original(n, m, r); });
    }
  }
  return tasks;
}

std::vector<VerificationReport> run_tasks(const std::vector<SuiteTask>& tasks, unsigned threads) {
  std::vector<VerificationReport> out(tasks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i].run();
      } catch (const std::exception& e) {
        VerificationReport r{tasks[i].identity, tasks[i].params, Status::Fail, std::nullopt, {}};
        r.witness = Witness{"", "", std::string("error: ") + e.what()};
        r.note = "exception";
        out[i] = std::move(r);
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return out;
}

std::vector<VerificationReport> run_suite(const SuiteBounds& bounds, unsigned threads) {
  return run_tasks(suite_tasks(bounds), threads);
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  ojson j;
  j["identity"] = report.identity;
  j["params"] = report.params;
  j["status"] = report.passed() ? "pass" : "fail";
  if (report.witness) {
    j["witness"] = ojson{{"left", report.witness->left},
                         {"right", report.witness->right},
                         {"first_difference", report.witness->first_difference}};
  }
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reports) {
  auto arr = ojson::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

std::string to_text(const VerificationReport& report) {
  std::string s = (report.passed() ? "PASS " : "FAIL ") + report.identity + " " + report.params.dump();
  if (report.witness) s += ": " + report.witness->first_difference;
  return s;
}

}  // namespace ospchar
