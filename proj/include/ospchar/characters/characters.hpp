#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ospchar/algebra/laurent.hpp"
#include "ospchar/symfun/partition.hpp"

namespace ospchar {

// Closed-form character formulas. Every function takes its alphabets as
// VarLists into one shared ring; X = (x_1..x_n), Y = (y_1..y_m).

/// det(x_i^{lambda_j+n-j}) / det(x_i^{n-j}); requires l(lambda) <= n.
LaurentPolynomial schur_bialternant(const Partition& lambda, const VarList& x);

/// det(H_{lambda_i-i+j}(X;Y)) of size max(l(lambda),1).
LaurentPolynomial hook_schur_jt(const Partition& lambda, const VarList& x, const VarList& y);

/// Moens-Van der Jeugt block determinant with the Cauchy block 1/(x_i+y_j);
/// requires lambda_{n+1} <= m.
LaurentPolynomial hook_schur_det(const Partition& lambda, const VarList& x, const VarList& y);

/// Weyl quotient of the two symplectic alternants; requires l(lambda) <= n.
/// The denominator alternant is checked against its product formula first.
LaurentPolynomial symplectic_weyl(const Partition& lambda, const VarList& x);

/// n x n Jacobi-Trudi determinant in J_r; requires l(lambda) <= n.
LaurentPolynomial ortho_jt(const Partition& lambda, const VarList& x, const VarList& y);

/// Rational block determinant (R | X_lambda ; Y_lambda | 0) over D, evaluated
/// by cofactor expansion over rational functions. Requires l(lambda) <= n;
/// m = 0 routes to symplectic_weyl.
LaurentPolynomial ortho_det_main(const Partition& lambda, const VarList& x, const VarList& y);

/// Polynomial-entry form of the same determinant (Bareiss elimination).
LaurentPolynomial ortho_det_equiv(const Partition& lambda, const VarList& x, const VarList& y);

/// One-letter Y: (1/D) det(phi(lambda_j+n-j+1) + y phi(lambda_j+n-j)).
LaurentPolynomial ortho_single_y(const Partition& lambda, const VarList& x, std::size_t y);

/// One-letter Y for l(lambda) > n with lambda_{n+1} <= 1: y^{l-n} times the
/// one-letter determinant of (lambda_1..lambda_n).
LaurentPolynomial ortho_single_y_long(const Partition& lambda, const VarList& x, std::size_t y);

/// Okada's determinant det A_lambda / det A_empty, the last variable of `x`
/// playing the odd role. Requires l(lambda) <= n.
LaurentPolynomial odd_symplectic_okada(const Partition& lambda, const VarList& x);

/// sum over mu inside lambda, l(mu) <= n, of sp_mu(X) s_{lambda'/mu'}(Y).
LaurentPolynomial ortho_sp_schur_sum(const Partition& lambda, const VarList& x, const VarList& y);

/// Product formula prod(x_i - 1/x_i) prod_{i<j}(x_i + 1/x_i - x_j - 1/x_j),
/// as its list of factors.
std::vector<LaurentPolynomial> symplectic_denominator_factors(const VarList& x);
/// det(x_i^{n-j+1} - x_i^{-(n-j+1)}), computed as a determinant.
LaurentPolynomial symplectic_denominator_alternant(const VarList& x);
/// Okada's printed product for det A_empty.
std::vector<LaurentPolynomial> okada_denominator_factors(const VarList& x);
/// det A_empty computed as a determinant.
LaurentPolynomial okada_denominator_determinant(const VarList& x);

enum class Family { Schur, Hook, Symplectic, Orthosymplectic, OddSymplectic };
enum class Method { Tableau, JacobiTrudi, Det, DetEquiv, Weyl, Okada, SpSchurSum, SingleY };

std::optional<Family> parse_family(std::string_view s);
std::optional<Method> parse_method(std::string_view s);
std::string_view family_name(Family f);
std::string_view method_name(Method m);

struct CharacterRequest {
  Family family = Family::Schur;
  Method method = Method::Tableau;
  Partition lambda;
  int n = 0;
  int m = 0;
};

/// Methods available for a family, in a fixed order.
std::vector<Method> methods_for(Family family);
/// Throws PreconditionError if the pair is unsupported or parameters are out
/// of range for the formula.
void validate(const CharacterRequest& req);
/// Ring the request is evaluated in: x1..xn, plus y1..ym for families with a
/// Y alphabet.
VarSetPtr request_ring(const CharacterRequest& req);
/// Validates and evaluates the request over request_ring(req).
LaurentPolynomial compute(const CharacterRequest& req);

}  // namespace ospchar
