#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ospchar/algebra/laurent.hpp"
#include "ospchar/algebra/rational.hpp"
#include "ospchar/characters/characters.hpp"
#include "ospchar/symfun/partition.hpp"

namespace ospchar {

enum class Status { Pass, Fail };

struct Witness {
  std::string left;
  std::string right;
  std::string first_difference;  // "<monomial>: left <c>, right <d>"
};

struct VerificationReport {
  std::string identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Status status = Status::Pass;
  std::optional<Witness> witness;  // set iff status == Fail
  std::string note;

  bool passed() const { return status == Status::Pass; }
};

/// First monomial (canonical order) where the coefficients differ, formatted
/// for a witness; empty when a == b.
std::string first_difference(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Pass iff left == right; on failure the witness holds both sides.
VerificationReport compare(std::string identity, nlohmann::ordered_json params, const LaurentPolynomial& left,
                           const LaurentPolynomial& right, std::string note = {});
/// Same for rational functions; the witness difference is taken between the
/// cross-multiplied numerators.
VerificationReport compare(std::string identity, nlohmann::ordered_json params, const RationalFunction& left,
                           const RationalFunction& right, std::string note = {});

/// hook_schur_jt with x_n -> t, y_m -> -t is free of t.
VerificationReport verify_supersymmetry(const Partition& lambda, int n, int m);

/// The row-vector / e-matrix / zeta-column product equals x_j^l - x_j^{-l}
/// for every j; e is taken over the 2n letters (X, X^{-1}).
VerificationReport verify_lemma_evaluation(int n, int l);

/// {lambda_i + n1 - i} and {n1 - 1 + j - lambda'_j} partition {0..n1+n2-1}.
VerificationReport verify_lemma_separate(const Partition& lambda, int n1, int n2);

/// sum_B det X[B] det Y[B] = det(X Y^t) for m x n matrices. With
/// `symbolic` the entries are independent variables (2mn <= 16); otherwise
/// integers in [-9, 9] taken as (mt19937_64 output mod 19) - 9, seeded with
/// `seed`, so the matrices are the same on every platform.
VerificationReport verify_cauchy_binet(int m, int n, std::uint64_t seed = 20240607, bool symbolic = false);

enum class IndVariant { Sp, Spo };
/// (x_1..x_n)^r char_lambda has no negative exponents and its x_1 = 0
/// specialization is (x_2..x_n)^r char_{(lambda_2,..)} if lambda_1 = r, else 0.
VerificationReport verify_lemma_ind(const Partition& lambda, int n, int r, IndVariant variant);

enum class PqVariant { P, Q };
/// det C against det V (variant p) or det(q) against det W (variant q).
VerificationReport verify_lemma_pq(int n, PqVariant variant);

/// Generalized BKW summation, one-letter orthosymplectic characters on the
/// left and symplectic characters in n+m variables on the right.
VerificationReport verify_bkw_general(int n, int m, int r);
/// Original BKW summation in odd symplectic characters.
VerificationReport verify_bkw_original(int n, int m, int r);

/// Every applicable method of `family` against tableau enumeration.
VerificationReport verify_agreement(Family family, const Partition& lambda, int n, int m);

/// Odd symplectic character vs the one-letter orthosymplectic determinant
/// with x_n -> x_n^{-1} and y -> -x_n^{-1}.
VerificationReport verify_odd_specialization(const Partition& lambda, int n);

/// Denominator determinants against their product formulas.
VerificationReport verify_sp_denominator(int n);
VerificationReport verify_okada_denominator(int n);

/// Golden file: {"family", "methods": [...], "n", "m", "lambda", "expected"}.
/// Every listed method must reproduce `expected` (canonical text form).
VerificationReport verify_golden(const nlohmann::json& golden, const std::string& name);

struct SuiteBounds {
  int max_n = 1;
  int max_m = 1;
  int max_weight = 2;
};

/// One entry of the suite grid, runnable in isolation.
struct SuiteTask {
  std::string identity;
  nlohmann::ordered_json params;
  std::function<VerificationReport()> run;
};

/// The full grid for the given bounds, in a fixed order.
std::vector<SuiteTask> suite_tasks(const SuiteBounds& bounds);

/// Runs the tasks on `threads` workers (0 = hardware concurrency). Results
/// keep task order; a task that throws becomes a failing report.
std::vector<VerificationReport> run_tasks(const std::vector<SuiteTask>& tasks, unsigned threads = 0);

std::vector<VerificationReport> run_suite(const SuiteBounds& bounds, unsigned threads = 0);

nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reports);
/// One line: "PASS identity {params}" or "FAIL identity {params}: <difference>".
std::string to_text(const VerificationReport& report);

}  // namespace ospchar
