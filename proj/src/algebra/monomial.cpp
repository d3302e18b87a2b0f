#include "ospchar/algebra/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ospchar/algebra/errors.hpp"

namespace ospchar {

void Monomial::set(std::size_t i, int e) {
  if (e > std::numeric_limits<Exponent>::max() || e < std::numeric_limits<Exponent>::min()) {
    throw Error("exponent out of range: " + std::to_string(e));
  }
  exps_[i] = static_cast<Exponent>(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.set(i, exps_[i] + o.exps_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.set(i, exps_[i] - o.exps_[i]);
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = static_cast<Exponent>(-exps_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent words.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : exps_) {
    h ^= static_cast<std::uint16_t>(e);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering Monomial::compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return r;
}

Monomial Monomial::max(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

}  // namespace ospchar
