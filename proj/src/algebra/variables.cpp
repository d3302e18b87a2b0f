#include "ospchar/algebra/variables.hpp"

#include <set>

#include "ospchar/algebra/errors.hpp"
#include "ospchar/algebra/monomial.hpp"

namespace ospchar {

VarSetPtr VariableSet::make(std::vector<std::string> names) {
  if (names.size() > kMaxVariables) {
    throw PreconditionError("too many variables: " + std::to_string(names.size()) + " (limit " +
                            std::to_string(kMaxVariables) + ")");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable name: " + n);
  }
  return VarSetPtr(new VariableSet(std::move(names)));
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VariableSet::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw RingMismatch("unknown variable: " + std::string(name));
}

bool same_variables(const VarSetPtr& a, const VarSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->names() == b->names();
}

VarList VarList::prefix(std::size_t count) const {
  return VarList{ring, std::vector<std::size_t>(idx.begin(), idx.begin() + count)};
}

VarList VarList::drop_front(std::size_t count) const {
  return VarList{ring, std::vector<std::size_t>(idx.begin() + count, idx.end())};
}

VarList VarList::concat(const VarList& other) const {
  if (!same_variables(ring, other.ring)) throw RingMismatch("concatenating alphabets of different rings");
  VarList out{ring, idx};
  out.idx.insert(out.idx.end(), other.idx.begin(), other.idx.end());
  return out;
}

VarSetPtr standard_ring(std::size_t n, std::size_t m, const std::vector<std::string>& extra) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t j = 1; j <= m; ++j) names.push_back("y" + std::to_string(j));
  names.insert(names.end(), extra.begin(), extra.end());
  return VariableSet::make(std::move(names));
}

VarList named_block(const VarSetPtr& ring, std::string_view prefix, std::size_t count) {
  VarList out{ring, {}};
  for (std::size_t i = 1; i <= count; ++i) {
    out.idx.push_back(ring->require(std::string(prefix) + std::to_string(i)));
  }
  return out;
}

}  // namespace ospchar
