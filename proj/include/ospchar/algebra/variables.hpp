#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ospchar {

class VariableSet;
using VarSetPtr = std::shared_ptr<const VariableSet>;

/// Ordered, immutable list of distinct indeterminate names. Every polynomial
/// points at exactly one of these; x^{-1} is a negative exponent, never a
/// separate name.
class VariableSet {
 public:
  static VarSetPtr make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;

 private:
  explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

/// Two sets are interchangeable when they list the same names in the same order.
bool same_variables(const VarSetPtr& a, const VarSetPtr& b);

/// A sub-alphabet of a ring: the variables named by `idx`, in that order.
struct VarList {
  VarSetPtr ring;
  std::vector<std::size_t> idx;

  std::size_t size() const { return idx.size(); }
  VarList prefix(std::size_t count) const;
  VarList drop_front(std::size_t count) const;
  VarList concat(const VarList& other) const;
};

/// Ring with variables x1..xn, y1..ym followed by `extra` names.
VarSetPtr standard_ring(std::size_t n, std::size_t m, const std::vector<std::string>& extra = {});

/// All variables of `ring` whose name is `prefix` followed by 1..count.
VarList named_block(const VarSetPtr& ring, std::string_view prefix, std::size_t count);

}  // namespace ospchar
