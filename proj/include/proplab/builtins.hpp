#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proplab/graphs.hpp"

namespace proplab {

// A named graph property with a generator for any supported n. The predicate
// is the single source of truth; truth tables are materialized from it for
// n <= 7 and the oracle wraps it above that.
struct BuiltinProperty {
  std::string name;
  std::string summary;
  bool monotone = false;
  std::function<bool(const LabeledGraph&)> predicate;
  // Known exact sensitivity, when one is established for every n.
  std::function<int(int)> expected_sensitivity;
};

const std::vector<BuiltinProperty>& builtin_registry();

const BuiltinProperty* find_builtin(std::string_view name);

// Truth-table backed for n <= 7, oracle backed (memoized) above.
PropertyFunction builtin_property(std::string_view name, int n);

// Oracle-backed regardless of n; used to cross-check the two backings.
PropertyFunction builtin_property_oracle(std::string_view name, int n);

}  // namespace proplab
