#pragma once

// Numerical data of an embedded resolution: components with their
// multiplicities (N, nu) and the Euler characteristics of the strata.

#include "ztop/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace ztop {

struct Component {
  int id = 0;
  std::int64_t N = 1;   // multiplicity of f o pi along the component
  std::int64_t nu = 1;  // one plus the multiplicity of the pulled-back volume form
  bool meets_origin_fiber = true;
  friend bool operator==(const Component&, const Component&) = default;
};

/// Points lying on exactly the components `ids`.
struct Stratum {
  std::vector<int> ids;  // sorted, non-empty
  std::int64_t chi_total = 0;
  std::int64_t chi_origin = 0;
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct ResolutionData {
  int ambient_dim = 2;
  std::vector<Component> components;
  std::vector<Stratum> strata;
  /// The stratum I = {} (complement of every component).
  std::int64_t empty_chi_total = 0;
  std::int64_t empty_chi_origin = 0;

  const Component& component(int id) const {
    for (const auto& c : components)
      if (c.id == id) return c;
    throw InvalidResolutionData("unknown component id " + std::to_string(id));
  }

  /// Throws InvalidResolutionData naming the first violated invariant.
  void validate() const {
    if (ambient_dim < 1) throw InvalidResolutionData("ambient_dim must be positive");
    std::set<int> ids;
    for (const auto& c : components) {
      if (!ids.insert(c.id).second) throw InvalidResolutionData("duplicate component id " + std::to_string(c.id));
      if (c.N < 1) throw InvalidResolutionData("component " + std::to_string(c.id) + " has N < 1");
      if (c.nu < 1) throw InvalidResolutionData("component " + std::to_string(c.id) + " has nu < 1");
    }
    std::set<std::vector<int>> seen;
    for (const auto& s : strata) {
      if (s.ids.empty()) throw InvalidResolutionData("stratum with empty id set (use the empty stratum field)");
      if (!std::is_sorted(s.ids.begin(), s.ids.end()) ||
          std::adjacent_find(s.ids.begin(), s.ids.end()) != s.ids.end())
        throw InvalidResolutionData("stratum ids must be sorted and distinct");
      if (static_cast<int>(s.ids.size()) > ambient_dim)
        throw InvalidResolutionData("stratum meets more than ambient_dim components");
      if (!seen.insert(s.ids).second) throw InvalidResolutionData("duplicate stratum");
      for (int id : s.ids) {
        if (!ids.count(id)) throw InvalidResolutionData("stratum references unknown component " + std::to_string(id));
        if (!component(id).meets_origin_fiber && s.chi_origin != 0)
          throw InvalidResolutionData("stratum over the origin contains component " + std::to_string(id) +
                                      " which does not meet the origin fibre");
      }
    }
  }

  friend bool operator==(const ResolutionData&, const ResolutionData&) = default;
};

}  // namespace ztop
