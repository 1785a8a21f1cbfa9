#pragma once

// Resolution data of a plane-curve germ together with the geometric
// bookkeeping the pipelines know about each component.

#include "ztop/resolution_data.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ztop {

enum class ComponentKind {
  exceptional,  // a projective line over the origin
  strict,       // an orbit of strict-transform branches
  axis,         // strict transform of a coordinate axis contained in f = 0 (toric pipeline)
};

inline const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::exceptional: return "exceptional";
    case ComponentKind::strict: return "strict";
    case ComponentKind::axis: return "axis";
  }
  return "?";
}

struct BlowupRecord {
  int step = 0;
  std::string center;              // human description of the center
  std::vector<int> through;        // components through the center
  std::int64_t multiplicity = 0;   // multiplicity of the strict transform at the center
  int component = 0;               // id of the new exceptional curve
  std::int64_t N = 0;
  std::int64_t nu = 0;
};

struct FanRay {
  long a = 0;
  long b = 0;
  std::int64_t N = 0;      // min over supp f of a.m
  std::int64_t sigma = 0;  // a + b
  bool inserted = false;   // added by the unimodular subdivision
};

struct CurveResolution {
  ResolutionData data;
  std::vector<ComponentKind> kinds;  // parallel to data.components
  std::vector<int> orbit_degrees;    // number of conjugate branches a component stands for
  std::vector<BlowupRecord> history; // blowup pipeline
  std::vector<FanRay> fan;           // toric pipeline
  bool reduced = true;

  /// Multiplicities of the strict-transform branches (one entry per branch component).
  std::vector<int> branch_multiplicities() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < kinds.size(); ++i)
      if (kinds[i] != ComponentKind::exceptional) out.push_back(static_cast<int>(data.components[i].N));
    return out;
  }

  /// Sum over strata containing each exceptional component of chi; 2 for every projective line.
  std::map<int, std::int64_t> exceptional_chi_sums() const {
    std::map<int, std::int64_t> out;
    for (std::size_t i = 0; i < kinds.size(); ++i)
      if (kinds[i] == ComponentKind::exceptional) out[data.components[i].id] = 0;
    for (const auto& s : data.strata)
      for (int id : s.ids)
        if (auto it = out.find(id); it != out.end()) it->second += s.chi_total;
    return out;
  }
};

/// Builds the stratum table from incidence points. Each incidence lists the components through
/// a point (or a conjugate orbit of `count` points) of the final total transform over the origin.
struct Incidence {
  std::vector<int> ids;  // sorted; one or two components
  std::int64_t count = 1;
};

inline void assemble_strata(CurveResolution& res, const std::vector<Incidence>& incidences) {
  std::map<std::vector<int>, std::int64_t> pairs, singles;
  std::map<int, std::int64_t> points_on;
  for (const auto& inc : incidences) {
    if (inc.ids.size() == 2) {
      pairs[inc.ids] += inc.count;
      for (int id : inc.ids) points_on[id] += inc.count;
    } else {
      singles[inc.ids] += inc.count;
    }
  }
  res.data.strata.clear();
  for (std::size_t i = 0; i < res.kinds.size(); ++i) {
    const auto& c = res.data.components[i];
    Stratum s{{c.id}, 0, 0};
    if (res.kinds[i] == ComponentKind::exceptional) {
      s.chi_total = s.chi_origin = 2 - points_on[c.id];
    } else {
      // Germ of orbit_degree disks, minus the points where they meet other components.
      std::int64_t over_origin = singles.count({c.id}) ? singles[{c.id}] : 0;
      s.chi_origin = over_origin;
      s.chi_total = res.orbit_degrees[i] - points_on[c.id];
    }
    res.data.strata.push_back(std::move(s));
  }
  for (const auto& [ids, n] : pairs) res.data.strata.push_back({ids, n, n});
}

}  // namespace ztop
