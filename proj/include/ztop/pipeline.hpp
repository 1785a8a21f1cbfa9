#pragma once

// Runs the curve pipelines on a polynomial and the analysis on whatever
// resolution data they produce.

#include "ztop/curve_resolution.hpp"
#include "ztop/report.hpp"
#include "ztop/toric_curve.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ztop {

enum class Pipeline { blowup, toric, both, file, automatic };

inline const char* to_string(Pipeline p) {
  switch (p) {
    case Pipeline::blowup: return "blowup";
    case Pipeline::toric: return "toric";
    case Pipeline::both: return "both";
    case Pipeline::file: return "file";
    case Pipeline::automatic: return "auto";
  }
  return "?";
}

struct NamedResolution {
  std::string pipeline;
  CurveResolution resolution;
};

/// `automatic` runs blowup when the centers stay rational and toric when f is non-degenerate,
/// and fails only if neither applies.
inline std::vector<NamedResolution> run_curve_pipelines(const Poly& f, Pipeline which, bool allow_nonreduced) {
  std::vector<NamedResolution> out;
  auto blowup = [&] { out.push_back({"blowup", resolve_curve_germ(f, {allow_nonreduced})}); };
  auto toric = [&] { out.push_back({"toric", toric_resolution_data(f, {allow_nonreduced})}); };
  switch (which) {
    case Pipeline::blowup: blowup(); break;
    case Pipeline::toric: toric(); break;
    case Pipeline::both:
      blowup();
      toric();
      break;
    case Pipeline::automatic: {
      require_germ(f);
      bool nondegenerate = is_nondegenerate_curve(f);
      try {
        blowup();
      } catch (const IrrationalCenter&) {
        if (!nondegenerate) throw;
      }
      if (nondegenerate) toric();
      break;
    }
    case Pipeline::file: throw std::invalid_argument("the file pipeline takes a resolution file");
  }
  return out;
}

/// Exact equality of the local zeta functions of all resolutions.
inline bool resolutions_agree(const std::vector<NamedResolution>& rs) {
  for (std::size_t i = 1; i < rs.size(); ++i)
    if (!(zeta_local(rs[i].resolution.data) == zeta_local(rs[0].resolution.data))) return false;
  return true;
}

inline Report analyze_curve(const CurveResolution& res, const std::optional<RootMultiset>& b_roots = std::nullopt) {
  return analyze(res.data, Scope::local, res.reduced ? TriState::yes : TriState::no, res.branch_multiplicities(), &res,
                 b_roots);
}

}  // namespace ztop
