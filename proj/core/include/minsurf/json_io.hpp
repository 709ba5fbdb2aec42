#pragma once

#include <array>
#include <string>

#include "minsurf/analysis.hpp"
#include "minsurf/builder.hpp"
#include "minsurf/covering.hpp"

namespace minsurf {

// Surface description schema:
//   {"base": {"kind": "sphere", "punctures": [[0,1],[0,-1],"inf"]}
//          | {"kind": "torus-square", "punctures": "standard4"|"standard3"},
//    "g": {"kind": "rational", "num": [...], "den": [...], "scale": [re,im]?}
//       | {"kind": "elliptic", "case": 1|2, "j": int, "sigma": [re,im]},
//    "h": {... same kinds ...}}
// Complex scalars are [re, im]; components may be numbers (exact when
// integral) or strings "p/q" (exact rationals).
WeierstrassSurface surface_from_json_text(const std::string& text);
WeierstrassSurface surface_from_json_file(const std::string& path);
std::string surface_to_json_text(const WeierstrassSurface& S);

std::string report_to_json_text(const AnalysisReport& r);
std::string report_to_text_table(const WeierstrassSurface& S, const AnalysisReport& r);

// {"m": int, "fibers": [[int,...],...]}
CoverSpec cover_spec_from_json_file(const std::string& path);
std::string cover_result_to_json_text(const CoverResult& r);

// {"cycles": [{"points": [[re,im],...]}, ...]} or a bare points array.
std::vector<Cycle> cycles_from_json_file(const std::string& path);
std::string periods_to_json_text(const std::vector<PeriodResult>& prs);

// [[re,im],[re,im],"inf"] style triple.
std::array<SpherePoint, 3> three_punctures_from_json_file(const std::string& path);

std::string unicity_to_json_text(const UnicityReport& r);
std::string total_curvature_to_json_text(const TotalCurvatureReport& r);

} // namespace minsurf
