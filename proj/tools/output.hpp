#pragma once

// Serialization of reports and profile curves. CSV and SVG numbers use
// 17 significant digits; JSON goes through nlohmann::json.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ovaloid/map.hpp"
#include "ovaloid/solver.hpp"
#include "ovaloid/verify.hpp"

namespace ovaloid::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

std::string format_number(double x);

Json params_json(const OvaloidParams& p);
Json solve_report_json(const SolveReport& r);
Json verification_json(const VerificationReport& r);
Json derivative_json(const std::vector<DerivativeEstimate>& d, const PlaneFit& fit);

/// theta,X,Y
std::string profile_csv(const ProfileCurve& curve);
/// b,theta,X,Y
std::string family_csv(const std::vector<ProfileCurve>& curves);
Json profile_points_json(const ProfileCurve& curve);

/// Overlaid profiles with both symmetry axes and the foci. The viewBox is
/// the bounding box of all curves plus a 10% margin.
std::string profiles_svg(const std::vector<ProfileCurve>& curves, double epsilon);

/// Writes to `path` via a temporary file and rename. "-" or empty writes to `console`.
void write_output(const std::string& path, const std::string& content, std::ostream& console);

}  // namespace ovaloid::cli
