#include "output.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ovaloid::cli {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json params_json(const OvaloidParams& p) {
  return Json{{"a", p.a}, {"b", p.b}, {"C", p.C}, {"epsilon", p.epsilon}};
}

Json solve_report_json(const SolveReport& r) {
  Json j;
  j["a"] = r.params.a;
  j["b"] = r.params.b;
  j["C"] = r.params.C;
  j["epsilon"] = r.params.epsilon;
  j["A"] = r.A;
  j["residual_F"] = r.residual_F;
  j["residual_fb"] = r.residual_fb;
  j["iterations"] = r.iterations;
  j["ball_limit"] = r.ball_limit;
  return j;
}

Json verification_json(const VerificationReport& r) {
  Json j;
  j["grid"] = {{"n_radial", r.grid.n_radial}, {"n_angular", r.grid.n_angular}};
  j["refined_grid"] = {{"n_radial", r.refined_grid.n_radial}, {"n_angular", r.refined_grid.n_angular}};
  j["x_extent"] = r.x_extent;
  Json tests = Json::array();
  for (const auto& t : r.results) {
    Json e;
    e["test"] = t.test.name();
    e["lhs"] = t.lhs;
    e["rhs"] = t.rhs;
    e["scale"] = t.scale;
    e["rel_error"] = t.rel_error;
    e["lhs_refined"] = t.lhs_refined;
    e["rel_error_refined"] = t.rel_error_refined;
    e["tolerance"] = t.tolerance;
    e["passed"] = t.passed();
    if (!t.rejected.empty()) e["rejected"] = t.rejected;
    tests.push_back(e);
  }
  j["tests"] = tests;
  j["all_passed"] = r.all_passed();
  return j;
}

Json derivative_json(const std::vector<DerivativeEstimate>& d, const PlaneFit& fit) {
  Json rows = Json::array();
  for (const auto& e : d) {
    rows.push_back({{"quantity", e.name},
                    {"estimate", e.estimate},
                    {"target", e.target},
                    {"tolerance", e.tolerance},
                    {"within_tolerance", e.within_tolerance()}});
  }
  Json j;
  j["derivatives"] = rows;
  j["plane_fit"] = {{"alpha", fit.alpha}, {"beta", fit.beta}, {"max_residual", fit.max_residual}};
  return j;
}

std::string profile_csv(const ProfileCurve& curve) {
  std::string out = "theta,X,Y\n";
  for (const auto& p : curve.points) {
    out += format_number(p.theta) + ',' + format_number(p.X) + ',' + format_number(p.Y) + '\n';
  }
  return out;
}

std::string family_csv(const std::vector<ProfileCurve>& curves) {
  std::string out = "b,theta,X,Y\n";
  for (const auto& c : curves) {
    const auto b = format_number(c.params.b);
    for (const auto& p : c.points) {
      out += b + ',' + format_number(p.theta) + ',' + format_number(p.X) + ',' + format_number(p.Y) + '\n';
    }
  }
  return out;
}

Json profile_points_json(const ProfileCurve& curve) {
  Json pts = Json::array();
  for (const auto& p : curve.points) pts.push_back({{"theta", p.theta}, {"X", p.X}, {"Y", p.Y}});
  return pts;
}

std::string profiles_svg(const std::vector<ProfileCurve>& curves, double epsilon) {
  double xmax = epsilon, ymax = 0.0;
  for (const auto& c : curves) {
    for (const auto& p : c.points) {
      xmax = std::max(xmax, std::abs(p.X));
      ymax = std::max(ymax, std::abs(p.Y));
    }
  }
  const double half_w = 1.1 * xmax;
  const double half_h = 1.1 * std::max(ymax, 0.25 * xmax);
  const double stroke = 0.004 * std::max(half_w, half_h);
  auto n = format_number;

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << n(-half_w) << ' ' << n(-half_h) << ' '
    << n(2 * half_w) << ' ' << n(2 * half_h) << "\" width=\"800\" height=\""
    << static_cast<int>(800.0 * half_h / half_w) << "\">\n";
  s << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" << n(stroke) << "\">\n";
  s << "<line class=\"axis\" x1=\"" << n(-half_w) << "\" y1=\"0\" x2=\"" << n(half_w)
    << "\" y2=\"0\" stroke=\"#888888\"/>\n";
  s << "<line class=\"axis\" x1=\"0\" y1=\"" << n(-half_h) << "\" x2=\"0\" y2=\"" << n(half_h)
    << "\" stroke=\"#888888\"/>\n";
  for (const auto& c : curves) {
    s << "<polygon data-b=\"" << n(c.params.b) << "\" stroke=\"#1f4e9c\" points=\"";
    for (std::size_t k = 0; k < c.points.size(); ++k) {
      if (k) s << ' ';
      s << n(c.points[k].X) << ',' << n(c.points[k].Y);
    }
    s << "\"/>\n";
  }
  for (const double x : {-epsilon, epsilon}) {
    s << "<circle class=\"focus\" cx=\"" << n(x) << "\" cy=\"0\" r=\"" << n(3 * stroke)
      << "\" fill=\"#c0392b\" stroke=\"none\"/>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& console) {
  if (path.empty() || path == "-") {
    console << content;
    console.flush();
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    if (!f.flush()) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace ovaloid::cli
