#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <sstream>

namespace ovaloid::cli {

namespace {

bool is_power_of_two(std::size_t n) { return n >= 8 && (n & (n - 1)) == 0; }

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::svg: return "svg";
  }
  return "?";
}

std::string command_name(Command c) {
  switch (c) {
    case Command::solve: return "solve";
    case Command::profile: return "profile";
    case Command::family: return "family";
    case Command::verify: return "verify";
    case Command::diagnose: return "diagnose";
  }
  return "?";
}

Json envelope(Command c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command_name(c);
  return j;
}

Json contour_json(const ContourSpec& spec) { return {{"radius", spec.radius}, {"nodes", spec.node_count}}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Solve one b and sample its boundary.
struct Member {
  double b = 0.0;
  SolveReport report;
  ProfileCurve curve;
  ContourSpec contour;
  bool univalent = false;
  double x_extent = 0.0;
  std::string error;
};

Member solve_member(double b, const RunConfig& cfg) {
  Member m;
  m.b = b;
  m.report = solve_ovaloid(b, cfg.epsilon, cfg.contour());
  m.contour = cfg.contour().resolve(m.report.params);
  m.curve = profile_curve(m.report.params, m.contour, cfg.points);
  m.univalent = is_univalent_profile(m.curve);
  m.x_extent = x_extent(m.curve);
  return m;
}

Json member_json(const Member& m) {
  Json j = solve_report_json(m.report);
  j["univalent"] = m.univalent;
  j["x_extent"] = m.x_extent;
  j["beyond_default_b_max"] = m.b > kDefaultBMax;
  j["contour"] = contour_json(m.contour);
  return j;
}

std::string profile_payload(const std::vector<Member>& members, OutputFormat format, double epsilon,
                            bool family) {
  std::vector<ProfileCurve> curves;
  for (const auto& m : members) {
    if (m.error.empty()) curves.push_back(m.curve);
  }
  switch (format) {
    case OutputFormat::csv:
      return family ? family_csv(curves) : profile_csv(curves.front());
    case OutputFormat::svg:
      return profiles_svg(curves, epsilon);
    case OutputFormat::json: {
      if (!family) {
        Json j = envelope(Command::profile);
        j["params"] = params_json(members.front().curve.params);
        j["univalent"] = members.front().univalent;
        j["x_extent"] = members.front().x_extent;
        j["points"] = profile_points_json(members.front().curve);
        return dump(j);
      }
      Json j = envelope(Command::family);
      Json arr = Json::array();
      for (const auto& m : members) {
        if (!m.error.empty()) continue;
        Json e = member_json(m);
        e["points"] = profile_points_json(m.curve);
        arr.push_back(e);
      }
      j["members"] = arr;
      return dump(j);
    }
  }
  return {};
}

std::string solve_table(const std::vector<Member>& members) {
  std::ostringstream s;
  s << std::left << std::setw(8) << "b" << std::setw(22) << "a" << std::setw(22) << "C" << std::setw(22) << "A"
    << std::setw(11) << "univalent" << "status\n";
  for (const auto& m : members) {
    s << std::setw(8) << m.b;
    if (!m.error.empty()) {
      s << "FAILED: " << m.error << '\n';
      continue;
    }
    s << std::setprecision(15) << std::setw(22) << m.report.params.a << std::setw(22) << m.report.params.C
      << std::setw(22) << m.report.A << std::setw(11) << (m.univalent ? "yes" : "NO") << "ok\n"
      << std::setprecision(6);
  }
  return s.str();
}

double resolve_p1(const RunConfig& cfg, double extent) {
  if (cfg.p1) return *cfg.p1;
  return extent < 3.0 ? 3.0 : 1.5 * extent;
}

}  // namespace

OutputFormat RunConfig::effective_format() const {
  if (format) return *format;
  switch (command) {
    case Command::profile:
    case Command::family: return OutputFormat::csv;
    default: return OutputFormat::json;
  }
}

std::size_t default_node_count() {
  const char* env = std::getenv("OVALOID_NODES");
  if (!env || !*env) return kDefaultNodeCount;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0 || !is_power_of_two(static_cast<std::size_t>(v))) {
    throw ValidationError(std::string("OVALOID_NODES must be a power of two >= 8 (got '") + env + "')");
  }
  return static_cast<std::size_t>(v);
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Axisymmetric two-point quadrature domains in R^4"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.nodes = default_node_count();
  std::string radius = "auto";
  std::string format;
  std::string p1 = "auto";

  auto common = [&](CLI::App* sub, bool with_b) {
    if (with_b) sub->add_option("--b", cfg.b, "prevertex parameter(s) b; comma-separated for family")->delimiter(',')->required();
    sub->add_option("--nodes", cfg.nodes, "contour node count (power of two; env OVALOID_NODES)");
    sub->add_option("--radius", radius, "contour radius: 'auto' or a number in (1, min(1/a,1/b))");
    sub->add_option("--output,-o", cfg.output_path, "output file (default: stdout)");
  };
  auto with_epsilon = [&](CLI::App* sub) { sub->add_option("--epsilon", cfg.epsilon, "focus location (default 1)"); };
  auto with_format = [&](CLI::App* sub) { sub->add_option("--format", format, "csv, json or svg"); };

  auto* solve = app.add_subcommand("solve", "solve a(b), calibrate C and report A");
  common(solve, true);
  with_epsilon(solve);
  with_format(solve);

  auto* profile = app.add_subcommand("profile", "boundary profile of one ovaloid");
  common(profile, true);
  with_epsilon(profile);
  with_format(profile);
  profile->add_option("--points", cfg.points, "boundary samples (>= 16)");

  auto* family = app.add_subcommand("family", "confocal family sharing the foci +-epsilon");
  common(family, true);
  with_epsilon(family);
  with_format(family);
  family->add_option("--points", cfg.points, "boundary samples per member (>= 16)");
  family->add_option("--report", cfg.report_path, "write the b -> (a, C, A) table as JSON here");

  auto* verify = app.add_subcommand("verify", "check the quadrature identity on harmonic test functions");
  common(verify, true);
  with_epsilon(verify);
  with_format(verify);
  verify->add_option("--p1", p1, "newton_kernel pole: 'auto' or a number outside the body");
  verify->add_option("--n-radial", cfg.grid.n_radial, "starting Gauss-Legendre nodes in rho");
  verify->add_option("--n-angular", cfg.grid.n_angular, "starting trapezoid nodes in theta");

  auto* diagnose = app.add_subcommand("diagnose", "finite-difference derivatives of G at the origin");
  common(diagnose, false);
  with_format(diagnose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ValidationError(e.what());
  }

  if (*solve) cfg.command = Command::solve;
  if (*profile) cfg.command = Command::profile;
  if (*family) cfg.command = Command::family;
  if (*verify) cfg.command = Command::verify;
  if (*diagnose) cfg.command = Command::diagnose;

  auto parse_real = [](const std::string& text, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !std::isfinite(v)) {
      throw ValidationError(std::string(what) + " must be 'auto' or a number (got '" + text + "')");
    }
    return v;
  };
  if (radius != "auto") cfg.radius = parse_real(radius, "--radius");
  if (p1 != "auto") cfg.p1 = parse_real(p1, "--p1");
  if (!format.empty()) {
    if (format == "csv") cfg.format = OutputFormat::csv;
    else if (format == "json") cfg.format = OutputFormat::json;
    else if (format == "svg") cfg.format = OutputFormat::svg;
    else throw ValidationError("--format must be csv, json or svg (got '" + format + "')");
  }
  return cfg;
}

void validate(const RunConfig& cfg) {
  if (!is_power_of_two(cfg.nodes)) throw ValidationError("--nodes must be a power of two >= 8");
  if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon)) throw ValidationError("--epsilon must be positive");
  if (cfg.radius && !(*cfg.radius > 1.0)) {
    throw ValidationError("--radius must exceed 1 (the contour encloses the unit circle)");
  }
  const auto fmt = cfg.effective_format();
  const bool single_b = cfg.command != Command::family && cfg.command != Command::diagnose;

  if (cfg.command != Command::diagnose) {
    if (cfg.b.empty()) throw ValidationError("--b requires at least one value");
    for (const double b : cfg.b) {
      if (!(b >= 0.0) || !(b < 1.0)) {
        std::ostringstream msg;
        msg << "b must be < 1 and >= 0 (got " << b << ")";
        throw ValidationError(msg.str());
      }
      if (b > kHardBMax) {
        std::ostringstream msg;
        msg << "b = " << b << " exceeds the supported maximum " << kHardBMax;
        throw ValidationError(msg.str());
      }
    }
  }
  if (single_b && cfg.b.size() != 1) {
    throw ValidationError(command_name(cfg.command) + " takes exactly one --b value; use 'family' for lists");
  }
  switch (cfg.command) {
    case Command::solve:
    case Command::verify:
    case Command::diagnose:
      if (fmt != OutputFormat::json) {
        throw ValidationError(command_name(cfg.command) + " writes JSON only (got --format " + format_name(fmt) + ")");
      }
      break;
    case Command::profile:
    case Command::family:
      if (cfg.points < 16) throw ValidationError("--points must be at least 16");
      break;
  }
  if (cfg.command == Command::family) {
    for (std::size_t i = 0; i < cfg.b.size(); ++i) {
      if (cfg.b[i] <= 0.0) throw ValidationError("family members need b > 0 (b = 0 is the ball limit; use solve)");
      if (i > 0 && !(cfg.b[i] > cfg.b[i - 1])) throw ValidationError("family --b list must be strictly ascending");
    }
  }
  if (cfg.command == Command::verify && cfg.b.front() == 0.0) {
    throw ValidationError("verify needs b > 0; at b = 0 the foci coalesce and the two-point identity degenerates");
  }
  if (cfg.command == Command::verify && (cfg.grid.n_radial < 2 || cfg.grid.n_angular < 8)) {
    throw ValidationError("verify grid must have n_radial >= 2 and n_angular >= 8");
  }
}

CommandResult run_solve(const RunConfig& cfg) {
  const Member m = solve_member(cfg.b.front(), cfg);
  Json j = envelope(Command::solve);
  j["report"] = member_json(m);
  return {kExitOk, dump(j), solve_table({m})};
}

CommandResult run_profile(const RunConfig& cfg) {
  const Member m = solve_member(cfg.b.front(), cfg);
  return {kExitOk, profile_payload({m}, cfg.effective_format(), cfg.epsilon, false), solve_table({m})};
}

CommandResult run_family(const RunConfig& cfg) {
  std::vector<std::future<Member>> futures;
  for (const double b : cfg.b) {
    futures.push_back(std::async(std::launch::async, [b, &cfg] {
      try {
        return solve_member(b, cfg);
      } catch (const std::exception& e) {
        Member failed;
        failed.b = b;
        failed.error = e.what();
        return failed;
      }
    }));
  }
  std::vector<Member> members;
  for (auto& f : futures) members.push_back(f.get());

  // Ascending b gives shrinking bodies: each member should enclose the next.
  bool nested = true;
  const Member* previous = nullptr;
  for (const auto& m : members) {
    if (!m.error.empty()) continue;
    if (previous && !encloses(previous->curve, m.curve)) nested = false;
    previous = &m;
  }
  const bool any_failed =
      std::any_of(members.begin(), members.end(), [](const Member& m) { return !m.error.empty(); });
  if (std::all_of(members.begin(), members.end(), [](const Member& m) { return !m.error.empty(); })) {
    throw SolverError("every family member failed; first error: " + members.front().error, {});
  }

  CommandResult result;
  result.machine = profile_payload(members, cfg.effective_format(), cfg.epsilon, true);
  result.human = solve_table(members) + (nested ? "profiles nested: yes\n" : "profiles nested: NO\n");
  result.exit_code = any_failed ? kExitSolver : kExitOk;

  if (!cfg.report_path.empty()) {
    Json report = envelope(Command::family);
    report["epsilon"] = cfg.epsilon;
    Json arr = Json::array();
    for (const auto& m : members) {
      if (m.error.empty()) {
        arr.push_back(member_json(m));
      } else {
        arr.push_back({{"b", m.b}, {"error", m.error}});
      }
    }
    report["members"] = arr;
    report["nested"] = nested;
    write_output(cfg.report_path, dump(report), std::cout);
  }
  return result;
}

CommandResult run_verify(const RunConfig& cfg) {
  const auto report = solve_ovaloid(cfg.b.front(), cfg.epsilon, cfg.contour());
  const auto f = taylor_series(report.params, cfg.contour().resolve(report.params));
  const double p1 = resolve_p1(cfg, boundary_x_extent(f));
  const auto tests = standard_test_functions(p1);

  constexpr std::size_t kMaxAngular = 8192;
  QuadratureGrid grid = cfg.grid;
  VerificationReport check = quadrature_identity_check(report, f, tests, grid);
  // A rejected test function cannot be rescued by a finer grid.
  auto refinable = [](const VerificationReport& r) {
    return std::any_of(r.results.begin(), r.results.end(),
                       [](const IdentityResult& t) { return t.rejected.empty() && !t.passed(); });
  };
  while (refinable(check) && grid.doubled().n_angular <= kMaxAngular) {
    grid = grid.doubled();
    check = quadrature_identity_check(report, f, tests, grid);
  }

  Json j = envelope(Command::verify);
  j["report"] = solve_report_json(report);
  j["series"] = {{"order", f.order()}, {"truncation_error", f.truncation_error}};
  j["p1"] = p1;
  j["verification"] = verification_json(check);

  std::ostringstream s;
  s << "b = " << report.params.b << ", a = " << std::setprecision(15) << report.params.a
    << ", C = " << report.params.C << ", A = " << report.A << std::setprecision(6) << "\n";
  s << "grid " << check.grid.n_radial << " x " << check.grid.n_angular << " (refined "
    << check.refined_grid.n_radial << " x " << check.refined_grid.n_angular << ")\n";
  s << std::left << std::setw(26) << "test" << std::setw(24) << "lhs" << std::setw(24) << "rhs" << std::setw(14)
    << "rel_error" << std::setw(14) << "refined" << "status\n";
  for (const auto& r : check.results) {
    s << std::setw(26) << r.test.name();
    if (!r.rejected.empty()) {
      s << "REJECTED: " << r.rejected << '\n';
      continue;
    }
    s << std::setprecision(15) << std::setw(24) << r.lhs << std::setw(24) << r.rhs << std::setprecision(3)
      << std::setw(14) << r.rel_error << std::setw(14) << r.rel_error_refined << (r.passed() ? "ok" : "FAIL")
      << std::setprecision(6) << '\n';
  }
  return {check.all_passed() ? kExitOk : kExitTolerance, dump(j), s.str()};
}

CommandResult run_diagnose(const RunConfig& cfg) {
  const ContourPolicy contour = cfg.contour();
  const auto suite = origin_derivative_suite(contour);
  const auto fit = fit_G_plane(contour);
  constexpr double kPlaneTolerance = 2e-2;
  const bool fit_ok = std::abs(fit.alpha + 0.25) <= kPlaneTolerance && std::abs(fit.beta - 0.25) <= kPlaneTolerance;
  const bool all_ok =
      fit_ok && std::all_of(suite.begin(), suite.end(), [](const DerivativeEstimate& d) { return d.within_tolerance(); });

  Json j = envelope(Command::diagnose);
  j.update(derivative_json(suite, fit));
  j["plane_fit"]["tolerance"] = kPlaneTolerance;
  j["all_within_tolerance"] = all_ok;

  std::ostringstream s;
  s << std::left << std::setw(22) << "quantity" << std::setw(24) << "estimate" << std::setw(10) << "target"
    << std::setw(11) << "tolerance" << "status\n";
  for (const auto& d : suite) {
    s << std::setw(22) << d.name << std::setprecision(12) << std::setw(24) << d.estimate << std::setprecision(6)
      << std::setw(10) << d.target << std::setw(11) << d.tolerance << (d.within_tolerance() ? "ok" : "FAIL") << '\n';
  }
  s << "plane fit G ~ alpha*delta + beta*b^2: alpha = " << fit.alpha << " (target -0.25), beta = " << fit.beta
    << " (target 0.25) " << (fit_ok ? "ok" : "FAIL") << '\n';
  return {all_ok ? kExitOk : kExitTolerance, dump(j), s.str()};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    CommandResult result;
    switch (cfg.command) {
      case Command::solve: result = run_solve(cfg); break;
      case Command::profile: result = run_profile(cfg); break;
      case Command::family: result = run_family(cfg); break;
      case Command::verify: result = run_verify(cfg); break;
      case Command::diagnose: result = run_diagnose(cfg); break;
    }
    // Machine output owns stdout when no file is given; the summary moves to stderr.
    const bool machine_to_console = cfg.output_path.empty() || cfg.output_path == "-";
    const bool summary_only = cfg.command == Command::verify || cfg.command == Command::diagnose;
    if (summary_only && machine_to_console) {
      out << result.human;
    } else {
      write_output(cfg.output_path, result.machine, out);
      (machine_to_console ? err : out) << result.human;
    }
    return result.exit_code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << '\n';
    if (!e.trace().empty()) {
      err << "F-trace (a, F):\n";
      for (const auto& [a, F] : e.trace()) err << "  " << format_number(a) << ", " << format_number(F) << '\n';
    }
    return kExitSolver;
  } catch (const CalibrationError& e) {
    err << "calibration failure: " << e.what() << '\n';
    return kExitSolver;
  } catch (const DomainError& e) {
    err << "numerical domain error: " << e.what() << '\n';
    return kExitSolver;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_command_line(argc, argv, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  if (!cfg) return kExitOk;
  return run(*cfg, out, err);
}

}  // namespace ovaloid::cli
