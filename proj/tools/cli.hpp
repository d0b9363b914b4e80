#pragma once

// Command-line driver: solve, profile, family, verify, diagnose.
//
// Exit codes: 0 success, 2 invalid arguments, 3 solver or calibration
// failure, 4 a verification or diagnostic value outside its tolerance.

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "output.hpp"

namespace ovaloid::cli {

enum class Command { solve, profile, family, verify, diagnose };
enum class OutputFormat { csv, json, svg };

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitTolerance = 4;

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Command command = Command::solve;
  std::vector<double> b;
  double epsilon = 1.0;
  std::size_t nodes = kDefaultNodeCount;
  std::optional<double> radius;          // nullopt: auto
  std::optional<OutputFormat> format;    // nullopt: command default
  std::string output_path;               // empty: stdout
  std::string report_path;               // family summary JSON
  std::size_t points = 256;              // profile samples
  std::optional<double> p1;              // verify newton pole; nullopt: auto
  QuadratureGrid grid{96, 256};          // verify starting grid

  ContourPolicy contour() const { return {nodes, radius}; }
  OutputFormat effective_format() const;
};

/// OVALOID_NODES if set (validated), otherwise 512.
std::size_t default_node_count();

/// Parses argv. Returns nullopt after printing help. Throws ValidationError.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out);

/// Rejects invalid combinations with an actionable message.
void validate(const RunConfig& cfg);

/// What a command produced: the machine-readable payload (destined for
/// --output) and a human-readable summary.
struct CommandResult {
  int exit_code = kExitOk;
  std::string machine;
  std::string human;
};

CommandResult run_solve(const RunConfig& cfg);
CommandResult run_profile(const RunConfig& cfg);
CommandResult run_family(const RunConfig& cfg);
CommandResult run_verify(const RunConfig& cfg);
CommandResult run_diagnose(const RunConfig& cfg);

/// Validate, dispatch, write outputs, map exceptions to exit codes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ovaloid::cli
