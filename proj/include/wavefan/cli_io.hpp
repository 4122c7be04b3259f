#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wavefan/error.hpp"
#include "wavefan/flux.hpp"
#include "wavefan/mesh.hpp"
#include "wavefan/riemann.hpp"

namespace wavefan {

enum class Command { kSolve, kCorner, kRiemann, kVerify, kSweep };

std::string to_string(Command command);

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct RunConfig {
  Command command = Command::kSolve;
  FluxSpec flux = FluxSpec::Burgers();
  double uL = -1.0;
  double uR = 1.0;
  /// Single value or strictly decreasing schedule; the last entry is the target.
  std::vector<double> eps{0.05};
  double newton_tol = 1e-8;
  double tail_tol = 1e-12;
  int max_iter = 50;
  int base_nodes = 2000;
  int nodes_per_layer = 8000;
  double xi_min = -8.0;
  double xi_max = 10.0;
  std::string check = "all";
  std::uint64_t seed = kDefaultSeed;
  int guesses = 8;
  std::string out;
  std::string report;
  std::string svg;

  double epsilon() const { return eps.back(); }
};

/// Raised by parse_config for -h/--help; what() holds the usage text.
class HelpRequested : public Error {
 public:
  using Error::Error;
};

/// Parses "<command> [--flag value ...]". A --config file of key=value lines
/// (keys are the long flag names) supplies defaults; explicit flags win and
/// WAVEFAN_SEED sets the default seed. Throws ParseError naming the
/// offending token.
RunConfig parse_config(const std::vector<std::string>& args);
RunConfig parse_config(int argc, const char* const* argv);

/// Comma-separated, strictly decreasing list of positive reals.
std::vector<double> parse_schedule(const std::string& token);

/// CSV with header xi,u,du and one %.17g row per node.
void write_profile(const Profile& profile, const std::string& path);
void write_profile(const Profile& profile, std::ostream& out);
/// Inverse of write_profile. ParseError with the line number on malformed
/// input, non-increasing xi or fewer than 3 rows; IoError when unreadable.
Profile read_profile(const std::string& path);
Profile read_profile(std::istream& in);

struct LabeledProfile {
  std::string label;
  Profile profile;
};

/// CSV with xi plus one column per profile and, when given, the exact
/// solution, on a common uniform grid spanning the profiles (header only for
/// an empty list). A non-empty svg_path also writes a line chart with one
/// polyline per column.
void emit_plotdata(const std::vector<LabeledProfile>& profiles,
                   const std::optional<RiemannSolution>& reference, const std::string& csv_path,
                   const std::string& svg_path = "", int samples = 2001);

/// Executes a parsed command; text goes to out. Returns the process exit
/// code: 0 on success, 1 when a verification check fails.
int run(const RunConfig& config, std::ostream& out);

}  // namespace wavefan
