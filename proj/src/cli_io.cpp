#include "wavefan/cli_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "wavefan/corner_layer.hpp"
#include "wavefan/profile_bvp.hpp"
#include "wavefan/verification.hpp"

namespace wavefan {
namespace {

using Json = nlohmann::ordered_json;

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

bool parse_double(std::string_view text, double& value) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && end == text.data() + text.size() && !text.empty();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
  return out;
}

void require_writable(const std::string& path, const char* flag) {
  if (path.empty()) return;
  const auto parent = std::filesystem::absolute(path).parent_path();
  if (!std::filesystem::is_directory(parent)) {
    throw ParseError(std::string(flag) + ": directory does not exist for '" + path + "'");
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

ProfileProblem problem_of(const RunConfig& config) {
  ProfileProblem problem;
  problem.epsilon = config.epsilon();
  problem.uL = config.uL;
  problem.uR = config.uR;
  problem.flux = config.flux;
  return problem;
}

SolveOptions options_of(const RunConfig& config) {
  SolveOptions options;
  options.newton_tol = config.newton_tol;
  options.tail_tol = config.tail_tol;
  options.max_iter = config.max_iter;
  options.base_nodes = config.base_nodes;
  options.nodes_per_layer = config.nodes_per_layer;
  if (config.eps.size() > 1) options.continuation = config.eps;
  return options;
}

Json report_json(const SolveReport& report) {
  Json j;
  j["converged"] = report.converged;
  j["iterations"] = report.iterations;
  j["residual_history"] = report.residual_history;
  j["xi_min"] = report.xi_min;
  j["xi_max"] = report.xi_max;
  j["mesh_size"] = report.mesh_size;
  j["stage_epsilons"] = report.stage_epsilons;
  j["stage_iterations"] = report.stage_iterations;
  return j;
}

void write_json(const Json& j, const std::string& path) {
  if (path.empty()) return;
  auto out = open_output(path);
  out << j.dump(2) << '\n';
}

int run_solve(const RunConfig& config, std::ostream& out) {
  const ProfileProblem problem = problem_of(config);
  const SolveResult result = solve_profile(problem, options_of(config));
  const auto& r = result.report;
  out << "flux " << problem.flux.ToString() << ", uL=" << fmt_short(problem.uL)
      << ", uR=" << fmt_short(problem.uR) << ", eps=" << fmt_short(problem.epsilon) << '\n';
  out << "converged in " << r.iterations << " Newton iterations over " << r.stage_epsilons.size()
      << " stage(s); residual " << fmt_short(r.residual_history.back()) << '\n';
  out << "domain [" << fmt_short(r.xi_min) << ", " << fmt_short(r.xi_max) << "], "
      << r.mesh_size << " nodes\n";
  if (!config.out.empty()) write_profile(result.profile, config.out);
  write_json(report_json(r), config.report);
  return 0;
}

int run_corner(const RunConfig& config, std::ostream& out) {
  const CornerProfile corner = solve_corner(config.xi_min, config.xi_max);
  const std::vector<double> H = first_integral_H(corner);
  double max_h = 0.0;
  for (double h : H) max_h = std::max(max_h, std::abs(h));
  out << "corner profile on [" << fmt_short(config.xi_min) << ", " << fmt_short(config.xi_max)
      << "]: " << corner.size() << " nodes, max|H| = " << fmt_short(max_h) << '\n';
  if (config.xi_max >= 8.0) {
    const TailFit fit = fit_tail_rate(corner, 4.0, 8.0);
    out << "tail U - xi ~ " << fmt_short(fit.amplitude) << " exp(-" << fmt_short(fit.rate)
        << " xi)\n";
  }
  if (!config.out.empty()) {
    auto file = open_output(config.out);
    file << "xi,U,p,w,H\n";
    for (std::size_t i = 0; i < corner.size(); ++i) {
      file << fmt17(corner.mesh[i]) << ',' << fmt17(corner.U[i]) << ',' << fmt17(corner.p[i])
           << ',' << fmt17(corner.w[i]) << ',' << fmt17(H[i]) << '\n';
    }
  }
  return 0;
}

int run_riemann(const RunConfig& config, std::ostream& out) {
  const RiemannSolution exact = solve_exact(config.flux, config.uL, config.uR);
  out << describe(exact);
  if (!config.out.empty()) {
    const double lo = exact.min_speed() - 1.0;
    const double hi = exact.max_speed() + 1.0;
    constexpr int kSamples = 2000;
    auto file = open_output(config.out);
    file << "xi,u\n";
    for (int k = 0; k <= kSamples; ++k) {
      const double xi = lo + (hi - lo) * k / kSamples;
      file << fmt17(xi) << ',' << fmt17(eval_riemann(exact, xi)) << '\n';
    }
  }
  return 0;
}

struct CheckResult {
  std::string name;
  double value;
  double threshold;
  bool pass;
};

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "residual",        "monotone",        "first_integral", "symmetry",
      "corner_expansion", "sliding_margin", "sweeping_margin", "barrier_margin",
      "uniqueness",      "translation_invariance"};
  return names;
}

std::vector<CheckResult> run_checks(const RunConfig& config) {
  const ProfileProblem problem = problem_of(config);
  const SolveOptions options = options_of(config);
  const bool burgers = problem.flux.is_burgers();
  const bool all = config.check == "all";
  auto wanted = [&](const std::string& name) { return all || config.check == name; };
  const double floor = 10.0 * options.newton_tol;
  constexpr double kLambda = 0.1;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  const SolveResult solved = solve_profile(problem, options);
  const Profile& profile = solved.profile;
  std::vector<CheckResult> results;
  auto skip = [&](const std::string& name, bool applicable) {
    if (!applicable && !all) {
      throw InvalidParameter("check '" + name + "' does not apply to this problem");
    }
    return !applicable;
  };

  if (wanted("residual")) {
    const double r = max_norm(residual(problem, profile));
    results.push_back({"residual", r, options.newton_tol, r <= options.newton_tol});
  }
  if (wanted("monotone")) {
    const double m = check_monotone(profile, problem.uL, problem.uR);
    results.push_back({"monotone", m, 0.0, problem.uL == problem.uR ? m == 0.0 : m > 0.0});
  }
  if (wanted("first_integral") && !skip("first_integral", burgers && problem.uL != problem.uR)) {
    const double s = first_integral_spread(first_integral_H(profile, problem.epsilon), profile.du);
    results.push_back({"first_integral", s, 1e-4, s <= 1e-4});
  }
  if (wanted("symmetry") && !skip("symmetry", burgers)) {
    const double s = check_symmetry(problem, profile);
    results.push_back({"symmetry", s, 1e-6, s <= 1e-6});
  }
  if (wanted("corner_expansion") &&
      !skip("corner_expansion", burgers && problem.uL < problem.uR)) {
    const double root = std::sqrt(problem.epsilon);
    const double lo = (profile.mesh.front() - problem.uL) / root;
    const double hi = (0.5 * (problem.uL + problem.uR) - problem.uL) / root;
    const CornerProfile corner = solve_corner(std::min(lo, -4.0) - 1.0, std::max(hi, 0.0) + 1.0);
    const double r = check_corner_expansion(problem, profile, corner);
    results.push_back({"corner_expansion", r, kInf, std::isfinite(r)});
  }
  if (wanted("sliding_margin") && !skip("sliding_margin", problem.uL < problem.uR)) {
    const MarginReport m = sliding_supersolution_margin(problem, profile, kLambda);
    results.push_back({"sliding_margin", m.margin, floor, m.margin > floor});
  }
  if (wanted("sweeping_margin") && !skip("sweeping_margin", problem.uL > problem.uR)) {
    const double K = max_abs_second_derivative(problem.flux, problem.uR, problem.uL);
    const MarginReport m = sweeping_supersolution_margin(problem, profile, kLambda, K);
    results.push_back({"sweeping_margin", m.margin, floor, m.margin > floor});
  }
  if (wanted("barrier_margin") && !skip("barrier_margin", problem.uL != problem.uR)) {
    const double M = sliding_constant_M(problem, profile);
    const double reach = std::min(-profile.mesh.front(), profile.mesh.back());
    double value;
    if (reach > M + 0.5) {
      value = barrier_operator_margin(problem, profile, kLambda, M);
    } else {
      SolveOptions padded = options;
      padded.domain_padding = M + 1.0 - reach;
      const SolveResult wide = solve_profile(problem, padded);
      value = barrier_operator_margin(problem, wide.profile, kLambda, M);
    }
    results.push_back({"barrier_margin", value, 0.0, value < 0.0});
  }
  if (wanted("uniqueness")) {
    double value = std::numeric_limits<double>::quiet_NaN();
    bool pass = false;
    try {
      const ProbeReport probe = uniqueness_probe(problem, options, config.guesses, config.seed);
      value = probe.max_distance;
      pass = value <= 1e-6 && 4 * probe.converged >= 3 * config.guesses;
    } catch (const InconclusiveProbe&) {
    }
    results.push_back({"uniqueness", value, 1e-6, pass});
  }
  if (wanted("translation_invariance") && !skip("translation_invariance", burgers)) {
    const double base = translation_invariance_check(problem, profile, 0.0);
    const double moved = translation_invariance_check(problem, profile, 0.7);
    const double bound = 2.0 * base;
    results.push_back({"translation_invariance", moved, bound, moved <= bound && base <= bound});
  }
  return results;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  if (config.check != "all" && std::find(check_names().begin(), check_names().end(),
                                         config.check) == check_names().end()) {
    throw InvalidParameter("unknown check '" + config.check + "'");
  }
  const std::vector<CheckResult> results = run_checks(config);
  Json j = Json::object();
  bool ok = true;
  for (const auto& r : results) {
    Json entry;
    entry["value"] = std::isfinite(r.value) ? Json(r.value) : Json(nullptr);
    entry["threshold"] = std::isfinite(r.threshold) ? Json(r.threshold) : Json(nullptr);
    entry["pass"] = r.pass;
    j[r.name] = entry;
    ok = ok && r.pass;
  }
  out << j.dump(2) << '\n';
  write_json(j, config.report);
  return ok ? 0 : 1;
}

int run_sweep(const RunConfig& config, std::ostream& out) {
  ProfileProblem problem = problem_of(config);
  problem.epsilon = config.eps.front();
  SolveOptions options = options_of(config);
  options.continuation.clear();
  const auto sweep = continuation_sweep(problem, config.eps, options);
  const RiemannSolution exact = solve_exact(problem.flux, problem.uL, problem.uR);
  std::vector<LabeledProfile> labeled;
  out << "eps,l1_error\n";
  for (const auto& [eps, profile] : sweep) {
    const double lo = std::max(profile.mesh.front(), exact.min_speed() - 1.0);
    const double hi = std::min(profile.mesh.back(), exact.max_speed() + 1.0);
    out << fmt17(eps) << ',' << fmt17(l1_window_error(profile, exact, lo, hi)) << '\n';
    labeled.push_back({"eps=" + fmt_short(eps), profile});
  }
  if (!config.out.empty() || !config.svg.empty()) {
    const std::string csv = config.out.empty() ? config.svg + ".csv" : config.out;
    emit_plotdata(labeled, exact, csv, config.svg);
  }
  return 0;
}

// SVG line chart: axes with five ticks each, one polyline per series, legend.
void write_svg(const std::vector<std::string>& names, const std::vector<double>& x,
               const std::vector<std::vector<double>>& columns, const std::string& path) {
  constexpr double kW = 720, kH = 440, kL = 60, kR = 160, kT = 20, kB = 40;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!x.empty()) {
    x0 = x.front();
    x1 = x.back();
    y0 = std::numeric_limits<double>::infinity();
    y1 = -y0;
    for (const auto& col : columns) {
      for (double v : col) {
        y0 = std::min(y0, v);
        y1 = std::max(y1, v);
      }
    }
    if (!(y1 > y0)) {
      y0 -= 0.5;
      y1 += 0.5;
    }
  }
  auto px = [&](double v) { return kL + (v - x0) / (x1 - x0) * (kW - kL - kR); };
  auto py = [&](double v) { return kH - kB - (v - y0) / (y1 - y0) * (kH - kT - kB); };
  auto file = open_output(path);
  file << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
       << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  file << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  file << "<g stroke=\"black\"><line x1=\"" << kL << "\" y1=\"" << kH - kB << "\" x2=\""
       << kW - kR << "\" y2=\"" << kH - kB << "\"/><line x1=\"" << kL << "\" y1=\"" << kT
       << "\" x2=\"" << kL << "\" y2=\"" << kH - kB << "\"/></g>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = x0 + (x1 - x0) * k / 4;
    const double yv = y0 + (y1 - y0) * k / 4;
    file << "<text x=\"" << px(xv) << "\" y=\"" << kH - kB + 15
         << "\" text-anchor=\"middle\">" << fmt_short(xv) << "</text>\n";
    file << "<text x=\"" << kL - 5 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
         << fmt_short(yv) << "</text>\n";
  }
  file << "<text x=\"" << (kL + kW - kR) / 2 << "\" y=\"" << kH - 5
       << "\" text-anchor=\"middle\">xi</text>\n";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const char* color = kColors[c % std::size(kColors)];
    file << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < x.size(); ++k) {
      file << (k ? " " : "") << px(x[k]) << ',' << py(columns[c][k]);
    }
    file << "\"/>\n";
    const double ly = kT + 15 + 18 * c;
    file << "<line x1=\"" << kW - kR + 10 << "\" y1=\"" << ly << "\" x2=\"" << kW - kR + 30
         << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>";
    file << "<text x=\"" << kW - kR + 35 << "\" y=\"" << ly + 4 << "\">" << names[c]
         << "</text>\n";
  }
  file << "</svg>\n";
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::kSolve: return "solve";
    case Command::kCorner: return "corner";
    case Command::kRiemann: return "riemann";
    case Command::kVerify: return "verify";
    case Command::kSweep: return "sweep";
  }
  return "?";
}

std::vector<double> parse_schedule(const std::string& token) {
  std::vector<double> values;
  for (std::string_view part : split(token, ',')) {
    double v;
    if (!parse_double(part, v) || !(v > 0.0) || !std::isfinite(v)) {
      throw ParseError("--eps: '" + std::string(part) + "' is not a positive number in '" +
                       token + "'");
    }
    if (!values.empty() && !(v < values.back())) {
      throw ParseError("--eps: schedule '" + token + "' is not strictly decreasing at '" +
                       std::string(part) + "'");
    }
    values.push_back(v);
  }
  return values;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"Viscous wave fan profiles for scalar Riemann problems", "wavefan"};
  app.set_config("--config", "", "key=value file with defaults for the flags below");
  app.allow_config_extras(CLI::config_extras_mode::error);
  std::string command;
  // Comma-separated values arrive split when read from a config file, so both
  // list-valued flags are collected as tokens and rejoined.
  std::vector<std::string> flux{"burgers"};
  std::vector<std::string> eps{"0.05"};
  app.add_option("command", command, "solve | corner | riemann | verify | sweep")
      ->required()
      ->check(CLI::IsMember({"solve", "corner", "riemann", "verify", "sweep"}));
  app.add_option("--flux", flux, "burgers or poly:c0,c1,...")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--ul", config.uL, "left state")->capture_default_str();
  app.add_option("--ur", config.uR, "right state")->capture_default_str();
  app.add_option("--eps", eps, "epsilon or a decreasing list")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--tol", config.newton_tol, "Newton residual tolerance")->capture_default_str();
  app.add_option("--tail-tol", config.tail_tol, "far-field truncation tolerance")
      ->capture_default_str();
  app.add_option("--max-iter", config.max_iter, "Newton iterations per stage")
      ->capture_default_str();
  app.add_option("--base-nodes", config.base_nodes, "uniform mesh intervals")
      ->capture_default_str();
  app.add_option("--nodes-per-layer", config.nodes_per_layer, "nodes added per wave")
      ->capture_default_str();
  app.add_option("--xi-min", config.xi_min, "corner: left end")->capture_default_str();
  app.add_option("--xi-max", config.xi_max, "corner: right end")->capture_default_str();
  app.add_option("--check", config.check, "verify: check name or 'all'")->capture_default_str();
  app.add_option("--seed", config.seed, "uniqueness probe seed")
      ->envname("WAVEFAN_SEED")
      ->capture_default_str();
  app.add_option("--guesses", config.guesses, "uniqueness probe guesses")->capture_default_str();
  app.add_option("--out", config.out, "output CSV");
  app.add_option("--report", config.report, "output JSON report");
  app.add_option("--svg", config.svg, "sweep: SVG chart");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }
  if (command == "solve") config.command = Command::kSolve;
  if (command == "corner") config.command = Command::kCorner;
  if (command == "riemann") config.command = Command::kRiemann;
  if (command == "verify") config.command = Command::kVerify;
  if (command == "sweep") config.command = Command::kSweep;
  config.flux = FluxSpec::Parse(join(flux));
  config.eps = parse_schedule(join(eps));
  if (!(config.newton_tol > 0.0)) throw ParseError("--tol must be positive");
  if (!(config.tail_tol > 0.0 && config.tail_tol < 1.0)) {
    throw ParseError("--tail-tol must lie in (0, 1)");
  }
  if (config.max_iter < 1) throw ParseError("--max-iter must be at least 1");
  if (config.base_nodes < 2 || config.nodes_per_layer < 0) {
    throw ParseError("--base-nodes must be >= 2 and --nodes-per-layer >= 0");
  }
  if (config.guesses < 2) throw ParseError("--guesses must be at least 2");
  if (!std::isfinite(config.uL) || !std::isfinite(config.uR)) {
    throw ParseError("--ul and --ur must be finite");
  }
  require_writable(config.out, "--out");
  require_writable(config.report, "--report");
  require_writable(config.svg, "--svg");
  return config;
}

RunConfig parse_config(int argc, const char* const* argv) {
  return parse_config(std::vector<std::string>(argv + 1, argv + argc));
}

void write_profile(const Profile& profile, std::ostream& out) {
  out << "xi,u,du\n";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    out << fmt17(profile.mesh[i]) << ',' << fmt17(profile.u[i]) << ',' << fmt17(profile.du[i])
        << '\n';
  }
}

void write_profile(const Profile& profile, const std::string& path) {
  auto out = open_output(path);
  write_profile(profile, out);
  if (!out) throw IoError("write to '" + path + "' failed");
}

Profile read_profile(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("line 1: missing header 'xi,u,du'");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "xi,u,du") throw ParseError("line 1: expected header 'xi,u,du', got '" + line + "'");
  std::vector<double> xi, u, du;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      throw ParseError("line " + std::to_string(number) + ": expected 3 fields, got " +
                       std::to_string(fields.size()));
    }
    double v[3];
    for (int k = 0; k < 3; ++k) {
      if (!parse_double(fields[k], v[k]) || !std::isfinite(v[k])) {
        throw ParseError("line " + std::to_string(number) + ": bad number '" +
                         std::string(fields[k]) + "'");
      }
    }
    if (!xi.empty() && !(v[0] > xi.back())) {
      throw ParseError("line " + std::to_string(number) + ": xi not strictly increasing");
    }
    xi.push_back(v[0]);
    u.push_back(v[1]);
    du.push_back(v[2]);
  }
  if (xi.size() < 3) throw ParseError("profile needs at least 3 rows, got " +
                                      std::to_string(xi.size()));
  return Profile{Mesh(std::move(xi)), std::move(u), std::move(du)};
}

Profile read_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return read_profile(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void emit_plotdata(const std::vector<LabeledProfile>& profiles,
                   const std::optional<RiemannSolution>& reference, const std::string& csv_path,
                   const std::string& svg_path, int samples) {
  if (samples < 2) throw InvalidParameter("emit_plotdata needs at least 2 samples");
  std::vector<std::string> names;
  for (const auto& p : profiles) names.push_back(p.label);
  if (reference) names.push_back("exact");
  std::vector<double> x;
  std::vector<std::vector<double>> columns(names.size());
  if (!profiles.empty()) {
    double lo = profiles.front().profile.mesh.front();
    double hi = profiles.front().profile.mesh.back();
    for (const auto& p : profiles) {
      lo = std::min(lo, p.profile.mesh.front());
      hi = std::max(hi, p.profile.mesh.back());
    }
    for (int k = 0; k < samples; ++k) x.push_back(lo + (hi - lo) * k / (samples - 1));
    for (std::size_t c = 0; c < profiles.size(); ++c) {
      for (double v : x) columns[c].push_back(interpolate(profiles[c].profile, v));
    }
    if (reference) {
      for (double v : x) columns.back().push_back(eval_riemann(*reference, v));
    }
  }
  {
    auto out = open_output(csv_path);
    out << "xi";
    for (const auto& n : names) out << ',' << n;
    out << '\n';
    for (std::size_t k = 0; k < x.size(); ++k) {
      out << fmt17(x[k]);
      for (const auto& col : columns) out << ',' << fmt17(col[k]);
      out << '\n';
    }
  }
  if (!svg_path.empty()) write_svg(names, x, columns, svg_path);
}

int run(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::kSolve: return run_solve(config, out);
    case Command::kCorner: return run_corner(config, out);
    case Command::kRiemann: return run_riemann(config, out);
    case Command::kVerify: return run_verify(config, out);
    case Command::kSweep: return run_sweep(config, out);
  }
  return 2;
}

}  // namespace wavefan
