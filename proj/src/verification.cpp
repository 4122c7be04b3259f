#include "wavefan/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "wavefan/error.hpp"

namespace wavefan {
namespace {

struct Stencil {
  double d1;
  double d2;
};

Stencil central(double xm, double x0, double xp, double um, double u0, double up) {
  const double hm = x0 - xm;
  const double hp = xp - x0;
  const double sm = (u0 - um) / hm;
  const double sp = (up - u0) / hp;
  return {(hp * sm + hm * sp) / (hm + hp), 2.0 * (sp - sm) / (hm + hp)};
}

void require_burgers(const ProfileProblem& problem, const char* what) {
  if (!problem.flux.is_burgers()) {
    throw UnsupportedFlux(std::string(what) + " is only defined for the Burgers flux");
  }
}

// Defect (f'(v) - xi) v' - eps v'' of a transformed profile v(xi) = u(xi + shift) + lift at
// each resolved interior node whose stencil maps inside the mesh.
MarginReport translate_margin(const ProfileProblem& problem, const Profile& profile,
                              double shift, double lift) {
  const Mesh& mesh = profile.mesh;
  const std::size_t n = mesh.size();
  const double floor = kResolvedSlopeFraction * max_norm(profile.du);
  const std::vector<double> own = residual(problem, profile);
  MarginReport report;
  report.margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (mesh[i - 1] + shift < mesh.front() || mesh[i + 1] + shift > mesh.back()) continue;
    const HermiteSample centre = interpolate_with_derivatives(profile, mesh[i] + shift);
    if (std::abs(centre.slope) < floor) continue;
    const double vm = interpolate(profile, mesh[i - 1] + shift) + lift;
    const double v0 = centre.value + lift;
    const double vp = interpolate(profile, mesh[i + 1] + shift) + lift;
    const Stencil s = central(mesh[i - 1], mesh[i], mesh[i + 1], vm, v0, vp);
    const double defect = (problem.flux.df(v0) - mesh[i]) * s.d1 - problem.epsilon * s.d2;
    report.margin = std::min(report.margin, defect);
    report.noise_floor = std::max(report.noise_floor, std::abs(own[i]));
    ++report.nodes;
  }
  if (report.nodes == 0) {
    throw CoverageError("no resolved nodes where the translate is defined");
  }
  return report;
}

}  // namespace

double check_monotone(const Profile& profile, double uL, double uR) {
  if (uL == uR) return 0.0;
  const double sign = uR > uL ? 1.0 : -1.0;
  const double band =
      8.0 * std::numeric_limits<double>::epsilon() * std::max({1.0, std::abs(uL), std::abs(uR)});
  auto saturated = [band](double a, double b, double far) {
    return std::abs(a - far) <= band && std::abs(b - far) <= band;
  };
  const auto& u = profile.u;
  const double floor = kResolvedSlopeFraction * max_norm(profile.du);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    if (saturated(u[i], u[i + 1], uL) || saturated(u[i], u[i + 1], uR)) continue;
    const double slope = sign * (u[i + 1] - u[i]) / (profile.mesh[i + 1] - profile.mesh[i]);
    const bool resolved = std::max(std::abs(profile.du[i]), std::abs(profile.du[i + 1])) >= floor;
    if (resolved || slope < 0.0) best = std::min(best, slope);
  }
  return std::isinf(best) ? 0.0 : best;
}

double check_symmetry(const ProfileProblem& problem, const Profile& profile) {
  require_burgers(problem, "check_symmetry");
  const double c = problem.uL + problem.uR;
  double worst = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double mirror = c - profile.mesh[i];
    if (mirror < profile.mesh.front() || mirror > profile.mesh.back()) continue;
    worst = std::max(worst, std::abs(interpolate(profile, mirror) + profile.u[i] - c));
  }
  return worst;
}

double check_corner_expansion(const ProfileProblem& problem, const Profile& profile,
                              const CornerProfile& corner) {
  require_burgers(problem, "check_corner_expansion");
  if (!(problem.uL < problem.uR)) {
    throw InvalidParameter("check_corner_expansion requires uL < uR");
  }
  const double s = std::sqrt(problem.epsilon);
  const double mid = 0.5 * (problem.uL + problem.uR);
  const Profile cp = corner.as_profile();
  double worst = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double xi = profile.mesh[i];
    if (xi > mid) break;
    const double x = (xi - problem.uL) / s;
    if (x < corner.mesh.front() || x > corner.mesh.back()) {
      throw CoverageError("corner profile does not cover rescaled coordinate " +
                          std::to_string(x));
    }
    const double approx = s * interpolate(cp, x) + problem.uL;
    worst = std::max(worst, std::abs(profile.u[i] - approx));
  }
  return worst * std::exp(1.0 / s) / s;
}

double l1_window_error(const Profile& profile, const RiemannSolution& exact, double lo,
                       double hi) {
  if (!(lo < hi) || lo < profile.mesh.front() || hi > profile.mesh.back()) {
    throw InvalidParameter("l1_window_error: window must lie inside the mesh");
  }
  constexpr int kSamples = 20000;
  std::vector<double> pts;
  pts.reserve(profile.size() + kSamples + 16);
  for (int k = 0; k <= kSamples; ++k) pts.push_back(lo + (hi - lo) * k / kSamples);
  for (double x : profile.mesh.nodes()) {
    if (x > lo && x < hi) pts.push_back(x);
  }
  for (double x : exact.breakpoints()) {
    if (x > lo && x < hi) pts.push_back(x);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto gap = [&](double x) { return std::abs(interpolate(profile, x) - eval_riemann(exact, x)); };
  double total = 0.0;
  double prev = gap(pts.front());
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const double cur = gap(pts[k]);
    total += 0.5 * (prev + cur) * (pts[k] - pts[k - 1]);
    prev = cur;
  }
  return total;
}

MarginReport sliding_supersolution_margin(const ProfileProblem& problem, const Profile& profile,
                                          double lambda) {
  if (!(problem.uL < problem.uR)) {
    throw InvalidParameter("sliding translates are supersolutions only for uL < uR");
  }
  if (!(lambda >= 0.0)) throw InvalidParameter("sliding translate needs lambda >= 0");
  return translate_margin(problem, profile, lambda, 0.0);
}

MarginReport sweeping_supersolution_margin(const ProfileProblem& problem, const Profile& profile,
                                           double lambda, double K) {
  if (!(problem.uL > problem.uR)) {
    throw InvalidParameter("the sweeping family is used only for uL > uR");
  }
  if (!(lambda >= 0.0)) throw InvalidParameter("sweeping family needs lambda >= 0");
  const double needed = max_abs_second_derivative(problem.flux, problem.uR, problem.uL);
  if (!(K >= needed * (1.0 - 1e-12))) {
    throw InvalidParameter("K is below the Lipschitz constant of f' on [uR, uL]");
  }
  return translate_margin(problem, profile, -2.0 * K * lambda, lambda);
}

double sliding_constant_M(const ProfileProblem& problem, const Profile& profile) {
  const double lo = std::min(problem.uL, problem.uR);
  const double hi = std::max(problem.uL, problem.uR);
  const double sup_df = max_abs_derivative(problem.flux, lo, hi);
  const double lip = max_abs_second_derivative(problem.flux, lo, hi);
  return 1.0 + problem.epsilon + sup_df + max_norm(profile.du) * lip;
}

double barrier_operator_margin(const ProfileProblem& problem, const Profile& profile,
                               double lambda, double M, BarrierSide side) {
  double worst = -std::numeric_limits<double>::infinity();
  int used = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double xi = profile.mesh[i];
    const bool right = xi > M && side != BarrierSide::kLeft;
    const bool left = xi < -M && side != BarrierSide::kRight;
    if (!right && !left) continue;
    const double u_lambda = interpolate(profile, xi + lambda);
    const double v = profile.u[i];
    const double v_xi = profile.du[i];
    const double q = chord_slope_Q(problem.flux, u_lambda, v);
    const double g = std::exp(-std::abs(xi));
    const double g1 = right ? -g : g;
    const double value =
        problem.epsilon * g - (problem.flux.df(u_lambda) - xi) * g1 - v_xi * q * g;
    worst = std::max(worst, value);
    ++used;
  }
  if (used == 0) {
    throw CoverageError("no mesh nodes beyond M; enlarge the domain (domain_padding)");
  }
  return worst;
}

ProbeReport uniqueness_probe(const ProfileProblem& problem, const SolveOptions& options,
                             int n_guesses, std::uint64_t seed) {
  if (n_guesses < 2) throw InvalidParameter("uniqueness_probe needs at least 2 guesses");
  problem.validate();
  options.validate();
  const RiemannSolution exact = solve_exact(problem.flux, problem.uL, problem.uR);
  auto domain = truncate_domain(problem, options.tail_tol, exact);
  domain.first -= options.domain_padding;
  domain.second += options.domain_padding;
  const Mesh mesh = build_mesh(problem, options, exact, domain);
  const double lo_speed = std::min({exact.min_speed(), problem.flux.df(problem.uL),
                                    problem.flux.df(problem.uR)});
  const double hi_speed = std::max({exact.max_speed(), problem.flux.df(problem.uL),
                                    problem.flux.df(problem.uR)});
  const double root_eps = std::sqrt(problem.epsilon);
  // Guesses start far from the layer, so each run gets a longer Newton budget.
  SolveOptions probe_options = options;
  probe_options.max_iter = 20 * options.max_iter;

  std::vector<Profile> solutions;
  ProbeReport report;
  for (int k = 0; k < n_guesses; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> layers_dist(1, 3);
    std::uniform_real_distribution<double> centre_dist(lo_speed - 0.5, hi_speed + 0.5);
    std::uniform_real_distribution<double> log_width_dist(std::log(0.25), std::log(4.0));
    std::uniform_real_distribution<double> weight_dist(0.1, 1.0);
    const int layers = layers_dist(rng);
    std::vector<double> centres(layers);
    std::vector<double> widths(layers);
    std::vector<double> weights(layers);
    for (int j = 0; j < layers; ++j) {
      centres[j] = centre_dist(rng);
      widths[j] = root_eps * std::exp(log_width_dist(rng));
      weights[j] = weight_dist(rng);
    }
    auto ramp = [&](double x) {
      double acc = 0.0;
      for (int j = 0; j < layers; ++j) {
        acc += weights[j] * 0.5 * (1.0 + std::tanh((x - centres[j]) / widths[j]));
      }
      return acc;
    };
    const double r0 = ramp(mesh.front());
    const double r1 = ramp(mesh.back());
    std::vector<double> u(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) {
      const double t = (r1 > r0) ? (ramp(mesh[i]) - r0) / (r1 - r0) : 0.0;
      u[i] = problem.uL + (problem.uR - problem.uL) * t;
    }
    u.front() = problem.uL;
    u.back() = problem.uR;
    try {
      solutions.push_back(newton_solve(problem, make_profile(mesh, std::move(u)), probe_options).profile);
      ++report.converged;
    } catch (const NonConvergence&) {
      ++report.failed;
    } catch (const LinearSolverError&) {
      ++report.failed;
    }
  }
  if (report.converged < 2) {
    throw InconclusiveProbe("uniqueness_probe: fewer than 2 runs converged");
  }
  for (std::size_t a = 0; a < solutions.size(); ++a) {
    for (std::size_t b = a + 1; b < solutions.size(); ++b) {
      for (std::size_t i = 0; i < mesh.size(); ++i) {
        report.max_distance =
            std::max(report.max_distance, std::abs(solutions[a].u[i] - solutions[b].u[i]));
      }
    }
  }
  return report;
}

double translation_invariance_check(const ProfileProblem& problem, const Profile& profile,
                                    double lambda) {
  require_burgers(problem, "translation_invariance_check");
  const Mesh& mesh = profile.mesh;
  const auto& u = profile.u;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < mesh.size(); ++i) {
    // Node spacings and value differences are unchanged by the transformation.
    const Stencil s = central(mesh[i - 1], mesh[i], mesh[i + 1], u[i - 1], u[i], u[i + 1]);
    const double v = u[i] + lambda;
    const double x = mesh[i] + lambda;
    const double r = problem.epsilon * s.d2 - (problem.flux.df(v) - x) * s.d1;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace wavefan
