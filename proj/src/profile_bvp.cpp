#include "wavefan/profile_bvp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace wavefan {
namespace {

struct Window {
  double center;
  double width;
  double amplitude;
};

// Cumulative node density S(xi) - S(lo) for 1 + sum_k A_k exp(-((xi-c_k)/w_k)^2).
struct Density {
  double lo;
  std::vector<Window> windows;

  double rho(double xi) const {
    double r = 1.0;
    for (const Window& w : windows) {
      const double z = (xi - w.center) / w.width;
      r += w.amplitude * std::exp(-z * z);
    }
    return r;
  }

  double cumulative(double xi) const {
    double s = xi - lo;
    for (const Window& w : windows) {
      const double k = w.amplitude * w.width * std::sqrt(std::numbers::pi) / 2.0;
      s += k * (std::erf((xi - w.center) / w.width) - std::erf((lo - w.center) / w.width));
    }
    return s;
  }
};

double invert_cumulative(const Density& density, double target, double lo, double hi) {
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double s = density.cumulative(x) - target;
    if (s > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    double next = x - s / density.rho(x);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4e-16 * std::max(1.0, std::abs(x)) || hi - lo <= 0.0) {
      return next;
    }
    x = next;
  }
  return x;
}

void pin_boundary(const ProfileProblem& problem, Profile& p) {
  p.u.front() = problem.uL;
  p.u.back() = problem.uR;
  p.du = reconstruct_slope(p.mesh, p.u);
}

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", r);
  return buf;
}

std::string stage_label(double eps) {
  std::ostringstream os;
  os.precision(17);
  os << "eps=" << eps;
  return os.str();
}

}  // namespace

void ProfileProblem::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InvalidParameter("epsilon must be a finite positive number");
  }
  if (!std::isfinite(uL) || !std::isfinite(uR)) {
    throw InvalidParameter("far-field states must be finite");
  }
}

void SolveOptions::validate() const {
  if (!(newton_tol > 0.0)) throw InvalidParameter("newton_tol must be positive");
  if (max_iter < 1) throw InvalidParameter("max_iter must be at least 1");
  if (!(damping > 0.0 && damping < 1.0)) throw InvalidParameter("damping must lie in (0,1)");
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw InvalidParameter("tail_tol must lie in (0,1)");
  if (base_nodes < 2) throw InvalidParameter("base_nodes must be at least 2");
  if (nodes_per_layer < 0) throw InvalidParameter("nodes_per_layer must be non-negative");
  if (domain_padding < 0.0) throw InvalidParameter("domain_padding must be non-negative");
  for (std::size_t k = 0; k < continuation.size(); ++k) {
    if (!(continuation[k] > 0.0)) throw InvalidParameter("continuation values must be positive");
    if (k > 0 && !(continuation[k] < continuation[k - 1])) {
      throw InvalidParameter("continuation schedule must be strictly decreasing");
    }
  }
}

std::pair<double, double> truncate_domain(const ProfileProblem& problem, double tail_tol) {
  return truncate_domain(problem, tail_tol, solve_exact(problem.flux, problem.uL, problem.uR));
}

std::pair<double, double> truncate_domain(const ProfileProblem& problem, double tail_tol,
                                          const RiemannSolution& exact) {
  problem.validate();
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw InvalidParameter("tail_tol must lie in (0,1)");
  }
  const double aL = problem.flux.df(problem.uL);
  const double aR = problem.flux.df(problem.uR);
  const double m = std::min({aL, aR, exact.min_speed()});
  const double M = std::max({aL, aR, exact.max_speed()});
  const double eps = problem.epsilon;
  const double delta = std::sqrt(2.0 * eps * std::log(1.0 / tail_tol)) + std::sqrt(eps);
  return {m - delta, M + delta};
}

Mesh build_mesh(const ProfileProblem& problem, const SolveOptions& options,
                const RiemannSolution& exact, std::pair<double, double> domain) {
  const auto [lo, hi] = domain;
  const double length = hi - lo;
  std::vector<double> centers = exact.breakpoints();
  if (centers.empty()) centers.push_back(problem.flux.df(problem.uL));
  std::sort(centers.begin(), centers.end());
  const double merge_tol = 1e-9 * std::max(1.0, length);
  centers.erase(std::unique(centers.begin(), centers.end(),
                            [&](double a, double b) { return std::abs(a - b) <= merge_tol; }),
                centers.end());

  Density density{lo, {}};
  const double width = 2.0 * std::sqrt(problem.epsilon);
  if (options.nodes_per_layer > 0) {
    const double amplitude = length * options.nodes_per_layer /
                             (options.base_nodes * width * std::sqrt(std::numbers::pi));
    for (double c : centers) density.windows.push_back({c, width, amplitude});
  }
  int intervals = options.base_nodes +
                  static_cast<int>(density.windows.size()) * options.nodes_per_layer;
  if (intervals % 2 != 0) ++intervals;

  const double total = density.cumulative(hi);
  std::vector<double> nodes(static_cast<std::size_t>(intervals) + 1);
  nodes.front() = lo;
  nodes.back() = hi;
  for (int i = 1; i < intervals; ++i) {
    const double target = total * (static_cast<double>(i) / intervals);
    nodes[i] = invert_cumulative(density, target, nodes[i - 1], hi);
  }
  return Mesh(std::move(nodes));
}

Profile initial_guess(const ProfileProblem& problem, const Mesh& mesh) {
  return initial_guess(problem, mesh, solve_exact(problem.flux, problem.uL, problem.uR));
}

Profile initial_guess(const ProfileProblem& problem, const Mesh& mesh,
                      const RiemannSolution& exact) {
  constexpr int kTaps = 64;
  const double width = std::sqrt(problem.epsilon);
  std::vector<double> u(mesh.size());
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const double first = eval_riemann(exact, mesh[i] - 0.5 * width);
    double acc = 0.0;
    bool flat = true;
    for (int j = 0; j < kTaps; ++j) {
      const double offset = width * ((j + 0.5) / kTaps - 0.5);
      const double v = eval_riemann(exact, mesh[i] + offset);
      flat = flat && v == first;
      acc += v;
    }
    // Averaging equal samples must not perturb an exact constant state.
    u[i] = flat ? first : acc / kTaps;
  }
  u.front() = problem.uL;
  u.back() = problem.uR;
  return make_profile(mesh, std::move(u));
}

std::vector<double> residual(const ProfileProblem& problem, const Profile& profile) {
  return residual(problem, profile.mesh, profile.u);
}

std::vector<double> residual(const ProfileProblem& problem, const Mesh& mesh,
                             std::span<const double> u) {
  const std::size_t n = mesh.size();
  if (u.size() != n) throw InvalidParameter("profile values do not match mesh size");
  const double eps = problem.epsilon;
  std::vector<double> r(n);
  r.front() = u.front() - problem.uL;
  r.back() = u.back() - problem.uR;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hm = mesh[i] - mesh[i - 1];
    const double hp = mesh[i + 1] - mesh[i];
    const double sm = (u[i] - u[i - 1]) / hm;
    const double sp = (u[i + 1] - u[i]) / hp;
    const double d2 = 2.0 * (sp - sm) / (hm + hp);
    const double d1 = (hp * sm + hm * sp) / (hm + hp);
    r[i] = eps * d2 - (problem.flux.df(u[i]) - mesh[i]) * d1;
  }
  return r;
}

Tridiagonal jacobian(const ProfileProblem& problem, const Profile& profile) {
  return jacobian(problem, profile.mesh, profile.u);
}

Tridiagonal jacobian(const ProfileProblem& problem, const Mesh& mesh, std::span<const double> u) {
  const std::size_t n = mesh.size();
  if (u.size() != n) throw InvalidParameter("profile values do not match mesh size");
  const double eps = problem.epsilon;
  Tridiagonal j(n);
  j.diag.front() = 1.0;
  j.upper.front() = 0.0;
  j.diag.back() = 1.0;
  j.lower.back() = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hm = mesh[i] - mesh[i - 1];
    const double hp = mesh[i + 1] - mesh[i];
    const double hs = hm + hp;
    const double a1 = -hp / (hm * hs);
    const double b1 = (hp - hm) / (hm * hp);
    const double c1 = hm / (hp * hs);
    const double a2 = 2.0 / (hm * hs);
    const double b2 = -2.0 / (hm * hp);
    const double c2 = 2.0 / (hp * hs);
    const double d1 = a1 * u[i - 1] + b1 * u[i] + c1 * u[i + 1];
    const double drift = problem.flux.df(u[i]) - mesh[i];
    j.lower[i - 1] = eps * a2 - drift * a1;
    j.diag[i] = eps * b2 - drift * b1 - problem.flux.d2f(u[i]) * d1;
    j.upper[i] = eps * c2 - drift * c1;
  }
  return j;
}

SolveResult newton_solve(const ProfileProblem& problem, const Profile& guess,
                         const SolveOptions& options) {
  problem.validate();
  options.validate();
  const std::size_t n = guess.size();
  if (guess.u.size() != n) throw InvalidParameter("guess values do not match mesh size");
  if (std::abs(guess.u.front() - problem.uL) > options.newton_tol ||
      std::abs(guess.u.back() - problem.uR) > options.newton_tol) {
    throw InvalidParameter("initial guess does not satisfy the boundary values");
  }

  SolveReport report;
  report.xi_min = guess.mesh.front();
  report.xi_max = guess.mesh.back();
  report.mesh_size = static_cast<int>(n);
  report.stage_epsilons = {problem.epsilon};

  std::vector<double> u = guess.u;
  std::vector<double> r = residual(problem, guess.mesh, u);
  double rn = max_norm(r);
  int iter = 0;
  while (true) {
    report.residual_history.push_back(rn);
    if (rn <= options.newton_tol) break;
    if (iter >= options.max_iter) {
      report.iterations = iter;
      report.stage_iterations = {iter};
      throw NonConvergence("newton_solve: no convergence within max_iter (residual " +
                               format_residual(rn) + ")",
                           report);
    }
    Tridiagonal j = jacobian(problem, guess.mesh, u);
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = -r[i];
    const std::vector<double> step = solve_tridiagonal(std::move(j), std::move(rhs));

    double t = 1.0;
    bool accepted = false;
    std::vector<double> trial(n);
    for (int halving = 0; halving <= options.max_halvings; ++halving) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = u[i] + t * step[i];
      std::vector<double> rt = residual(problem, guess.mesh, trial);
      const double rtn = max_norm(rt);
      if (std::isfinite(rtn) && rtn < rn) {
        u.swap(trial);
        r.swap(rt);
        rn = rtn;
        accepted = true;
        break;
      }
      t *= options.damping;
    }
    ++iter;
    if (!accepted) {
      report.iterations = iter;
      report.stage_iterations = {iter};
      throw NonConvergence("newton_solve: line search failed to reduce the residual (residual " +
                               format_residual(rn) + ")",
                           report);
    }
  }
  report.converged = true;
  report.iterations = iter;
  report.stage_iterations = {iter};
  return {make_profile(guess.mesh, std::move(u)), std::move(report)};
}

std::vector<double> default_continuation(double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidParameter("epsilon must be positive");
  std::vector<double> schedule;
  double e = std::max(epsilon, 1.0);
  while (e > epsilon) {
    schedule.push_back(e);
    e *= 0.5;
  }
  schedule.push_back(epsilon);
  return schedule;
}

namespace {

SolveResult run_stages(const ProfileProblem& problem, const SolveOptions& options,
                       const RiemannSolution& exact, const std::vector<double>& schedule,
                       const Profile* seed, SolveReport& totals) {
  SolveResult result;
  const Profile* previous = seed;
  for (double eps : schedule) {
    ProfileProblem stage = problem;
    stage.epsilon = eps;
    auto domain = truncate_domain(stage, options.tail_tol, exact);
    domain.first -= options.domain_padding;
    domain.second += options.domain_padding;
    const Mesh mesh = build_mesh(stage, options, exact, domain);
    Profile guess;
    if (previous == nullptr) {
      guess = initial_guess(stage, mesh, exact);
    } else {
      guess = resample(*previous, mesh);
      pin_boundary(stage, guess);
    }
    try {
      result = newton_solve(stage, guess, options);
    } catch (const NonConvergence& e) {
      SolveReport rep = e.report();
      rep.iterations += totals.iterations;
      throw NonConvergence(std::string(e.what()) + " [continuation stage " + stage_label(eps) + "]",
                           rep);
    } catch (const LinearSolverError& e) {
      throw LinearSolverError(std::string(e.what()) + " [continuation stage " +
                              stage_label(eps) + "]");
    }
    totals.iterations += result.report.iterations;
    totals.stage_epsilons.push_back(eps);
    totals.stage_iterations.push_back(result.report.iterations);
    previous = &result.profile;
  }
  return result;
}

}  // namespace

SolveResult solve_profile(const ProfileProblem& problem, const SolveOptions& options) {
  problem.validate();
  options.validate();
  std::vector<double> schedule = options.continuation;
  if (problem.uL == problem.uR) {
    // The constant state is the solution; no homotopy is needed to reach it.
    schedule = {problem.epsilon};
  } else if (schedule.empty()) {
    schedule = default_continuation(problem.epsilon);
  } else if (schedule.back() != problem.epsilon) {
    throw InvalidParameter("continuation schedule must end at the problem's epsilon");
  }
  const RiemannSolution exact = solve_exact(problem.flux, problem.uL, problem.uR);
  SolveReport totals;
  SolveResult result = run_stages(problem, options, exact, schedule, nullptr, totals);
  result.report.iterations = totals.iterations;
  result.report.stage_epsilons = totals.stage_epsilons;
  result.report.stage_iterations = totals.stage_iterations;
  return result;
}

std::vector<std::pair<double, Profile>> continuation_sweep(const ProfileProblem& problem,
                                                           const std::vector<double>& eps_list,
                                                           const SolveOptions& options) {
  problem.validate();
  if (eps_list.empty()) throw InvalidParameter("continuation_sweep: empty epsilon list");
  for (std::size_t k = 0; k < eps_list.size(); ++k) {
    if (!(eps_list[k] > 0.0)) throw InvalidParameter("continuation_sweep: epsilon must be positive");
    if (k > 0 && !(eps_list[k] < eps_list[k - 1])) {
      throw InvalidParameter("continuation_sweep: epsilon list must be strictly decreasing");
    }
  }
  std::vector<std::pair<double, Profile>> out;
  ProfileProblem first = problem;
  first.epsilon = eps_list.front();
  SolveOptions first_options = options;
  first_options.continuation.clear();
  SolveResult current = solve_profile(first, first_options);
  out.emplace_back(eps_list.front(), current.profile);

  const RiemannSolution exact = solve_exact(problem.flux, problem.uL, problem.uR);
  for (std::size_t k = 1; k < eps_list.size(); ++k) {
    SolveReport totals;
    current = run_stages(problem, options, exact, {eps_list[k]}, &current.profile, totals);
    out.emplace_back(eps_list[k], current.profile);
  }
  return out;
}

}  // namespace wavefan
