// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails or overruns its time budget.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "wavefan/cli_io.hpp"
#include "wavefan/verification.hpp"

using namespace wavefan;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

ProfileProblem burgers(double eps, double uL, double uR) {
  return ProfileProblem{eps, uL, uR, FluxSpec::Burgers()};
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void constant_case(Outcome& o) {
  const ProfileProblem p = burgers(0.2, 0.3, 0.3);
  const SolveResult r = solve_profile(p);
  bool all_equal = true;
  for (double v : r.profile.u) all_equal = all_equal && v == 0.3;
  const double res = max_norm(residual(p, r.profile));
  o.detail << "residual " << sci(res);
  o.require(all_equal, "u == 0.3 everywhere");
  o.require(res <= 1e-12, "residual <= 1e-12");
}

void burgers_shock(Outcome& o) {
  const ProfileProblem p = burgers(0.05, 1.0, -1.0);
  const SolveResult r = solve_profile(p);
  const double mono = check_monotone(r.profile, p.uL, p.uR);
  const double mid = std::abs(interpolate(r.profile, 0.0));
  const double spread = first_integral_spread(first_integral_H(r.profile, p.epsilon), r.profile.du);
  o.detail << r.report.iterations << " Newton iterations, |u(0)| " << sci(mid) << ", H spread "
           << sci(spread);
  o.require(r.report.iterations <= 30, "iterations <= 30");
  o.require(mono > 0.0, "strictly decreasing");
  o.require(mid <= 1e-8, "|u(0)| <= 1e-8");
  o.require(spread <= 1e-5, "H spread <= 1e-5");
}

void rarefaction_sweep(Outcome& o) {
  const std::vector<double> eps{0.1, 0.05, 0.025, 0.0125};
  SolveOptions opts;
  opts.domain_padding = 0.5;
  const auto sweep = continuation_sweep(burgers(eps.front(), -1.0, 1.0), eps, opts);
  const RiemannSolution exact = solve_exact(FluxSpec::Burgers(), -1.0, 1.0);
  std::vector<double> err;
  for (const auto& [e, profile] : sweep) err.push_back(l1_window_error(profile, exact, -2.0, 2.0));
  o.detail << "L1 errors";
  for (double e : err) o.detail << ' ' << sci(e);
  for (std::size_t k = 1; k < err.size(); ++k) o.require(err[k] < err[k - 1], "strict decrease");
  o.require(err.back() <= err.front() / 2.0, "error(0.0125) <= error(0.1)/2");
}

void corner_profile(Outcome& o) {
  const CornerProfile c = solve_corner(-8.0, 10.0);
  const BarrierUpper b = make_barrier_upper(10.0);
  bool bracketed = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    bracketed = bracketed && barrier_lower(c.mesh[i]) < c.U[i] && c.U[i] < barrier_upper(c.mesh[i], b);
  }
  double max_h = 0.0;
  for (double h : first_integral_H(c)) max_h = std::max(max_h, std::abs(h));
  const TailFit fit = fit_tail_rate(c, 4.0, 8.0);
  const double at_minus4 = interpolate(c.as_profile(), -4.0);
  o.detail << c.size() << " nodes, max|H| " << sci(max_h) << ", tail rate " << sci(fit.rate)
           << ", U(-4) " << sci(at_minus4);
  o.require(bracketed, "max{0,xi} < U < upper barrier");
  o.require(max_h <= 1e-8, "max|H| <= 1e-8");
  o.require(fit.rate >= 0.9 && fit.rate <= 1.1, "tail rate in [0.9, 1.1]");
  o.require(at_minus4 < 1e-3, "U(-4) < 1e-3");
}

void corner_remainder(Outcome& o) {
  const CornerProfile corner = solve_corner(-10.0, 8.0);
  double lo = INFINITY, hi = 0.0;
  o.detail << "remainders";
  for (double eps : {0.09, 0.04, 0.0225}) {
    const ProfileProblem p = burgers(eps, -1.0, 1.0);
    const double r = check_corner_expansion(p, solve_profile(p).profile, corner);
    o.detail << ' ' << sci(r);
    o.require(std::isfinite(r) && r > 0.0, "finite remainder");
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  o.detail << ", max/min " << sci(hi / lo);
  o.require(hi / lo <= 2.0, "max/min <= 2");
}

void uniqueness(Outcome& o) {
  for (double uL : {1.0, -1.0}) {
    const ProbeReport r = uniqueness_probe(burgers(0.05, uL, -uL), {}, 8, kDefaultSeed);
    o.detail << (uL > 0 ? "shock" : " rarefaction") << ' ' << r.converged << "/8 converged, distance "
             << sci(r.max_distance) << ';';
    o.require(r.converged >= 6, ">= 6 converged");
    o.require(r.max_distance <= 1e-6, "distance <= 1e-6");
  }
}

void margins(Outcome& o) {
  const SolveOptions opts;
  const double floor = 10.0 * opts.newton_tol;
  const ProfileProblem fan = burgers(0.05, -1.0, 1.0);
  const ProfileProblem shock = burgers(0.05, 1.0, -1.0);
  const SolveResult fan_r = solve_profile(fan, opts);
  const SolveResult shock_r = solve_profile(shock, opts);
  const double sliding = sliding_supersolution_margin(fan, fan_r.profile, 0.1).margin;
  const double sweeping = sweeping_supersolution_margin(shock, shock_r.profile, 0.1, 1.0).margin;
  o.detail << "sliding " << sci(sliding) << ", sweeping " << sci(sweeping);
  o.require(sliding > floor, "sliding margin > 10 tol");
  o.require(sweeping > floor, "sweeping margin > 10 tol");
  for (const auto* pr : {&fan, &shock}) {
    const Profile& base = (pr == &fan ? fan_r : shock_r).profile;
    const double M = sliding_constant_M(*pr, base);
    SolveOptions padded = opts;
    padded.domain_padding = std::max(0.0, M + 1.0 - std::min(-base.mesh.front(), base.mesh.back()));
    const double barrier = barrier_operator_margin(*pr, solve_profile(*pr, padded).profile, 0.1, M);
    o.detail << ", barrier beyond M=" << sci(M) << ": " << sci(barrier);
    o.require(barrier < 0.0, "barrier operator < 0");
  }
}

void discretization_order(Outcome& o) {
  const ProfileProblem p = burgers(0.05, 1.0, -1.0);
  auto run = [&](int scale) {
    SolveOptions opts;
    opts.base_nodes = 250 * scale;
    opts.nodes_per_layer = 1000 * scale;
    return solve_profile(p, opts).profile;
  };
  const Profile ref = run(8);
  auto distance = [&](const Profile& c) {
    double d = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) d = std::max(d, std::abs(c.u[i] - interpolate(ref, c.mesh[i])));
    return d;
  };
  const double d1 = distance(run(1));
  const double d2 = distance(run(2));
  o.detail << "distances " << sci(d1) << ' ' << sci(d2) << ", factor " << sci(d1 / d2);
  o.require(d1 / d2 >= 3.0 && d1 / d2 <= 5.0, "factor in [3, 5]");
}

void cubic_flux(Outcome& o) {
  const FluxSpec cubic = FluxSpec::Parse("poly:0,0,0,1");
  const std::vector<double> eps{0.1, 0.05, 0.025};
  const auto sweep = continuation_sweep({eps.front(), -1.0, 1.0, cubic}, eps);
  const RiemannSolution exact = solve_exact(cubic, -1.0, 1.0);
  std::vector<double> err;
  for (const auto& [e, profile] : sweep) {
    o.require(check_monotone(profile, -1.0, 1.0) > 0.0, "monotone profile");
    err.push_back(l1_window_error(profile, exact, 0.0, 4.0));
  }
  o.detail << "L1 errors";
  for (double e : err) o.detail << ' ' << sci(e);
  for (std::size_t k = 1; k < err.size(); ++k) o.require(err[k] < err[k - 1], "decreasing");
}

void oracle_equivalences(Outcome& o) {
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double jac_worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> nodes{-2.0};
    for (int k = 0; k < 60; ++k) nodes.push_back(nodes.back() + 0.005 + 0.1 * unit(rng));
    const Mesh mesh(nodes);
    std::vector<double> u;
    for (std::size_t k = 0; k < mesh.size(); ++k) u.push_back(2.0 * unit(rng) - 1.0);
    const FluxSpec f = trial % 2 ? FluxSpec::Burgers()
                                 : FluxSpec::Polynomial({0.0, unit(rng), unit(rng) - 0.5, 1.0});
    const ProfileProblem p{0.01 + unit(rng), u.front(), u.back(), f};
    const Tridiagonal a = jacobian(p, mesh, u);
    const Tridiagonal b = oracle::fd_jacobian(p, mesh, u);
    for (std::size_t i = 0; i < mesh.size(); ++i) {
      jac_worst = std::max(jac_worst, oracle::rel_diff(a.diag[i], b.diag[i]));
      if (i + 1 < mesh.size()) {
        jac_worst = std::max({jac_worst, oracle::rel_diff(a.lower[i], b.lower[i]),
                              oracle::rel_diff(a.upper[i], b.upper[i])});
      }
    }
  }

  double env_worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> c(trial % 2 ? 5 : 4);
    for (double& x : c) x = 2.0 * unit(rng) - 1.0;
    c.back() = (c.back() < 0 ? -1.0 : 1.0) * (0.3 + std::abs(c.back()));
    const FluxSpec f = FluxSpec::Polynomial(c);
    const double uL = 2.0 * unit(rng) - 1.0;
    const double uR = uL + (unit(rng) < 0.5 ? -1.0 : 1.0) * (0.2 + unit(rng));
    const RiemannSolution s = solve_exact(f, uL, uR);
    const auto breaks = s.breakpoints();
    for (int k = 0; k < 25; ++k) {
      const double xi = s.min_speed() - 0.5 + (s.max_speed() - s.min_speed() + 1.0) * unit(rng);
      bool near = false;
      for (double b : breaks) near = near || std::abs(xi - b) < 1e-3;
      if (near) continue;
      env_worst = std::max(env_worst, std::abs(eval_riemann(s, xi) - oracle::riemann_by_scan(f, uL, uR, xi)));
    }
  }

  double inv_worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double w = 0.01 + 8.0 * unit(rng);
    inv_worst = std::max(inv_worst, std::abs(invert_first_integral(w) - oracle::invert_by_bisection(w)));
  }
  o.detail << "jacobian " << sci(jac_worst) << ", envelope " << sci(env_worst) << ", inversion "
           << sci(inv_worst);
  o.require(jac_worst <= 1e-6, "jacobian rel <= 1e-6");
  o.require(env_worst <= 1e-6, "envelope <= 1e-6");
  o.require(inv_worst <= 1e-12, "inversion <= 1e-12");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget;
    std::function<void(Outcome&)> body;
  };
  const Criterion criteria[] = {
      {"constant data", 0.1, constant_case},
      {"burgers shock profile", 1.0, burgers_shock},
      {"rarefaction convergence", 5.0, rarefaction_sweep},
      {"corner profile", 1.0, corner_profile},
      {"corner expansion remainder", 5.0, corner_remainder},
      {"uniqueness probe", 10.0, uniqueness},
      {"supersolution and barrier margins", 2.0, margins},
      {"discretization order", 5.0, discretization_order},
      {"cubic flux composite wave", 10.0, cubic_flux},
      {"oracle equivalences", 5.0, oracle_equivalences},
  };
  int failures = 0;
  int index = 0;
  double total = 0.0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += seconds;
    o.require(seconds <= c.budget, "time budget " + sci(c.budget) + " s");
    if (!o.pass) ++failures;
    std::printf("criterion %2d %s: %s (%.3f s) %s\n", index, o.pass ? "PASS" : "FAIL", c.name,
                seconds, o.detail.str().c_str());
  }
  std::printf("%d of %d criteria passed in %.2f s\n", index - failures, index, total);
  return failures == 0 ? 0 : 1;
}
