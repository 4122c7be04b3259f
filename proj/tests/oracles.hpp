// Independent reference computations used by the tests. None of these share
// code paths with the library routines they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <boost/math/special_functions/lambert_w.hpp>

#include "wavefan/flux.hpp"
#include "wavefan/mesh.hpp"
#include "wavefan/profile_bvp.hpp"
#include "wavefan/tridiagonal.hpp"

namespace oracle {

// Entropy solution from its variational form: for uL < uR, u*(xi) minimizes
// f(u) - xi u over [uL, uR]; for uL > uR it maximizes it over [uR, uL].
// Dense scan, then bisection on f'(u) = xi inside the winning cell.
inline double riemann_by_scan(const wavefan::FluxSpec& flux, double uL, double uR, double xi,
                              int n = 200000) {
  if (uL == uR) return uL;
  const double sign = uL < uR ? 1.0 : -1.0;
  auto g = [&](double u) { return sign * (flux.f(u) - xi * u); };
  auto dg = [&](double u) { return sign * (flux.df(u) - xi); };
  int best = 0;
  double best_val = g(uL);
  for (int k = 1; k <= n; ++k) {
    const double u = uL + (uR - uL) * k / n;
    const double v = g(u);
    if (v < best_val) {
      best_val = v;
      best = k;
    }
  }
  auto at = [&](int k) { return uL + (uR - uL) * std::clamp(k, 0, n) / n; };
  // Walk in the direction u increases from uL to uR; dg is the derivative in u,
  // so convert to a derivative along the scan direction.
  const double dir = uR > uL ? 1.0 : -1.0;
  auto slope = [&](double u) { return dir * dg(u); };
  double a, b;
  if (best > 0 && slope(at(best - 1)) < 0 && slope(at(best)) >= 0) {
    a = at(best - 1);
    b = at(best);
  } else if (best < n && slope(at(best)) < 0 && slope(at(best + 1)) >= 0) {
    a = at(best);
    b = at(best + 1);
  } else {
    return at(best);
  }
  for (int it = 0; it < 200 && a != b; ++it) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b) break;
    if (slope(m) < 0) a = m; else b = m;
  }
  return 0.5 * (a + b);
}

// Root p in (0, 1] of p - 1 - ln p = w^2/2 via the principal Lambert W branch:
// p e^{-p} = e^{-1 - w^2/2}.
inline double invert_by_lambert(double w) {
  return -boost::math::lambert_w0(-std::exp(-1.0 - 0.5 * w * w));
}

// Same root by plain bisection on p.
inline double invert_by_bisection(double w) {
  const double target = 0.5 * w * w;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 2000; ++it) {
    const double m = 0.5 * (lo + hi);
    if (m == lo || m == hi) break;
    if (m - 1.0 - std::log(m) > target) lo = m; else hi = m;
  }
  return 0.5 * (lo + hi);
}

// Central finite-difference Jacobian of the residual, tridiagonal band only.
inline wavefan::Tridiagonal fd_jacobian(const wavefan::ProfileProblem& problem,
                                        const wavefan::Mesh& mesh, std::vector<double> u) {
  const std::size_t n = mesh.size();
  wavefan::Tridiagonal j(n);
  for (std::size_t c = 0; c < n; ++c) {
    const double h = 1e-6 * std::max(1.0, std::abs(u[c]));
    const double saved = u[c];
    u[c] = saved + h;
    const auto rp = wavefan::residual(problem, mesh, u);
    u[c] = saved - h;
    const auto rm = wavefan::residual(problem, mesh, u);
    u[c] = saved;
    auto d = [&](std::size_t r) { return (rp[r] - rm[r]) / (2.0 * h); };
    j.diag[c] = d(c);
    if (c > 0) j.upper[c - 1] = d(c - 1);
    if (c + 1 < n) j.lower[c] = d(c + 1);
  }
  return j;
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace oracle
