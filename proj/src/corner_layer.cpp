#include "wavefan/corner_layer.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "wavefan/error.hpp"

namespace wavefan {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC2 = 1.0 / 5, kC3 = 3.0 / 10, kC4 = 4.0 / 5, kC5 = 8.0 / 9;
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192, kB5 = -2187.0 / 6784,
                 kB6 = 11.0 / 84;
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;

double slope_rhs(double xi, double U) { return invert_first_integral(std::max(U - xi, 0.0)); }

}  // namespace

Profile CornerProfile::as_profile() const {
  Profile p;
  p.mesh = mesh;
  p.u = U;
  p.du = this->p;
  return p;
}

double gaussian_half_integral() {
  auto integrand = [](double t) { return std::exp(-0.5 * t * t); };
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, -std::numeric_limits<double>::infinity(), 0.0, 15, 1e-15, &error);
}

BarrierUpper make_barrier_upper(double L) {
  BarrierUpper b;
  b.L = L;
  b.I = gaussian_half_integral();
  if (std::abs(b.I - std::sqrt(std::numbers::pi / 2.0)) > 1e-12) {
    throw IntegrationError("Gaussian half-integral quadrature disagrees with sqrt(pi/2)");
  }
  if (!(L > 0.0) || !(b.margin() > 0.0)) {
    throw InvalidParameter("barrier parameter L violates 1 - 1/L^2 - I/L > 0");
  }
  return b;
}

double invert_first_integral(double w) {
  if (!(w >= 0.0)) throw InvalidParameter("invert_first_integral: w must be non-negative");
  if (w == 0.0) return 1.0;
  // g(q) = e^q - 1 - q - w^2/2 decreases on q <= 0, g(0) < 0 < g(-1 - w^2/2).
  const double target = 0.5 * w * w;
  double lo = -1.0 - target;
  double hi = 0.0;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g = std::expm1(mid) - mid - target;
    if (g > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

CornerProfile solve_corner(double xi_min, double xi_max, const CornerOptions& options) {
  if (!(xi_min <= -4.0)) throw InvalidParameter("solve_corner: xi_min must be <= -4");
  if (!(xi_max > 0.0)) throw InvalidParameter("solve_corner: xi_max must be > 0");
  if (!(options.rtol > 0.0) || !(options.output_spacing > 0.0) || options.anchor_margin < 0.0) {
    throw InvalidParameter("solve_corner: invalid step control");
  }

  std::vector<double> targets;
  const int count = static_cast<int>(std::ceil((xi_max - xi_min) / options.output_spacing));
  for (int k = 0; k <= count; ++k) {
    targets.push_back(std::min(xi_max, xi_min + k * options.output_spacing));
  }
  for (double x : options.extra_nodes) {
    if (x >= xi_min && x <= xi_max) targets.push_back(x);
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end(),
                            [](double a, double b) { return b - a <= 1e-13; }),
                targets.end());

  std::vector<double> nodes;
  std::vector<double> values;
  double xi = xi_min - options.anchor_margin;
  double U = 0.0;
  if (options.anchor_margin == 0.0) {
    nodes.push_back(xi);
    values.push_back(U);
  }
  std::size_t next_target = (options.anchor_margin == 0.0) ? 1 : 0;
  double h = 1e-3;
  double k1 = slope_rhs(xi, U);
  constexpr double kTiny = 1e-300;

  while (next_target < targets.size()) {
    const double stop = targets[next_target];
    bool lands = false;
    if (xi + h >= stop) {
      h = stop - xi;
      lands = true;
    }
    if (h < options.min_step && !lands) {
      throw IntegrationError("solve_corner: step size underflow at xi = " + std::to_string(xi));
    }
    const double k2 = slope_rhs(xi + kC2 * h, U + h * kA21 * k1);
    const double k3 = slope_rhs(xi + kC3 * h, U + h * (kA31 * k1 + kA32 * k2));
    const double k4 = slope_rhs(xi + kC4 * h, U + h * (kA41 * k1 + kA42 * k2 + kA43 * k3));
    const double k5 =
        slope_rhs(xi + kC5 * h, U + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4));
    const double k6 = slope_rhs(
        xi + h, U + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 + kA65 * k5));
    const double U_new = U + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
    const double k7 = slope_rhs(xi + h, U_new);
    const double err =
        h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7);
    const double scale = options.rtol * std::max({std::abs(U), std::abs(U_new), kTiny});
    const double ratio = std::abs(err) / scale;
    const double factor =
        ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
    if (ratio <= 1.0) {
      xi = lands ? stop : xi + h;
      U = U_new;
      k1 = k7;
      if (xi >= xi_min) {
        if (nodes.empty() || xi - nodes.back() > 1e-13) {
          nodes.push_back(xi);
          values.push_back(U);
        }
      }
      if (lands) ++next_target;
      h *= factor;
    } else {
      h *= std::min(factor, 1.0);
      if (h < options.min_step) {
        throw IntegrationError("solve_corner: step size underflow at xi = " +
                               std::to_string(xi));
      }
    }
  }

  CornerProfile corner;
  corner.U = values;
  corner.w.resize(values.size());
  corner.p.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    corner.w[i] = values[i] - nodes[i];
    corner.p[i] = invert_first_integral(std::max(corner.w[i], 0.0));
  }
  corner.mesh = Mesh(std::move(nodes));
  return corner;
}

double barrier_lower(double xi) { return std::max(0.0, xi); }

double barrier_upper(double xi, const BarrierUpper& barrier) {
  if (xi <= 0.0) {
    return std::sqrt(std::numbers::pi / 2.0) * std::erfc(-xi / std::numbers::sqrt2);
  }
  if (xi <= 1.0) return xi + barrier.I;
  return xi + barrier.I * std::exp(-(xi - 1.0) / barrier.L);
}

namespace {

std::vector<double> h_values(std::span<const double> xi, std::span<const double> u,
                             std::span<const double> slope, double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidParameter("first_integral_H: epsilon must be positive");
  std::vector<double> H(u.size());
  bool any = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (slope[i] == 0.0) {
      H[i] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    any = true;
    const double w = u[i] - xi[i];
    H[i] = w * w / (2.0 * epsilon) - (slope[i] - 1.0) + std::log(std::abs(slope[i]));
  }
  if (!any) throw DegenerateProfile("first_integral_H: profile has zero slope everywhere");
  return H;
}

}  // namespace

std::vector<double> first_integral_H(const Profile& profile, double epsilon) {
  return h_values(profile.mesh.nodes(), profile.u, profile.du, epsilon);
}

std::vector<double> first_integral_H(const CornerProfile& corner, double epsilon) {
  return h_values(corner.mesh.nodes(), corner.U, corner.p, epsilon);
}

double first_integral_spread(const std::vector<double>& H, const std::vector<double>& slope,
                             double rel_slope_floor) {
  if (H.size() != slope.size()) throw InvalidParameter("first_integral_spread: size mismatch");
  double peak = 0.0;
  for (double s : slope) peak = std::max(peak, std::abs(s));
  std::vector<double> kept;
  for (std::size_t i = 0; i < H.size(); ++i) {
    if (std::isnan(H[i]) || std::abs(slope[i]) < rel_slope_floor * peak) continue;
    kept.push_back(H[i]);
  }
  if (kept.empty()) throw DegenerateProfile("first_integral_spread: no resolved nodes");
  std::vector<double> sorted = kept;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  const double median = sorted[sorted.size() / 2];
  double spread = 0.0;
  for (double h : kept) spread = std::max(spread, std::abs(h - median));
  return spread;
}

TailFit fit_tail_rate(const CornerProfile& corner, double lo, double hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < corner.size(); ++i) {
    const double x = corner.mesh[i];
    if (x < lo || x > hi) continue;
    const double gap = corner.U[i] - x;
    if (!(gap > 0.0)) throw InvalidParameter("fit_tail_rate: U - xi must be positive in the window");
    const double y = -std::log(gap);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 5) throw InvalidParameter("fit_tail_rate: window holds fewer than 5 nodes");
  const double denom = n * sxx - sx * sx;
  TailFit fit;
  fit.rate = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.rate * sx) / n;
  fit.amplitude = std::exp(-intercept);
  fit.nodes = n;
  return fit;
}

}  // namespace wavefan
