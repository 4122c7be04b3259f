#pragma once

#include <vector>

#include "wavefan/mesh.hpp"

namespace wavefan {

/// The increasing solution U of U'' = (U - xi) U' squeezed between max{0, xi}
/// and the explicit supersolution below.
struct CornerProfile {
  Mesh mesh;
  std::vector<double> U;
  std::vector<double> p;  // U_xi, in (0, 1)
  std::vector<double> w;  // U - xi

  std::size_t size() const { return mesh.size(); }
  /// View as a Profile (u = U, du = p) for interpolation and diagnostics.
  Profile as_profile() const;
};

/// Piecewise supersolution: Gaussian integral for xi <= 0, xi + I on (0, 1],
/// xi + I exp(-(xi - 1)/L) beyond 1.
struct BarrierUpper {
  double L = 10.0;
  double I = 0.0;  // integral of exp(-t^2/2) over (-inf, 0]

  /// 1 - 1/L^2 - I/L, the supersolution margin of the exponential piece.
  double margin() const { return 1.0 - 1.0 / (L * L) - I / L; }
};

/// Builds the barrier with I from adaptive Gauss-Kronrod quadrature (checked
/// against sqrt(pi/2)). Throws InvalidParameter when margin() <= 0.
BarrierUpper make_barrier_upper(double L = 10.0);

/// Gaussian integral of (-inf, 0] by quadrature, to ~1e-14.
double gaussian_half_integral();

/// Root p in (0, 1] of p - 1 - ln p = w^2 / 2, by bisection on ln p.
/// Throws InvalidParameter for w < 0.
double invert_first_integral(double w);

struct CornerOptions {
  double rtol = 1e-12;
  /// Spacing of the requested output nodes on [xi_min, xi_max].
  double output_spacing = 0.01;
  /// Integration starts this far left of xi_min from U = 0.
  double anchor_margin = 4.0;
  double min_step = 1e-12;
  /// Extra nodes that must appear in the output (inside [xi_min, xi_max]).
  std::vector<double> extra_nodes;
};

/// Integrates U' = p(U - xi) with the anchor U = 0 at xi_min - anchor_margin
/// using an adaptive Dormand-Prince 5(4) pair. Output nodes are the accepted
/// steps inside [xi_min, xi_max]; steps are clipped to land on every
/// requested node. Throws InvalidParameter (xi_min > -4 or xi_max <= 0) or
/// IntegrationError (step-size underflow).
CornerProfile solve_corner(double xi_min, double xi_max, const CornerOptions& options = {});

double barrier_lower(double xi);
double barrier_upper(double xi, const BarrierUpper& barrier);

/// Per-node H = (u - xi)^2 / (2 eps) - (u_xi - 1) + ln|u_xi|. Nodes whose
/// slope is exactly zero (tails flushed to the far-field value) yield NaN;
/// a profile with no nonzero slope throws DegenerateProfile.
std::vector<double> first_integral_H(const Profile& profile, double epsilon);
std::vector<double> first_integral_H(const CornerProfile& corner, double epsilon = 1.0);

/// Max deviation of H from its median over nodes whose |slope| is at least
/// rel_slope_floor * max|slope|; NaN entries are skipped.
double first_integral_spread(const std::vector<double>& H, const std::vector<double>& slope,
                             double rel_slope_floor = 1e-2);

struct TailFit {
  double rate = 0.0;
  double amplitude = 0.0;  // U - xi ~ amplitude * exp(-rate * xi)
  int nodes = 0;
};

/// Least-squares slope of -ln(U - xi) against xi over nodes in [lo, hi].
/// Throws InvalidParameter when fewer than 5 nodes fall in the window or
/// U - xi <= 0 there.
TailFit fit_tail_rate(const CornerProfile& corner, double lo, double hi);

}  // namespace wavefan
