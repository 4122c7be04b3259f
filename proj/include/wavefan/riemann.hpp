#pragma once

#include <limits>
#include <string>
#include <vector>

#include "wavefan/flux.hpp"

namespace wavefan {

enum class WaveKind { kConstant, kShock, kRarefaction };

/// One element of a Riemann wave fan, ordered by xi.
///
/// A constant state occupies [xi_lo, xi_hi] with u_left == u_right. A shock
/// has xi_lo == xi_hi == speed. A rarefaction fan spans [xi_lo, xi_hi] with
/// u_left = (f')^{-1}(xi_lo) and u_right = (f')^{-1}(xi_hi).
struct Wave {
  WaveKind kind = WaveKind::kConstant;
  double xi_lo = -std::numeric_limits<double>::infinity();
  double xi_hi = std::numeric_limits<double>::infinity();
  double u_left = 0.0;
  double u_right = 0.0;
  double speed = 0.0;
};

struct RiemannSolution {
  FluxSpec flux = FluxSpec::Burgers();
  double uL = 0.0;
  double uR = 0.0;
  std::vector<Wave> waves;

  /// Shock speeds and fan edges, in increasing order without duplicates.
  std::vector<double> breakpoints() const;
  double min_speed() const;
  double max_speed() const;
};

struct RiemannOptions {
  /// Number of intervals of the state grid used to build the envelope.
  int grid_intervals = 200000;
};

/// Entropy solution of the Riemann problem for f with states uL | uR.
///
/// Built from the convex (uL < uR) or concave (uL > uR) envelope of f over
/// the state interval. Envelope vertices come from a hull of the sampled
/// graph; shock endpoints are then polished by Newton on the tangency
/// conditions so fan edges are not limited to grid resolution.
RiemannSolution solve_exact(const FluxSpec& flux, double uL, double uR,
                            const RiemannOptions& options = {});

/// u*(xi). At a shock location the left state is returned.
double eval_riemann(const RiemannSolution& solution, double xi);

/// Human-readable listing of the waves, one per line.
std::string describe(const RiemannSolution& solution);

const char* to_string(WaveKind kind);

}  // namespace wavefan
