#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "wavefan/corner_layer.hpp"
#include "wavefan/profile_bvp.hpp"
#include "wavefan/riemann.hpp"

namespace wavefan {

/// Constants and margins collected while checking one problem.
struct DiagnosticsRecord {
  double K = 0.0;
  double M = 0.0;
  double lambda = 0.0;
  std::map<std::string, double> margins;
};

/// Relative slope floor that defines the resolved part of a profile: nodes
/// with |u_xi| >= kResolvedSlopeFraction * max|u_xi|. Outside it the tails
/// sit at the far-field values to within round-off and the sign of a
/// super-exponentially small quantity is not observable.
inline constexpr double kResolvedSlopeFraction = 1e-2;

/// Min of sign(uR - uL) * chord slope over consecutive nodes of the resolved
/// region, and over any reversal (negative chord) elsewhere. In the tails the
/// increments fall below one ulp, so equal neighbours there are not a
/// failure; pairs within a few ulps of a far-field value are skipped. A
/// positive result means strictly monotone. 0 when uL == uR.
double check_monotone(const Profile& profile, double uL, double uR);

/// Sup of |u(uL + uR - xi) + u(xi) - uL - uR| over nodes whose reflection
/// lies in the mesh. Burgers only (UnsupportedFlux otherwise).
double check_symmetry(const ProfileProblem& problem, const Profile& profile);

/// Normalized corner-layer remainder
///   sup_{xi <= (uL+uR)/2} |u - sqrt(eps) U((xi - uL)/sqrt(eps)) - uL| e^{1/sqrt(eps)} / sqrt(eps)
/// over mesh nodes. Requires uL < uR and Burgers; CoverageError when the
/// corner profile does not span the rescaled range.
double check_corner_expansion(const ProfileProblem& problem, const Profile& profile,
                              const CornerProfile& corner);

/// Trapezoid integral of |u - u*| over [lo, hi]. InvalidParameter when the
/// window leaves the mesh.
double l1_window_error(const Profile& profile, const RiemannSolution& exact, double lo,
                       double hi);

struct MarginReport {
  /// Min of the defect (f'(v) - xi) v' - eps v'' over resolved interior
  /// nodes where the translate v is defined.
  double margin = 0.0;
  /// Max |residual| of the untranslated profile on the same nodes.
  double noise_floor = 0.0;
  int nodes = 0;
};

/// Sliding translate v(xi) = u(xi + lambda) of an increasing profile; a
/// strict supersolution for lambda > 0. InvalidParameter for lambda < 0 or
/// uL >= uR.
MarginReport sliding_supersolution_margin(const ProfileProblem& problem, const Profile& profile,
                                          double lambda);

/// Sweeping family v(xi) = u(xi - 2 K lambda) + lambda of a decreasing
/// profile. K must bound |f''| on [uR, uL]; InvalidParameter otherwise, or
/// for lambda < 0, or uL <= uR.
MarginReport sweeping_supersolution_margin(const ProfileProblem& problem, const Profile& profile,
                                           double lambda, double K);

/// M = 1 + eps + ||f'||_inf + ||v_xi||_inf * [f']_Lip on the state interval.
double sliding_constant_M(const ProfileProblem& problem, const Profile& profile);

enum class BarrierSide { kBoth, kLeft, kRight };

/// Max over mesh nodes with |xi| > M of
///   L(g) = eps g'' - (f'(u_lambda) - xi) g' - v_xi Q g,   g = exp(-|xi|),
/// with Q the chord slope of f' between u_lambda = u(. + lambda) and v = u.
/// CoverageError when no node lies beyond M on the requested side.
double barrier_operator_margin(const ProfileProblem& problem, const Profile& profile,
                               double lambda, double M, BarrierSide side = BarrierSide::kBoth);

struct ProbeReport {
  double max_distance = 0.0;
  int converged = 0;
  int failed = 0;
};

/// Runs newton_solve from n_guesses random monotone guesses on the target
/// mesh and returns the largest pairwise max-norm distance between the
/// converged profiles. Guess k draws from a generator seeded by (seed, k).
/// Each run may take 20 * options.max_iter Newton steps.
ProbeReport uniqueness_probe(const ProfileProblem& problem, const SolveOptions& options,
                             int n_guesses, std::uint64_t seed);

/// Max interior residual of eps v'' = (v - xi) v' for the transformed samples
/// v = u + lambda on the translated nodes xi + lambda. Spacings and value
/// differences are carried over exactly, so only the coefficient
/// f'(v) - xi sees the transformation. lambda = 0 gives the profile's own residual. Burgers only.
double translation_invariance_check(const ProfileProblem& problem, const Profile& profile,
                                    double lambda);

}  // namespace wavefan
