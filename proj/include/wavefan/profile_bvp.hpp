#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wavefan/error.hpp"
#include "wavefan/flux.hpp"
#include "wavefan/mesh.hpp"
#include "wavefan/riemann.hpp"
#include "wavefan/tridiagonal.hpp"

namespace wavefan {

/// One instance of eps u'' = (f'(u) - xi) u' with u(-inf) = uL, u(+inf) = uR.
struct ProfileProblem {
  double epsilon = 1.0;
  double uL = 0.0;
  double uR = 0.0;
  FluxSpec flux = FluxSpec::Burgers();

  /// Throws InvalidParameter unless epsilon > 0 and all values are finite.
  void validate() const;
};

struct SolveOptions {
  double newton_tol = 1e-8;
  int max_iter = 50;
  /// Backtracking factor applied to a rejected Newton step.
  double damping = 0.5;
  int max_halvings = 30;
  double tail_tol = 1e-12;
  /// Intervals of the uniform part of the mesh.
  int base_nodes = 2000;
  /// Extra nodes concentrated in each refinement window.
  int nodes_per_layer = 8000;
  /// Decreasing epsilon schedule ending at the target; empty selects the
  /// default geometric schedule.
  std::vector<double> continuation;
  /// Length added on both sides of the truncated domain.
  double domain_padding = 0.0;

  void validate() const;
};

struct SolveReport {
  bool converged = false;
  /// Newton iterations summed over all continuation stages.
  int iterations = 0;
  /// Residual max-norm before each iteration of the final stage, plus the
  /// accepted final value.
  std::vector<double> residual_history;
  double xi_min = 0.0;
  double xi_max = 0.0;
  int mesh_size = 0;
  std::vector<double> stage_epsilons;
  std::vector<int> stage_iterations;
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, SolveReport report)
      : Error(what), report_(std::move(report)) {}
  const SolveReport& report() const { return report_; }

 private:
  SolveReport report_;
};

struct SolveResult {
  Profile profile;
  SolveReport report;
};

/// [m - d, M + d] with m, M the extreme wave speeds (characteristic speeds of
/// uL, uR and any shock or fan edge of the entropy solution) and
/// d = sqrt(2 eps ln(1/tail_tol)) + sqrt(eps).
std::pair<double, double> truncate_domain(const ProfileProblem& problem, double tail_tol);
std::pair<double, double> truncate_domain(const ProfileProblem& problem, double tail_tol,
                                          const RiemannSolution& exact);

/// Mesh with a uniform base plus smooth refinement windows of width
/// 4 sqrt(eps) around every wave speed of the entropy solution. Nodes
/// equidistribute a density 1 + sum_k A_k exp(-((xi - c_k)/w_k)^2), so
/// doubling the node counts nests the coarse mesh in the fine one.
Mesh build_mesh(const ProfileProblem& problem, const SolveOptions& options,
                const RiemannSolution& exact, std::pair<double, double> domain);

/// Entropy solution on the mesh, smoothed by a moving average of width
/// sqrt(eps); end values pinned to uL and uR.
Profile initial_guess(const ProfileProblem& problem, const Mesh& mesh);
Profile initial_guess(const ProfileProblem& problem, const Mesh& mesh,
                      const RiemannSolution& exact);

/// Interior: eps D2 u - (f'(u) - xi) D1 u with three-point nonuniform central
/// differences. Boundary entries: u_0 - uL and u_N - uR.
std::vector<double> residual(const ProfileProblem& problem, const Profile& profile);
std::vector<double> residual(const ProfileProblem& problem, const Mesh& mesh,
                             std::span<const double> u);

/// Exact derivative of residual() with respect to u.
Tridiagonal jacobian(const ProfileProblem& problem, const Profile& profile);
Tridiagonal jacobian(const ProfileProblem& problem, const Mesh& mesh, std::span<const double> u);

/// Damped Newton iteration from a guess that already meets the boundary
/// values. Throws NonConvergence or LinearSolverError.
SolveResult newton_solve(const ProfileProblem& problem, const Profile& guess,
                         const SolveOptions& options);

/// Geometric schedule from max(eps, 1) down to eps with ratio 1/2.
std::vector<double> default_continuation(double epsilon);

SolveResult solve_profile(const ProfileProblem& problem, const SolveOptions& options = {});

/// One converged profile per epsilon (strictly decreasing list), each stage
/// seeded by the previous one.
std::vector<std::pair<double, Profile>> continuation_sweep(const ProfileProblem& problem,
                                                           const std::vector<double>& eps_list,
                                                           const SolveOptions& options = {});

}  // namespace wavefan
