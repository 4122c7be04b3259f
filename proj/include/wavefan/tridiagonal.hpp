#pragma once

#include <span>
#include <vector>

namespace wavefan {

/// Square tridiagonal matrix. lower[i] sits at (i+1, i), upper[i] at (i, i+1).
struct Tridiagonal {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;

  explicit Tridiagonal(std::size_t n = 0)
      : lower(n > 0 ? n - 1 : 0), diag(n), upper(n > 0 ? n - 1 : 0) {}

  std::size_t size() const { return diag.size(); }
  std::vector<double> apply(std::span<const double> x) const;
};

/// Solves A x = rhs by Gaussian elimination with partial pivoting (the
/// scheme of LAPACK's gtsv). Throws LinearSolverError on an exactly singular
/// pivot or non-finite result.
std::vector<double> solve_tridiagonal(Tridiagonal a, std::vector<double> rhs);

}  // namespace wavefan
