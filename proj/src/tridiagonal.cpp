#include "wavefan/tridiagonal.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "wavefan/error.hpp"

namespace wavefan {

std::vector<double> Tridiagonal::apply(std::span<const double> x) const {
  const std::size_t n = size();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag[i] * x[i];
    if (i > 0) acc += lower[i - 1] * x[i - 1];
    if (i + 1 < n) acc += upper[i] * x[i + 1];
    y[i] = acc;
  }
  return y;
}

std::vector<double> solve_tridiagonal(Tridiagonal a, std::vector<double> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw LinearSolverError("tridiagonal solve: size mismatch");
  if (n == 0) return b;
  auto& dl = a.lower;
  auto& d = a.diag;
  auto& du = a.upper;
  // After elimination dl[i] holds the second superdiagonal fill-in (i, i+2).
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) {
        throw LinearSolverError("tridiagonal solve: singular pivot at row " + std::to_string(i));
      }
      const double fact = dl[i] / d[i];
      d[i + 1] -= fact * du[i];
      b[i + 1] -= fact * b[i];
      dl[i] = 0.0;
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      const double temp = d[i + 1];
      d[i + 1] = du[i] - fact * temp;
      if (i + 2 < n) {
        dl[i] = du[i + 1];
        du[i + 1] = -fact * dl[i];
      } else {
        dl[i] = 0.0;
      }
      du[i] = temp;
      const double bt = b[i];
      b[i] = b[i + 1];
      b[i + 1] = bt - fact * b[i + 1];
    }
  }
  if (d[n - 1] == 0.0) {
    throw LinearSolverError("tridiagonal solve: singular pivot at row " + std::to_string(n - 1));
  }
  b[n - 1] /= d[n - 1];
  if (n >= 2) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
  for (std::size_t k = n >= 2 ? n - 2 : 0; k-- > 0;) {
    b[k] = (b[k] - du[k] * b[k + 1] - dl[k] * b[k + 2]) / d[k];
  }
  for (double x : b) {
    if (!std::isfinite(x)) throw LinearSolverError("tridiagonal solve: non-finite solution");
  }
  return b;
}

}  // namespace wavefan
