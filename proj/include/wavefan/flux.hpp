#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wavefan {

enum class FluxKind { kBurgers, kPolynomial };

/// Flux function f of the conservation law U_t + f(U)_x = 0.
///
/// Either the builtin Burgers flux u^2/2 or a polynomial given by its
/// coefficients in ascending powers. Immutable after construction.
class FluxSpec {
 public:
  static FluxSpec Burgers();
  /// Throws InvalidParameter if the polynomial has degree < 1 (after
  /// trimming trailing zeros).
  static FluxSpec Polynomial(std::vector<double> coefficients);
  /// Parses `burgers` or `poly:c0,c1,...,cn`. Throws ParseError.
  static FluxSpec Parse(std::string_view token);

  FluxKind kind() const { return kind_; }
  bool is_burgers() const { return kind_ == FluxKind::kBurgers; }
  /// Ascending-power coefficients; Burgers reports {0, 0, 0.5}.
  const std::vector<double>& coefficients() const { return coefficients_; }

  double f(double u) const;
  double df(double u) const;
  double d2f(double u) const;

  /// Round-trips through Parse().
  std::string ToString() const;

 private:
  FluxSpec(FluxKind kind, std::vector<double> coefficients);

  FluxKind kind_;
  std::vector<double> coefficients_;
};

double eval(const FluxSpec& flux, double u);
double derivative(const FluxSpec& flux, double u);
double second_derivative(const FluxSpec& flux, double u);

/// Largest |f''| over 10,001 equispaced samples of [lo, hi].
double max_abs_second_derivative(const FluxSpec& flux, double lo, double hi);

/// Upper bound K for the Lipschitz constant of f' on [lo, hi]: the sampled
/// sup of |f''| inflated by 1.001. Throws InvalidParameter when lo > hi.
double lipschitz_of_derivative(const FluxSpec& flux, double lo, double hi);

/// Sup of |f'| over 10,001 equispaced samples of [lo, hi] (either order).
double max_abs_derivative(const FluxSpec& flux, double lo, double hi);

/// (f'(a) - f'(b)) / (a - b), and exactly 0 when a == b.
double chord_slope_Q(const FluxSpec& flux, double a, double b);

}  // namespace wavefan
