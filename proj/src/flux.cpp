#include "wavefan/flux.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "wavefan/error.hpp"

namespace wavefan {
namespace {

constexpr int kSamples = 10001;
constexpr double kLipschitzSafety = 1.001;

double horner(const std::vector<double>& c, double u) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double parse_number(std::string_view text, std::string_view token) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ParseError("malformed flux coefficient '" + std::string(text) +
                     "' in flux token '" + std::string(token) + "'");
  }
  return value;
}

template <typename Fn>
double sampled_max(double lo, double hi, Fn&& fn) {
  if (lo > hi) std::swap(lo, hi);
  double best = 0.0;
  for (int k = 0; k < kSamples; ++k) {
    const double t = static_cast<double>(k) / (kSamples - 1);
    const double u = (k == kSamples - 1) ? hi : lo + t * (hi - lo);
    best = std::max(best, std::abs(fn(u)));
  }
  return best;
}

}  // namespace

FluxSpec::FluxSpec(FluxKind kind, std::vector<double> coefficients)
    : kind_(kind), coefficients_(std::move(coefficients)) {}

FluxSpec FluxSpec::Burgers() { return FluxSpec(FluxKind::kBurgers, {0.0, 0.0, 0.5}); }

FluxSpec FluxSpec::Polynomial(std::vector<double> coefficients) {
  while (!coefficients.empty() && coefficients.back() == 0.0) coefficients.pop_back();
  if (coefficients.size() < 2) {
    throw InvalidParameter("polynomial flux must have degree >= 1");
  }
  for (double c : coefficients) {
    if (!std::isfinite(c)) throw InvalidParameter("polynomial flux coefficient is not finite");
  }
  return FluxSpec(FluxKind::kPolynomial, std::move(coefficients));
}

FluxSpec FluxSpec::Parse(std::string_view token) {
  if (token == "burgers") return Burgers();
  constexpr std::string_view kPrefix = "poly:";
  if (token.substr(0, kPrefix.size()) != kPrefix) {
    throw ParseError("malformed flux token '" + std::string(token) +
                     "' (expected 'burgers' or 'poly:c0,c1,...')");
  }
  std::vector<double> coefficients;
  std::string_view rest = token.substr(kPrefix.size());
  while (true) {
    const auto comma = rest.find(',');
    coefficients.push_back(parse_number(rest.substr(0, comma), token));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  try {
    return Polynomial(std::move(coefficients));
  } catch (const InvalidParameter& e) {
    throw ParseError(std::string(e.what()) + " in flux token '" + std::string(token) + "'");
  }
}

double FluxSpec::f(double u) const {
  if (is_burgers()) return 0.5 * u * u;
  return horner(coefficients_, u);
}

double FluxSpec::df(double u) const {
  if (is_burgers()) return u;
  double acc = 0.0;
  for (std::size_t k = coefficients_.size() - 1; k >= 1; --k) {
    acc = acc * u + static_cast<double>(k) * coefficients_[k];
  }
  return acc;
}

double FluxSpec::d2f(double u) const {
  if (is_burgers()) return 1.0;
  double acc = 0.0;
  for (std::size_t k = coefficients_.size() - 1; k >= 2; --k) {
    acc = acc * u + static_cast<double>(k * (k - 1)) * coefficients_[k];
  }
  return acc;
}

std::string FluxSpec::ToString() const {
  if (is_burgers()) return "burgers";
  std::string out = "poly:";
  char buf[32];
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (k > 0) out += ',';
    std::snprintf(buf, sizeof(buf), "%.17g", coefficients_[k]);
    out += buf;
  }
  return out;
}

double eval(const FluxSpec& flux, double u) { return flux.f(u); }
double derivative(const FluxSpec& flux, double u) { return flux.df(u); }
double second_derivative(const FluxSpec& flux, double u) { return flux.d2f(u); }

double max_abs_second_derivative(const FluxSpec& flux, double lo, double hi) {
  if (flux.is_burgers()) return 1.0;
  return sampled_max(lo, hi, [&](double u) { return flux.d2f(u); });
}

double lipschitz_of_derivative(const FluxSpec& flux, double lo, double hi) {
  if (lo > hi) {
    throw InvalidParameter("lipschitz_of_derivative: invalid interval (lo > hi)");
  }
  return kLipschitzSafety * max_abs_second_derivative(flux, lo, hi);
}

double max_abs_derivative(const FluxSpec& flux, double lo, double hi) {
  return sampled_max(lo, hi, [&](double u) { return flux.df(u); });
}

double chord_slope_Q(const FluxSpec& flux, double a, double b) {
  if (a == b) return 0.0;
  return (flux.df(a) - flux.df(b)) / (a - b);
}

}  // namespace wavefan
