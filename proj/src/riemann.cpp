#include "wavefan/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "wavefan/error.hpp"

namespace wavefan {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Flux seen in the oriented variable v = sign * u, so that the envelope is
// always a lower convex hull over an increasing state interval. For
// sign = -1 this is h(v) = -f(-v), whose derivative is f'(-v).
struct OrientedFlux {
  const FluxSpec* flux;
  double sign;

  double h(double v) const { return sign * flux->f(sign * v); }
  double dh(double v) const { return flux->df(sign * v); }
  double d2h(double v) const { return sign * flux->d2f(sign * v); }
};

struct Segment {
  bool shock = false;
  double a = 0.0;  // left state (oriented)
  double b = 0.0;  // right state (oriented)
  bool a_fixed = false;  // a is the interval endpoint vL
  bool b_fixed = false;  // b is the interval endpoint vR
};

std::vector<int> lower_hull(const std::vector<double>& v, const std::vector<double>& h) {
  std::vector<int> hull;
  hull.reserve(v.size());
  for (int k = 0; k < static_cast<int>(v.size()); ++k) {
    while (hull.size() >= 2) {
      const int i = hull[hull.size() - 2];
      const int j = hull.back();
      const double cross = (v[j] - v[i]) * (h[k] - h[i]) - (h[j] - h[i]) * (v[k] - v[i]);
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }
  return hull;
}

// Tangency of a chord that leaves a fixed endpoint: dh(x) (x - p) = h(x) - h(p).
double polish_one_sided(const OrientedFlux& of, double fixed, double x0, double lo, double hi) {
  double x = x0;
  for (int it = 0; it < 60; ++it) {
    const double phi = of.dh(x) * (x - fixed) - (of.h(x) - of.h(fixed));
    const double dphi = of.d2h(x) * (x - fixed);
    if (dphi == 0.0 || !std::isfinite(dphi)) return x0;
    const double step = phi / dphi;
    x -= step;
    if (!(x >= lo && x <= hi)) return x0;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) return x;
  }
  return x;
}

// Bitangent: dh(a) = dh(b) = (h(b) - h(a)) / (b - a).
void polish_two_sided(const OrientedFlux& of, Segment& s, double a_lo, double a_hi, double b_lo,
                      double b_hi) {
  double a = s.a;
  double b = s.b;
  for (int it = 0; it < 60; ++it) {
    const double r1 = of.dh(a) - of.dh(b);
    const double r2 = of.dh(a) * (b - a) - (of.h(b) - of.h(a));
    const double j11 = of.d2h(a);
    const double j12 = -of.d2h(b);
    const double j21 = of.d2h(a) * (b - a);
    const double j22 = of.dh(a) - of.dh(b);
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) return;
    const double da = (r1 * j22 - j12 * r2) / det;
    const double db = (j11 * r2 - j21 * r1) / det;
    a -= da;
    b -= db;
    if (!(a >= a_lo && a <= a_hi && b >= b_lo && b <= b_hi)) return;
    if (std::abs(da) + std::abs(db) <= 1e-16 * std::max(1.0, std::abs(a) + std::abs(b))) break;
  }
  s.a = a;
  s.b = b;
}

double fan_state(const FluxSpec& flux, const Wave& w, double xi) {
  // f' is monotone across a fan; bisect f'(u) = xi between its edge states.
  double lo = w.u_left;
  double hi = w.u_right;
  if (xi <= w.xi_lo) return lo;
  if (xi >= w.xi_hi) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (flux.df(mid) - xi <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

const char* to_string(WaveKind kind) {
  switch (kind) {
    case WaveKind::kConstant:
      return "constant";
    case WaveKind::kShock:
      return "shock";
    case WaveKind::kRarefaction:
      return "rarefaction";
  }
  return "?";
}

RiemannSolution solve_exact(const FluxSpec& flux, double uL, double uR,
                            const RiemannOptions& options) {
  RiemannSolution sol;
  sol.flux = flux;
  sol.uL = uL;
  sol.uR = uR;
  if (uL == uR) {
    Wave c;
    c.u_left = c.u_right = uL;
    sol.waves.push_back(c);
    return sol;
  }
  if (options.grid_intervals < 2) throw InvalidParameter("riemann grid needs >= 2 intervals");

  const double sign = uL < uR ? 1.0 : -1.0;
  const OrientedFlux of{&flux, sign};
  const double vL = sign * uL;
  const double vR = sign * uR;
  const int n = options.grid_intervals;
  std::vector<double> v(n + 1);
  std::vector<double> h(n + 1);
  for (int k = 0; k <= n; ++k) {
    v[k] = (k == n) ? vR : vL + (vR - vL) * (static_cast<double>(k) / n);
    h[k] = of.h(v[k]);
  }
  const std::vector<int> hull = lower_hull(v, h);

  // Adjacent-ish hull vertices trace the graph itself (a fan); long edges are
  // chords (shocks).
  std::vector<Segment> segs;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int i = hull[e];
    const int j = hull[e + 1];
    const bool shock = (j - i) > 2;
    if (!shock && !segs.empty() && !segs.back().shock) {
      segs.back().b = v[j];
      segs.back().b_fixed = (j == n);
      continue;
    }
    Segment s;
    s.shock = shock;
    s.a = v[i];
    s.b = v[j];
    s.a_fixed = (i == 0);
    s.b_fixed = (j == n);
    segs.push_back(s);
  }

  const double dv = (vR - vL) / n;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    Segment& s = segs[k];
    if (!s.shock) continue;
    const double a0 = s.a;
    const double b0 = s.b;
    if (s.a_fixed && s.b_fixed) continue;
    if (s.a_fixed) {
      s.b = polish_one_sided(of, s.a, s.b, std::max(vL, b0 - 3 * dv), std::min(vR, b0 + 3 * dv));
    } else if (s.b_fixed) {
      s.a = polish_one_sided(of, s.b, s.a, std::max(vL, a0 - 3 * dv), std::min(vR, a0 + 3 * dv));
    } else {
      polish_two_sided(of, s, std::max(vL, a0 - 3 * dv), std::min(vR, a0 + 3 * dv),
                       std::max(vL, b0 - 3 * dv), std::min(vR, b0 + 3 * dv));
    }
    if (k > 0) segs[k - 1].b = s.a;
    if (k + 1 < segs.size()) segs[k + 1].a = s.b;
  }

  auto to_u = [sign](double vv) { return sign * vv; };
  double xi_prev = -kInf;
  auto push_constant = [&](double u, double xi_hi) {
    Wave c;
    c.kind = WaveKind::kConstant;
    c.xi_lo = xi_prev;
    c.xi_hi = xi_hi;
    c.u_left = c.u_right = u;
    sol.waves.push_back(c);
  };

  for (std::size_t k = 0; k < segs.size(); ++k) {
    const Segment& s = segs[k];
    if (s.shock) {
      const double speed = (of.h(s.b) - of.h(s.a)) / (s.b - s.a);
      if (k == 0) push_constant(to_u(s.a), speed);
      Wave w;
      w.kind = WaveKind::kShock;
      w.xi_lo = w.xi_hi = w.speed = speed;
      w.u_left = to_u(s.a);
      w.u_right = to_u(s.b);
      sol.waves.push_back(w);
      xi_prev = speed;
    } else {
      if (s.b <= s.a) continue;
      const double lo = of.dh(s.a);
      const double hi = std::max(lo, of.dh(s.b));
      if (k == 0) push_constant(to_u(s.a), lo);
      Wave w;
      w.kind = WaveKind::kRarefaction;
      w.xi_lo = lo;
      w.xi_hi = hi;
      w.u_left = to_u(s.a);
      w.u_right = to_u(s.b);
      w.speed = lo;
      sol.waves.push_back(w);
      xi_prev = hi;
    }
  }
  push_constant(uR, kInf);
  return sol;
}

double eval_riemann(const RiemannSolution& solution, double xi) {
  for (const Wave& w : solution.waves) {
    if (xi > w.xi_hi) continue;
    switch (w.kind) {
      case WaveKind::kConstant:
        return w.u_left;
      case WaveKind::kShock:
        return w.u_left;
      case WaveKind::kRarefaction:
        return fan_state(solution.flux, w, xi);
    }
  }
  return solution.uR;
}

std::vector<double> RiemannSolution::breakpoints() const {
  std::vector<double> pts;
  for (const Wave& w : waves) {
    if (w.kind == WaveKind::kConstant) continue;
    pts.push_back(w.xi_lo);
    pts.push_back(w.xi_hi);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double RiemannSolution::min_speed() const {
  const auto pts = breakpoints();
  return pts.empty() ? flux.df(uL) : pts.front();
}

double RiemannSolution::max_speed() const {
  const auto pts = breakpoints();
  return pts.empty() ? flux.df(uR) : pts.back();
}

std::string describe(const RiemannSolution& solution) {
  std::ostringstream os;
  os.precision(17);
  os << "riemann flux=" << solution.flux.ToString() << " uL=" << solution.uL
     << " uR=" << solution.uR << " waves=" << solution.waves.size() << "\n";
  int index = 0;
  for (const Wave& w : solution.waves) {
    os << "wave " << index++ << " kind=" << to_string(w.kind);
    switch (w.kind) {
      case WaveKind::kConstant:
        os << " u=" << w.u_left << " xi_lo=" << w.xi_lo << " xi_hi=" << w.xi_hi;
        break;
      case WaveKind::kShock:
        os << " speed=" << w.speed << " u_left=" << w.u_left << " u_right=" << w.u_right;
        break;
      case WaveKind::kRarefaction:
        os << " xi_lo=" << w.xi_lo << " xi_hi=" << w.xi_hi << " u_left=" << w.u_left
           << " u_right=" << w.u_right;
        break;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace wavefan
