#include "wavefan/mesh.hpp"

#include <algorithm>
#include <cmath>

#include "wavefan/error.hpp"

namespace wavefan {

Mesh::Mesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 3) throw InvalidParameter("mesh needs at least 3 nodes");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::isfinite(nodes_[i])) throw InvalidParameter("mesh node is not finite");
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
      throw InvalidParameter("mesh nodes must be strictly increasing");
    }
  }
}

Mesh Mesh::Uniform(double lo, double hi, int intervals) {
  std::vector<double> nodes(static_cast<std::size_t>(intervals) + 1);
  for (int i = 0; i <= intervals; ++i) {
    nodes[i] = (i == intervals) ? hi : lo + (hi - lo) * (static_cast<double>(i) / intervals);
  }
  return Mesh(std::move(nodes));
}

std::vector<double> reconstruct_slope(const Mesh& mesh, std::span<const double> u) {
  const std::size_t n = mesh.size();
  if (u.size() != n) throw InvalidParameter("profile values do not match mesh size");
  std::vector<double> du(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hm = mesh[i] - mesh[i - 1];
    const double hp = mesh[i + 1] - mesh[i];
    du[i] = (hp * (u[i] - u[i - 1]) / hm + hm * (u[i + 1] - u[i]) / hp) / (hm + hp);
  }
  {
    const double h1 = mesh[1] - mesh[0];
    const double h2 = mesh[2] - mesh[1];
    du[0] = -(2 * h1 + h2) / (h1 * (h1 + h2)) * u[0] + (h1 + h2) / (h1 * h2) * u[1] -
            h1 / (h2 * (h1 + h2)) * u[2];
  }
  {
    const double h1 = mesh[n - 1] - mesh[n - 2];
    const double h2 = mesh[n - 2] - mesh[n - 3];
    du[n - 1] = (2 * h1 + h2) / (h1 * (h1 + h2)) * u[n - 1] - (h1 + h2) / (h1 * h2) * u[n - 2] +
                h1 / (h2 * (h1 + h2)) * u[n - 3];
  }
  return du;
}

Profile make_profile(Mesh mesh, std::vector<double> u) {
  Profile p;
  p.du = reconstruct_slope(mesh, u);
  p.mesh = std::move(mesh);
  p.u = std::move(u);
  return p;
}

HermiteSample interpolate_with_derivatives(const Profile& profile, double xi) {
  const auto nodes = profile.mesh.nodes();
  const std::size_t n = nodes.size();
  if (xi <= nodes.front()) return {profile.u.front(), 0.0, 0.0};
  if (xi >= nodes.back()) return {profile.u.back(), 0.0, 0.0};
  const auto it = std::upper_bound(nodes.begin(), nodes.end(), xi);
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(it - nodes.begin()), n - 1) - 1;
  const double x0 = nodes[k];
  const double h = nodes[k + 1] - x0;
  const double y0 = profile.u[k];
  const double y1 = profile.u[k + 1];
  const double delta = (y1 - y0) / h;
  double m0 = profile.du[k];
  double m1 = profile.du[k + 1];
  if (delta == 0.0) {
    m0 = m1 = 0.0;
  } else {
    if (m0 * delta < 0.0) m0 = 0.0;
    if (m1 * delta < 0.0) m1 = 0.0;
    const double a = m0 / delta;
    const double b = m1 / delta;
    const double s = a * a + b * b;
    if (s > 9.0) {
      const double tau = 3.0 / std::sqrt(s);
      m0 = tau * a * delta;
      m1 = tau * b * delta;
    }
  }
  const double t = (xi - x0) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  // Increment form (h00 = 1 - h01): flat cells reproduce their value exactly.
  const double value = y0 + h01 * (y1 - y0) + h * (h10 * m0 + h11 * m1);
  const double d10 = 3 * t2 - 4 * t + 1;
  const double d01 = (-6 * t2 + 6 * t) / h;
  const double d11 = 3 * t2 - 2 * t;
  const double slope = d01 * (y1 - y0) + d10 * m0 + d11 * m1;
  const double s10 = (6 * t - 4) / h;
  const double s01 = (-12 * t + 6) / (h * h);
  const double s11 = (6 * t - 2) / h;
  const double curvature = s01 * (y1 - y0) + s10 * m0 + s11 * m1;
  return {value, slope, curvature};
}

double interpolate(const Profile& profile, double xi) {
  return interpolate_with_derivatives(profile, xi).value;
}

Profile resample(const Profile& profile, const Mesh& mesh) {
  std::vector<double> u(mesh.size());
  for (std::size_t i = 0; i < mesh.size(); ++i) u[i] = interpolate(profile, mesh[i]);
  return make_profile(mesh, std::move(u));
}

double max_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace wavefan
