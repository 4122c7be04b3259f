#pragma once

#include <span>
#include <vector>

namespace wavefan {

/// Strictly increasing xi-nodes, at least 3 of them.
class Mesh {
 public:
  Mesh() = default;
  /// Throws InvalidParameter unless nodes are finite, strictly increasing and
  /// number at least 3.
  explicit Mesh(std::vector<double> nodes);

  static Mesh Uniform(double lo, double hi, int intervals);

  std::size_t size() const { return nodes_.size(); }
  double operator[](std::size_t i) const { return nodes_[i]; }
  double front() const { return nodes_.front(); }
  double back() const { return nodes_.back(); }
  std::span<const double> nodes() const { return nodes_; }

 private:
  std::vector<double> nodes_;
};

/// Sampled wave fan: u and the reconstructed slope du at each mesh node.
struct Profile {
  Mesh mesh;
  std::vector<double> u;
  std::vector<double> du;

  std::size_t size() const { return mesh.size(); }
};

/// Builds a profile from nodal values, reconstructing du.
Profile make_profile(Mesh mesh, std::vector<double> u);

/// Second-order slope reconstruction: central differences on interior nodes,
/// one-sided three-point formulas at both ends.
std::vector<double> reconstruct_slope(const Mesh& mesh, std::span<const double> u);

/// Piecewise cubic Hermite interpolant of a profile using du with the
/// Fritsch-Carlson limiter, so monotone data stays monotone. Outside the mesh
/// the end values are held constant.
double interpolate(const Profile& profile, double xi);

/// Same interpolant; also returns the first and second derivative at xi.
struct HermiteSample {
  double value;
  double slope;
  double curvature;
};
HermiteSample interpolate_with_derivatives(const Profile& profile, double xi);

/// Samples a profile on a new mesh (far-field values outside the old range).
Profile resample(const Profile& profile, const Mesh& mesh);

/// Max-norm of a vector.
double max_norm(std::span<const double> v);

}  // namespace wavefan
