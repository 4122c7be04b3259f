#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wavefan/profile_bvp.hpp"

using namespace wavefan;

namespace {

ProfileProblem burgers(double eps, double uL, double uR) {
  return ProfileProblem{eps, uL, uR, FluxSpec::Burgers()};
}

}  // namespace

TEST_CASE("problem and option validation") {
  CHECK_THROWS_AS(burgers(0.0, 0.0, 1.0).validate(), InvalidParameter);
  CHECK_THROWS_AS(burgers(-1.0, 0.0, 1.0).validate(), InvalidParameter);
  CHECK_THROWS_AS(burgers(0.1, NAN, 1.0).validate(), InvalidParameter);
  SolveOptions o;
  o.continuation = {0.5, 0.5};
  CHECK_THROWS_AS(o.validate(), InvalidParameter);
  o.continuation.clear();
  o.damping = 1.0;
  CHECK_THROWS_AS(o.validate(), InvalidParameter);
}

TEST_CASE("truncated domain follows the wave speeds and tail width") {
  const ProfileProblem p = burgers(0.05, 1.0, -1.0);
  const auto [lo, hi] = truncate_domain(p, 1e-12);
  const double width = std::sqrt(2.0 * 0.05 * std::log(1e12)) + std::sqrt(0.05);
  CHECK(lo == doctest::Approx(-1.0 - width));
  CHECK(hi == doctest::Approx(1.0 + width));
  // The cubic composite wave reaches xi = 3 on the right.
  const ProfileProblem cubic{0.05, -1.0, 1.0, FluxSpec::Parse("poly:0,0,0,1")};
  CHECK(truncate_domain(cubic, 1e-12).second == doctest::Approx(3.0 + width));
}

TEST_CASE("meshes nest when node counts double") {
  const ProfileProblem p = burgers(0.05, 1.0, -1.0);
  const RiemannSolution exact = solve_exact(p.flux, p.uL, p.uR);
  const auto domain = truncate_domain(p, 1e-12, exact);
  SolveOptions coarse;
  coarse.base_nodes = 200;
  coarse.nodes_per_layer = 400;
  SolveOptions fine = coarse;
  fine.base_nodes *= 2;
  fine.nodes_per_layer *= 2;
  const Mesh a = build_mesh(p, coarse, exact, domain);
  const Mesh b = build_mesh(p, fine, exact, domain);
  REQUIRE(b.size() == 2 * a.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[2 * i]) < 1e-12);
  // Refinement concentrates nodes at the shock.
  double h_mid = 1e9, h_end = b[1] - b[0];
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    if (std::abs(b[i]) < 0.05) h_mid = std::min(h_mid, b[i + 1] - b[i]);
  }
  CHECK(h_mid < h_end / 5.0);
}

TEST_CASE("jacobian matches finite differences on random profiles") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const FluxSpec fluxes[] = {FluxSpec::Burgers(), FluxSpec::Parse("poly:0,0.3,-0.5,1"),
                             FluxSpec::Parse("poly:0.1,0,0,0,1")};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> nodes{-2.0};
    for (int k = 0; k < 40; ++k) nodes.push_back(nodes.back() + 0.01 + 0.2 * unit(rng));
    const Mesh mesh(nodes);
    std::vector<double> u;
    for (std::size_t k = 0; k < mesh.size(); ++k) u.push_back(2.0 * unit(rng) - 1.0);
    const ProfileProblem p{0.02 + unit(rng), u.front(), u.back(), fluxes[trial % 3]};
    const Tridiagonal j = jacobian(p, mesh, u);
    const Tridiagonal fd = oracle::fd_jacobian(p, mesh, u);
    for (std::size_t i = 0; i < mesh.size(); ++i) {
      CHECK(oracle::rel_diff(j.diag[i], fd.diag[i]) <= 1e-6);
      if (i + 1 < mesh.size()) {
        CHECK(oracle::rel_diff(j.lower[i], fd.lower[i]) <= 1e-6);
        CHECK(oracle::rel_diff(j.upper[i], fd.upper[i]) <= 1e-6);
      }
    }
  }
}

TEST_CASE("residual vanishes for constants and carries boundary mismatch") {
  const Mesh m = Mesh::Uniform(-1.0, 1.0, 10);
  const ProfileProblem p = burgers(0.1, 0.3, 0.5);
  const auto r = residual(p, m, std::vector<double>(11, 0.3));
  CHECK(r.front() == 0.0);
  CHECK(r.back() == doctest::Approx(-0.2));
  for (std::size_t i = 1; i + 1 < r.size(); ++i) CHECK(r[i] == 0.0);
}

TEST_CASE("default continuation schedule") {
  const auto s = default_continuation(0.05);
  CHECK(s.front() == 1.0);
  CHECK(s.back() == 0.05);
  for (std::size_t k = 1; k < s.size(); ++k) {
    CHECK(s[k] < s[k - 1]);
    CHECK(s[k] >= 0.5 * s[k - 1]);
  }
  CHECK(default_continuation(3.0) == std::vector<double>{3.0});
}

TEST_CASE("constant data has the constant solution") {
  const SolveResult r = solve_profile(burgers(0.2, 0.3, 0.3));
  CHECK(r.report.converged);
  for (double v : r.profile.u) CHECK(v == 0.3);
  CHECK(max_norm(residual(burgers(0.2, 0.3, 0.3), r.profile)) <= 1e-12);
}

TEST_CASE("burgers shock profile is odd and decreasing") {
  const ProfileProblem p = burgers(0.1, 1.0, -1.0);
  const SolveResult r = solve_profile(p);
  CHECK(r.report.converged);
  CHECK(r.report.residual_history.back() <= 1e-8);
  CHECK(std::abs(interpolate(r.profile, 0.0)) <= 1e-8);
  CHECK(interpolate(r.profile, -0.3) == doctest::Approx(-interpolate(r.profile, 0.3)));
  CHECK(r.report.stage_epsilons.back() == 0.1);
}

TEST_CASE("newton_solve error paths") {
  const ProfileProblem p = burgers(0.05, -1.0, 1.0);
  const Mesh m = Mesh::Uniform(-3.0, 3.0, 200);
  std::vector<double> u(m.size(), 0.0);
  CHECK_THROWS_AS(newton_solve(p, make_profile(m, u), {}), InvalidParameter);
  u.front() = -1.0;
  u.back() = 1.0;
  SolveOptions one;
  one.max_iter = 1;
  try {
    newton_solve(p, make_profile(m, u), one);
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK_FALSE(e.report().converged);
    CHECK(e.report().residual_history.size() >= 1);
  }
}

TEST_CASE("continuation sweep") {
  const ProfileProblem p = burgers(0.1, -1.0, 1.0);
  SolveOptions o;
  o.base_nodes = 500;
  o.nodes_per_layer = 1000;
  const auto sweep = continuation_sweep(p, {0.2, 0.1, 0.05}, o);
  REQUIRE(sweep.size() == 3);
  CHECK(sweep[2].first == 0.05);
  // Inside the fan u = xi solves the equation exactly; corner layers decay away from +-1.
  CHECK(std::abs(interpolate(sweep[2].second, 0.2) - 0.2) < 1e-2);
  CHECK(std::abs(interpolate(sweep[2].second, 0.2) - 0.2) <
        std::abs(interpolate(sweep[0].second, 0.2) - 0.2));
  CHECK_THROWS_AS(continuation_sweep(p, {0.1, 0.2}, o), InvalidParameter);
}
