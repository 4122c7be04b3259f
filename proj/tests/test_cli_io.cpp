#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wavefan/cli_io.hpp"
#include "wavefan/profile_bvp.hpp"

using namespace wavefan;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("wavefan_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("parse a solve command") {
  const RunConfig c = parse_config({"solve", "--flux", "burgers", "--ul", "-1", "--ur", "1",
                                    "--eps", "0.05"});
  CHECK(c.command == Command::kSolve);
  CHECK(c.flux.is_burgers());
  CHECK(c.uL == -1.0);
  CHECK(c.uR == 1.0);
  CHECK(c.eps == std::vector<double>{0.05});
}

TEST_CASE("parse flux, schedules and errors") {
  const RunConfig c = parse_config({"sweep", "--flux", "poly:0,0,0,1", "--eps", "0.1,0.05"});
  CHECK(c.flux.coefficients() == std::vector<double>{0, 0, 0, 1});
  CHECK(c.epsilon() == 0.05);
  try {
    parse_config({"solve", "--eps", "0.1,0.2"});
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("0.2") != std::string::npos);
  }
  try {
    parse_config({"solve", "--frobnicate", "3"});
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("--frobnicate") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config({"solve", "--flux", "poly:1,q"}), ParseError);
  CHECK_THROWS_AS(parse_config({"integrate"}), ParseError);
  CHECK_THROWS_AS(parse_config(std::vector<std::string>{}), ParseError);
  CHECK_THROWS_AS(parse_config({"solve", "--out", "/no/such/dir/x.csv"}), ParseError);
  CHECK_THROWS_AS(parse_config({"solve", "--help"}), HelpRequested);
}

TEST_CASE("config file supplies defaults that flags override") {
  const std::string path = temp_path("config.ini");
  {
    std::ofstream out(path);
    out << "ul=2\nur=-0.5\neps=0.2,0.1\nflux=poly:0,0,0,1\n";
  }
  const RunConfig c = parse_config({"solve", "--config", path, "--ur", "-1"});
  CHECK(c.uL == 2.0);
  CHECK(c.uR == -1.0);
  CHECK(c.eps == std::vector<double>{0.2, 0.1});
  CHECK_FALSE(c.flux.is_burgers());
  {
    std::ofstream out(path);
    out << "unknown_key=3\n";
  }
  CHECK_THROWS_AS(parse_config({"solve", "--config", path}), ParseError);
  std::filesystem::remove(path);
}

TEST_CASE("seed from the environment") {
  ::setenv("WAVEFAN_SEED", "12345", 1);
  CHECK(parse_config({"verify"}).seed == 12345u);
  CHECK(parse_config({"verify", "--seed", "7"}).seed == 7u);
  ::unsetenv("WAVEFAN_SEED");
  CHECK(parse_config({"verify"}).seed == kDefaultSeed);
}

TEST_CASE("profile round trip") {
  SolveOptions o;
  o.base_nodes = 200;
  o.nodes_per_layer = 400;
  const Profile p = solve_profile({0.1, 1.0, -1.0, FluxSpec::Burgers()}, o).profile;
  const std::string path = temp_path("profile.csv");
  write_profile(p, path);
  const Profile q = read_profile(path);
  REQUIRE(q.size() == p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(q.mesh[i] == p.mesh[i]);
    CHECK(q.u[i] == p.u[i]);
    CHECK(q.du[i] == p.du[i]);
  }
  const std::string first = slurp(path);
  write_profile(q, path);
  CHECK(slurp(path) == first);
  std::filesystem::remove(path);
}

TEST_CASE("malformed profile files") {
  std::istringstream no_header("0,1,0\n1,1,0\n2,1,0\n");
  CHECK_THROWS_WITH_AS(read_profile(no_header), doctest::Contains("line 1"), ParseError);
  std::istringstream decreasing("xi,u,du\n0,1,0\n1,1,0\n0.5,1,0\n");
  CHECK_THROWS_WITH_AS(read_profile(decreasing), doctest::Contains("line 4"), ParseError);
  std::istringstream bad_number("xi,u,du\n0,1,0\n1,abc,0\n2,1,0\n");
  CHECK_THROWS_WITH_AS(read_profile(bad_number), doctest::Contains("line 3"), ParseError);
  std::istringstream short_row("xi,u,du\n0,1\n");
  CHECK_THROWS_AS(read_profile(short_row), ParseError);
  CHECK_THROWS_AS(read_profile(std::string("/no/such/file.csv")), IoError);
}

TEST_CASE("plot data") {
  SolveOptions o;
  o.base_nodes = 200;
  o.nodes_per_layer = 400;
  const ProfileProblem p{0.1, -1.0, 1.0, FluxSpec::Burgers()};
  const auto sweep = continuation_sweep(p, {0.1, 0.05}, o);
  std::vector<LabeledProfile> labeled;
  for (const auto& [eps, prof] : sweep) labeled.push_back({"eps" + std::to_string(eps), prof});
  const std::string csv = temp_path("plot.csv");
  const std::string svg = temp_path("plot.svg");
  emit_plotdata(labeled, solve_exact(p.flux, -1.0, 1.0), csv, svg, 101);
  const std::string text = slurp(csv);
  const std::string header = text.substr(0, text.find('\n'));
  CHECK(count(header, ",") == 3);
  CHECK(count(text, "\n") == 102);
  CHECK(count(slurp(svg), "<polyline") == 3);

  emit_plotdata({}, std::nullopt, csv, svg);
  CHECK(slurp(csv) == "xi\n");
  CHECK(count(slurp(svg), "<polyline") == 0);
  std::filesystem::remove(csv);
  std::filesystem::remove(svg);
}

TEST_CASE("run executes commands") {
  std::ostringstream out;
  CHECK(run(parse_config({"riemann", "--flux", "poly:0,0,0,1"}), out) == 0);
  CHECK(out.str().find("shock") != std::string::npos);
  std::ostringstream verify;
  CHECK(run(parse_config({"verify", "--ul", "1", "--ur", "-1", "--eps", "0.1", "--check",
                          "symmetry"}),
            verify) == 0);
  CHECK(verify.str().find("\"pass\": true") != std::string::npos);
  CHECK_THROWS_AS(run(parse_config({"verify", "--check", "nonsense"}), verify), InvalidParameter);
}

TEST_CASE("identical configs produce identical files") {
  const std::string a = temp_path("det_a.csv");
  const std::string b = temp_path("det_b.csv");
  std::ostringstream sink;
  for (const auto& path : {a, b}) {
    run(parse_config({"solve", "--ul", "1", "--ur", "-1", "--eps", "0.1", "--base-nodes", "300",
                      "--nodes-per-layer", "600", "--out", path}),
        sink);
  }
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
