// End-to-end checks of the installed command-line surface: flags, file
// formats, JSON reports, exit codes, determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

#ifndef LIGHTCONE_CLI_PATH
#error "LIGHTCONE_CLI_PATH must point at the built binary"
#endif

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string path = std::string("/tmp/lightcone_cli_out_") +
                           std::to_string(::getpid()) + ".txt";
  const std::string command =
      std::string(LIGHTCONE_CLI_PATH) + " " + args + " > " + path + " 2>/dev/null";
  const int status = std::system(command.c_str());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::remove(path.c_str());
  return {WEXITSTATUS(status), buffer.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("classify subcommand") {
  const RunResult plain = run_cli("classify --plane 1,1,0,0");
  CHECK(plain.exit_code == 0);
  CHECK(plain.output.find("sphere") != std::string::npos);
  CHECK(plain.output.find("S-i") != std::string::npos);
  CHECK(plain.output.find("entire") != std::string::npos);

  const RunResult rep = run_cli("classify --plane 1,1,0,0 --json");
  REQUIRE(rep.exit_code == 0);
  const json payload = json::parse(rep.output);
  CHECK(payload["schema"] == 1);
  CHECK(payload["kind"] == "sphere");
  CHECK(payload["subcase"] == "S-i");
  CHECK(payload["entire"] == true);
  CHECK(payload["H"].get<double>() == doctest::Approx(-2.0));
  CHECK(payload["normal_norm"].get<double>() == doctest::Approx(-4.0));

  const json empty =
      json::parse(run_cli("classify --plane -1,0,0,0 --json").output);
  CHECK(empty["kind"] == "empty");
  CHECK_FALSE(empty.contains("H"));

  CHECK(run_cli("classify --plane bogus").exit_code == 2);
  CHECK(run_cli("classify").exit_code != 0);
}

TEST_CASE("generate subcommand writes deterministic meshes") {
  const std::string out1 = "/tmp/lightcone_mesh1.obj";
  const std::string out2 = "/tmp/lightcone_mesh2.obj";
  const std::string args =
      "generate --tau-expr 'cosh(u)' --grid -2,2,-2,2,41,41 --model halfspace --out ";
  CHECK(run_cli(args + out1).exit_code == 0);
  CHECK(run_cli(args + out2).exit_code == 0);
  const std::string mesh1 = slurp(out1), mesh2 = slurp(out2);
  CHECK(mesh1 == mesh2);
  CHECK(mesh1.substr(0, 2) == "v ");

  int vertices = 0, faces = 0;
  std::istringstream lines(mesh1);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("v ", 0) == 0) ++vertices;
    if (line.rfind("f ", 0) == 0) ++faces;
  }
  CHECK(vertices == 1681);
  CHECK(faces == 3200);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("generate from holomorphic data and from a plane") {
  const std::string out = "/tmp/lightcone_gexpr.obj";
  CHECK(run_cli("generate --g-expr 'exp(z)' --H -0.5 --grid -1,1,-1,1,5,5 "
                "--model halfspace --out " + out).exit_code == 0);
  std::ifstream in(out);
  std::string tag;
  double x, y, z;
  // tau = sqrt(-2H) cosh(u) = cosh(u) for H = -1/2.
  while (in >> tag >> x >> y >> z) {
    if (tag != "v") break;
    CHECK(z == doctest::Approx(std::cosh(x)).epsilon(1e-12));
  }
  std::remove(out.c_str());

  const RunResult plane = run_cli(
      "generate --plane 0,0,1,0 --grid -2,2,-2,2,9,9 --model halfspace --out " + out);
  CHECK(plane.exit_code == 0);  // partial domain: only u > 0 sampled
  std::remove(out.c_str());

  // Exactly one source must be given, and the model name must be known.
  CHECK(run_cli("generate --tau-expr 1 --builtin horosphere "
                "--grid -1,1,-1,1,3,3").exit_code == 2);
  CHECK(run_cli("generate --tau-expr 1 --grid -1,1,-1,1,3,3 "
                "--model spherical").exit_code == 2);
}

TEST_CASE("generate ball model keeps vertices inside the unit ball") {
  const std::string out = "/tmp/lightcone_ball.obj";
  CHECK(run_cli("generate --builtin sphere --H -2 --grid -5,5,-5,5,21,21 "
                "--model ball --out " + out).exit_code == 0);
  std::ifstream in(out);
  std::string tag;
  double x, y, z;
  int checked = 0;
  while (in >> tag) {
    if (tag == "v") {
      in >> x >> y >> z;
      CHECK(std::sqrt(x * x + y * y + z * z) < 1.0 - 1e-9);
      ++checked;
    } else {
      std::string rest;
      std::getline(in, rest);
    }
  }
  CHECK(checked == 441);
  std::remove(out.c_str());
}

TEST_CASE("scan subcommand") {
  const RunResult rep = run_cli(
      "scan --builtin counterexample --H -0.5 --radii 1,2,3 --json");
  REQUIRE(rep.exit_code == 0);
  const json payload = json::parse(rep.output);
  CHECK(payload["schema"] == 1);
  CHECK(payload["verdict"] == "diverging");
  const auto inf = payload["inf_K"].get<std::vector<double>>();
  REQUIRE(inf.size() == 3);
  CHECK(inf[2] == doctest::Approx(-2568.1).epsilon(5e-3));
  CHECK(inf[0] >= inf[1]);
  CHECK(inf[1] >= inf[2]);

  const json flat = json::parse(run_cli("scan --tau-expr 1 --radii 1,2 --json").output);
  CHECK(flat["verdict"] == "bounded-below-so-far");
}

TEST_CASE("distribution subcommand") {
  const json expo = json::parse(
      run_cli("distribution --g-expr 'exp(z)' --grid -2,4,-2,2,61,41 --json").output);
  CHECK(expo["schema"] == 1);
  CHECK(expo["K_min"].get<double>() == doctest::Approx(-0.25 * std::exp(8.0)));
  CHECK(expo["K_max"].get<double>() < 0.0);
  CHECK(expo["all_zero"] == false);

  const json mob = json::parse(
      run_cli("distribution --g-expr '(2*z+1)/(z+2)' --grid -1,1,-1,1,11,11 --json")
          .output);
  CHECK(mob["all_zero"] == true);
}

TEST_CASE("project subcommand") {
  const json sphere = json::parse(
      run_cli("project --builtin sphere --H -2 --grid -50,50,-50,50,101,101 --json")
          .output);
  CHECK(sphere["schema"] == 1);
  CHECK(sphere["injective"] == true);
  CHECK(sphere["verdict"] == "surjective");
  CHECK(sphere["attains_puncture"] == true);
  CHECK(sphere["bins_hit"].get<int>() * 100 >=
        sphere["bins_total"].get<int>() * 99);

  const json horo = json::parse(
      run_cli("project --builtin horosphere --grid -20,20,-20,20,41,41 --json")
          .output);
  CHECK(horo["verdict"] == "non-surjective");
  CHECK(horo["attains_puncture"] == false);
}

TEST_CASE("curvature subcommand and the FD step override") {
  const json exact = json::parse(
      run_cli("curvature --tau-expr 'cosh(u)' --grid -1,1,-1,1,9,9 --json").output);
  CHECK(exact["H_min"].get<double>() == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(exact["H_max"].get<double>() == doctest::Approx(-0.5).epsilon(1e-10));

  // LIGHTCONE_FD_STEP drives the finite-difference provider.
  const std::string path = "/tmp/lightcone_fd_out.json";
  const int status = std::system(
      (std::string("LIGHTCONE_FD_STEP=1e-3 ") + LIGHTCONE_CLI_PATH +
       " curvature --tau-expr 'cosh(u)' --grid -1,1,-1,1,9,9 --fd --json > " +
       path + " 2>/dev/null")
          .c_str());
  CHECK(WEXITSTATUS(status) == 0);
  const json fd = json::parse(slurp(path));
  CHECK(fd["H_min"].get<double>() == doctest::Approx(-0.5).epsilon(1e-6));
  std::remove(path.c_str());
}

TEST_CASE("verify subcommand") {
  const RunResult core = run_cli("verify core");
  CHECK(core.exit_code == 0);
  CHECK(core.output.find("[PASS]") != std::string::npos);
  CHECK(core.output.find("[FAIL]") == std::string::npos);

  const json rep = json::parse(run_cli("verify jets --json").output);
  CHECK(rep["schema"] == 1);
  CHECK(rep["pass"] == true);
  CHECK(rep["checks"].size() >= 4);

  CHECK(run_cli("verify bogus").exit_code == 2);
}

TEST_CASE("malformed expressions fail with a structured error") {
  CHECK(run_cli("generate --tau-expr 'cosh(' --grid -1,1,-1,1,5,5").exit_code == 2);
  CHECK(run_cli("generate --g-expr 'w+1' --H -2 --grid -1,1,-1,1,5,5").exit_code == 2);
  // A non-positive graph over the grid is rejected with coordinates.
  CHECK(run_cli("generate --tau-expr '0-1' --grid -1,1,-1,1,5,5").exit_code == 2);
}
