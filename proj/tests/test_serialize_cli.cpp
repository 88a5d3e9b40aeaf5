#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wallforge/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace wallforge;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  auto r = run_cli(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::size_t count(const std::string &hay, const std::string &needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

} // namespace

TEST_CASE("fixed formatting") {
  CHECK(format_fixed(-0.0) == "0.000000");
  CHECK(format_fixed(-1e-9) == "0.000000");
  CHECK(format_fixed(1.5) == "1.500000");
  CHECK(format_fixed(-2.25) == "-2.250000");
}

TEST_CASE("json round trips") {
  for (int k = 0; k < 100; ++k) {
    auto q = testkit::random_rational();
    CHECK(rational_from_json(to_json(q)) == q);
    auto v = testkit::random_lattice();
    CHECK(chern_from_json(to_json(v)) == v);
    ComplexExact z{testkit::random_rational(), testkit::random_rational()};
    CHECK(complex_from_json(to_json(z)) == z);
  }
  auto v = parse_chern("2,-1,-1/2,-1/6");
  CHECK(to_json(v).dump() == R"(["2","-1","-1/2","-1/6"])");
  CHECK_THROWS_AS(chern_from_json(json::parse(R"(["1","0","1/3","0"])")), LatticeError);
  CHECK_NOTHROW(chern_from_json(json::parse(R"(["1","0","1/3","0"])"), false));
  CHECK_THROWS_AS(rational_from_json(json::parse("1.5")), ParseError);

  Surd s(Rational(1, 2), Rational(-3), Rational(5));
  CHECK(surd_from_json(to_json(s)) == s);

  auto w = tilt_wall(parse_chern("1,-1,1/2,-1/6"), v);
  auto w2 = circle_from_json(to_json(w));
  CHECK(w2.center_beta == w.center_beta);
  CHECK(w2.radius_sq == w.radius_sq);
  CHECK(w2.u == w.u);
  CHECK(w2.v == w.v);

  auto th = theta_curve(v);
  auto th2 = curve_from_json(to_json(th));
  CHECK(th2.poly == th.poly);
  CHECK(th2.kind == th.kind);
  CHECK(to_json(th2) == to_json(th));

  QuadraticRoot r(Rational(1), Rational(0), Rational(-2), QuadraticRoot::Which::Plus);
  CHECK(root_from_json(to_json(r)) == r);
}

TEST_CASE("enumeration csv") {
  auto rep = enumerate_tilt_destabilizers(parse_chern("2,-1,-1/2,-1/6"), Rational(1, 16));
  auto csv = to_csv(rep);
  CHECK(csv.rfind("u0,u1,u2,center,radius_sq\n", 0) == 0);
  CHECK(count(csv, "\n") == rep.candidates.size() + 1);
}

TEST_CASE("cli examples") {
  CHECK(run_json({"twist", "--v", "2,-1,-1/2,-1/6", "--beta", "-2"}) ==
        json::parse(R"({"c":["2","3","3/2","-1/2"]})"));
  auto sl = run_json({"slopes", "--v", "2,-1,-1/2,-1/6", "--beta", "-2", "--t", "1", "--s", "1/3"});
  CHECK(sl["nu_rational"] == "1/6");
  CHECK(sl["lambda"] == "-4");
  CHECK(sl["rho"] == "1/2");
  CHECK(run_json({"polystab", "--b", "-1/2"})["type"] == "PT");
  CHECK(run_json({"polystab", "--b", "0"})["type"] == "LargeVolume");
  auto grid = run_json({"polystab", "--grid", "-2:2:1/4"});
  CHECK(grid["classifications"].size() == 17);
  CHECK(grid["consistent"] == true);
  auto ch = run_json({"charge", "--v", "2,-1,-1/2,-1/6", "--beta", "-2", "--t", "1", "--K", "1"});
  CHECK(ch.contains("Z"));
  CHECK(ch.contains("q_form"));
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({}).code == cli::kUsage);
  CHECK(run_cli({"bogus"}).code == cli::kUsage);
  CHECK(run_cli({"twist", "--v", "1,x,0,0", "--beta", "0"}).code == cli::kUsage);
  CHECK(run_cli({"twist", "--v", "1,0,1/3,0", "--beta", "0"}).code == cli::kDomain);
  CHECK(run_cli({"slopes", "--v", "1,0,0,0", "--beta", "0", "--t", "0"}).code == cli::kDomain);
  CHECK(run_cli({"polystab", "--grid", "2:-2:0"}).code == cli::kUsage);
  CHECK(run_cli({"walls", "--v", "2,-1,-1/2,-1/6", "--out", "/nonexistent-dir/x.json"}).code == cli::kIo);
  auto err = run_cli({"twist", "--v", "1,0,1/3,0", "--beta", "0"});
  CHECK_FALSE(err.err.empty());
  CHECK(err.out.empty());
}

TEST_CASE("walls outputs") {
  auto j = run_json({"walls", "--v", "2,-1,-1/2,-1/6"});
  CHECK(j["largest_wall"]["center_beta"] == "-3/2");
  CHECK(j["largest_wall"]["radius_sq"] == "1/4");
  CHECK(j["theta"]["kind"] == "Theta");
  auto svg = run_cli({"walls", "--v", "2,-1,-1/2,-1/6", "--format", "svg"});
  REQUIRE(svg.code == 0);
  CHECK(svg.out.find("width=\"800\"") != std::string::npos);
  CHECK(svg.out.find("height=\"600\"") != std::string::npos);
  CHECK(count(svg.out, "<path") == 2 + j["walls"].size());
  CHECK(count(svg.out, "<circle") == 1);
  auto csv = run_cli({"walls", "--v", "2,-1,-1/2,-1/6", "--format", "csv"});
  CHECK(csv.out.rfind("curve_id,kind,beta,alpha,branch\n", 0) == 0);
  CHECK(csv.out.find("theta,Theta,") != std::string::npos);

  std::string path = "wallforge_test_out.json";
  REQUIRE(run_cli({"walls", "--v", "2,-1,-1/2,-1/6", "--out", path}).code == 0);
  std::ifstream in(path);
  CHECK(json::parse(in) == j);
  std::remove(path.c_str());
}

TEST_CASE("determinism across runs and thread counts") {
  for (const char *fmt : {"json", "csv", "svg"}) {
    std::string first;
    for (const char *threads : {"1", "4", "1", "4"}) {
      setenv("WALLFORGE_THREADS", threads, 1);
      auto r = run_cli({"walls", "--v", "2,-1,-1/2,-1/6", "--format", fmt});
      REQUIRE(r.code == 0);
      if (first.empty()) first = r.out;
      CHECK(r.out == first);
    }
  }
  unsetenv("WALLFORGE_THREADS");
}

TEST_CASE("scenarios") {
  for (const char *name : {"collapsing", "fake", "honest"}) {
    auto j = run_json({"scenario", name});
    INFO(name);
    REQUIRE_FALSE(j["verdicts"].empty());
    for (const auto &v : j["verdicts"]) {
      CHECK(v["status"] == "pass");
      CHECK(v["basis"] == "computed");
    }
  }
  auto fake = run_json({"scenario", "fake"});
  CHECK(fake["computed"]["epsilon_bound"]["value"] == "13/12");
  CHECK(run_cli({"scenario", "nope"}).code == cli::kUsage);
}
