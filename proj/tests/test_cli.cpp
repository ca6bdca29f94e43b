#include "doctest.h"

#include "cli_app.hpp"
#include "oscint/coefficients.hpp"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

using namespace oscint;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) v.push_back(f);
  return v;
}

std::filesystem::path tmp(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("oscint_cli_" + name);
  std::filesystem::remove(p);
  return p;
}

double digits_of(const Run& r) {
  auto ls = lines(r.out);
  return std::stod(fields(ls.at(2)).at(7));
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("coeffs: classical JSON carries the exact weights") {
    auto r = run({"coeffs", "--method", "classical"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("433489274083/237758976000") != std::string::npos);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["method"] == "classical");
    CHECK(j["b"].size() == 15);
    CHECK(j["version"] == "oscint 1.0.0");
  }

  TEST_CASE("coeffs: fitted methods need v > 0") {
    auto r = run({"coeffs", "--method", "pfd0", "--v", "0"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("v must be > 0") != std::string::npos);
  }

  TEST_CASE("coeffs: PF-D6 at 0.5 matches the series to 8 digits" * doctest::may_fail()) {
    auto j = nlohmann::json::parse(run({"coeffs", "--method", "pfd6", "--v", "0.5"}).out);
    auto t = taylor_b(MethodId::pfd(6), 0.5);
    for (int k = 0; k < 7; ++k) CHECK(j["b"][k + 1].get<double>() == doctest::Approx(t[k]).epsilon(1e-8));
  }

  TEST_CASE("coeffs: PF-D6 at 0.5 against the truncated series (measured)") {
    // the series stops at v^10; at v = 0.5 the first dropped term is ~1e-5 relative
    auto j = nlohmann::json::parse(run({"coeffs", "--method", "pfd6", "--v", "0.5"}).out);
    auto t = taylor_b(MethodId::pfd(6), 0.5);
    double worst = 0;
    for (int k = 0; k < 7; ++k) worst = std::max(worst, std::abs(j["b"][k + 1].get<double>() / t[k] - 1));
    CHECK(worst < 1e-5);
    CHECK(worst > 1e-8);
  }

  TEST_CASE("coeffs: v grid in CSV") {
    auto r = run({"coeffs", "--method", "pfd3", "--v", "0.2,0.4", "--format", "csv"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    CHECK(ls[0] == "# oscint 1.0.0");
    CHECK(ls[1] == "method,v,j,a,b,precision_bits_used");
    CHECK(ls.size() == 2 + 2 * 15);
  }

  TEST_CASE("phaselag curve") {
    auto r = run({"phaselag", "--method", "pfd2", "--v", "0.3", "--smax", "1", "--points", "11"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    CHECK(ls.size() == 13);
    CHECK(ls[1] == "method,v,s,phase_lag");
    CHECK(run({"phaselag", "--points", "1"}).code == 2);
  }

  TEST_CASE("stability: classical grid is constant in v") {
    auto r = run({"stability", "--method", "classical", "--grid", "50x50", "--smax", "2", "--vmax", "2"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 2 + 2500);
    CHECK(ls[1] == "s,v,stable");
    std::map<std::string, std::set<std::string>> by_s;
    for (std::size_t k = 2; k < ls.size(); ++k) {
      auto f = fields(ls[k]);
      by_s[f[0]].insert(f[2]);
    }
    CHECK(by_s.size() == 50);
    for (const auto& [s, flags] : by_s) CHECK(flags.size() == 1);
    CHECK(run({"stability", "--grid", "50by50"}).code == 2);
  }

  TEST_CASE("solve: one row in the benchmark format") {
    auto r = run({"solve", "--method", "pfd2", "--E", "341.495874", "--h", "0.00375"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[1] == "E,method,h,steps,rhs_evals,tan_delta,delta,digits,omega_convention");
    auto f = fields(ls[2]);
    CHECK(f[1] == "pfd2");
    CHECK(f[3] == "4000");
    CHECK(f[8] == "paper");
    CHECK(std::stod(f[7]) > 4.9);
  }

  TEST_CASE("solve: PF-D4 beats classical at h = 0.0075" * doctest::may_fail()) {
    auto a = run({"solve", "--method", "pfd4", "--E", "341.495874", "--h", "0.0075"});
    auto b = run({"solve", "--method", "classical", "--E", "341.495874", "--h", "0.0075"});
    CHECK(digits_of(a) > digits_of(b));
  }

  TEST_CASE("solve: h = 0.0075 is past the periodicity interval (measured)") {
    auto a = run({"solve", "--method", "pfd4", "--E", "341.495874", "--h", "0.0075"});
    auto b = run({"solve", "--method", "classical", "--E", "341.495874", "--h", "0.0075"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(digits_of(a) < 1);
    CHECK(digits_of(b) < 1);
  }

  TEST_CASE("solve: usage errors") {
    CHECK(run({"solve", "--E", "-3"}).code == 2);
    CHECK(run({"solve", "--E", "341.495874", "--h", "1"}).code == 2);
    CHECK(run({"solve", "--E", "30", "--method", "pfd1"}).code == 2);  // E - 50 < 0
    CHECK(run({"solve", "--E", "341.495874", "--omega-convention", "other"}).code == 2);
    CHECK(run({"solve"}).code == 2);
  }

  TEST_CASE("bench: energies x methods x h-ladder rows") {
    auto r = run({"bench", "--energies", "989.701916,341.495874,163.215341", "--methods", "all", "--h-ladder", "8"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    CHECK(ls.size() == 2 + 3 * 8 * 8);
    CHECK(std::stod(fields(ls[2])[0]) == 989.701916);
    CHECK(fields(ls.back())[1] == "pfd6");
  }

  TEST_CASE("bench: output is deterministic across thread counts") {
    auto a = run({"bench", "--energies", "163.215341", "--methods", "classical,pfd5", "--h-ladder", "4", "--threads", "1"});
    auto b = run({"bench", "--energies", "163.215341", "--methods", "classical,pfd5", "--h-ladder", "4", "--threads", "4"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(lines(a.out).size() == 2 + 2 * 4);
  }

  TEST_CASE("unknown flags and subcommands are usage errors") {
    CHECK(run({"coeffs", "--bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"coeffs", "--method", "pfd9"}).code == 2);
    CHECK(run({"coeffs", "--format", "xml"}).code == 2);
  }

  TEST_CASE("version and help") {
    auto v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out == "oscint 1.0.0\n");
    auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("bench") != std::string::npos);
  }

  TEST_CASE("--out writes atomically and identically") {
    auto p1 = tmp("a.json"), p2 = tmp("b.json");
    REQUIRE(run({"coeffs", "--method", "pfd1", "--v", "0.7", "--out", p1.string()}).code == 0);
    REQUIRE(run({"coeffs", "--method", "pfd1", "--v", "0.7", "--out", p2.string()}).code == 0);
    std::ifstream f1(p1), f2(p2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(!s1.str().empty());
    CHECK(s1.str() == s2.str());
    for (const auto& e : std::filesystem::directory_iterator(p1.parent_path()))
      CHECK(e.path().filename().string().find("oscint_cli_a.json.tmp") == std::string::npos);
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
  }

  TEST_CASE("no output file on error") {
    auto p = tmp("err.json");
    // v within 1e-3 of the pole at pi
    auto r = run({"coeffs", "--method", "pfd1", "--v", "3.1414", "--out", p.string()});
    CHECK(r.code == 3);
    CHECK_FALSE(std::filesystem::exists(p));
    auto u = run({"coeffs", "--method", "pfd1", "--v", "0", "--out", p.string()});
    CHECK(u.code == 2);
    CHECK_FALSE(std::filesystem::exists(p));
  }
}
