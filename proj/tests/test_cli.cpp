#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hilbgen::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(HILBGEN_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("Betti numbers and Euler series") {
  auto r = run({"hilb-betti", "--surface", "k3", "--order", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.parsed()["table"][2]["poincare"] == json::parse("[1,0,23,0,276,0,23,0,1]"));
  CHECK(run({"yz", "--order", "3"}).parsed()["coeffs"] == json::parse("[1,24,324,3200]"));
  auto e = run({"hilb-euler", "--surface", "p2", "--order", "3", "--format", "plain"});
  CHECK(e.code == 0);
  CHECK(e.out.find("coeffs: [1,3,9,22]") != std::string::npos);
}

TEST_CASE("cross-checks succeed") {
  CHECK(run({"strata-check", "--surface", "k3", "--order", "3"}).parsed()["passed"] == true);
  auto o = run({"orb-euler", "--surface", "k3", "--order", "2"}).parsed();
  CHECK(o["orbifold_euler"] == 324);
  CHECK(run({"orb-brute", "--e", "24", "--order", "3"}).parsed()["value"] == "3200/1");
  CHECK(run({"k3-check", "--order", "4"}).parsed()["passed"] == true);
  auto c = run({"calibrate", "--counts", fixture("p2_node_counts.txt"), "--order", "2"}).parsed();
  CHECK(c["integral"] == true);
  CHECK(c["B1"]["coeffs"] == json::parse(R"(["1/1","5/1","2/1"])"));
  auto w = run({"walls", "--lattice", fixture("wall_diag.json"), "--box", "-3,3"}).parsed();
  CHECK(w["walls"] == json::parse("[[0,-2],[0,2]]"));
  CHECK(w["separating"] == json::parse("[[0,2]]"));
}

TEST_CASE("DMVV product roundtrip") {
  auto r = run({"dmvv", "--table", fixture("k3_elliptic_genus.txt"), "--order", "1", "--q-order", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.parsed()["roundtrip"] == true);
  auto narrow = run({"dmvv", "--table", fixture("k3_elliptic_genus.txt"), "--order", "2", "--q-order", "1"});
  CHECK(narrow.code == 2);
  CHECK(narrow.err.find("n=2, m=1") != std::string::npos);
}

TEST_CASE("Fock checks") {
  auto ok = run({"fock-check", "--surface", "p2", "--weight-bound", "2", "--level-bound", "2"});
  CHECK(ok.code == 0);
  CHECK(ok.parsed()["passed"] == true);
  auto cut = run({"fock-check", "--surface", "k3", "--weight-bound", "6", "--relation", "heisenberg", "--timeout", "0.2"});
  CHECK(cut.code == 1);
  CHECK(cut.parsed()["reports"][0]["complete"] == false);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"hilb-betti", "--surface", "k3", "--order", "-1"}).code == 2);
  CHECK(run({"hilb-betti", "--surface", "enriques", "--order", "1"}).code == 2);
  CHECK(run({"hilb-betti", "--surface", fixture("missing.json"), "--order", "1"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"yz", "--order", "2", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("output is deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{{"hilb-betti", "--surface", "abelian", "--order", "3"},
                                                         {"nodepolys", "--order", "2"},
                                                         {"orb-poincare", "--surface", "p2", "--order", "3"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
