#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "actbij/cli.hpp"

namespace {

const std::string kData = ACTBIJ_TEST_DATA;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "actbij");
  std::ostringstream out, err;
  const int code = actbij::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("actbij_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("tutte --check agrees on all routes") {
  auto r = run({"tutte", kData + "/k4.graph", "--check"});
  CHECK(r.code == actbij::kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() >= 2);
  CHECK(ls.front() == "i\tj\tb_ij");
  CHECK(ls.back() == "agree=4/4");
  CHECK(r.out.find("polynomial\tx^3+3x^2+2x+4xy+2y+3y^2+y^3\n") != std::string::npos);
  CHECK(r.out.find("1\t1\t4\n") != std::string::npos);
}

TEST_CASE("tutte on an om file") {
  auto r = run({"tutte", kData + "/k3.om"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "polynomial\tx^2+x+y");
}

TEST_CASE("table rows for the triangle") {
  auto r = run({"table", kData + "/k3.graph"});
  CHECK(r.code == 0);
  const std::vector<std::string> want = {
      "filtration\tpartition\tclass\tbasis",
      "[-]<1<1,2,3\t1|2,3\t- 1 2,3 1,2,3\t1,2",
      "[-]<1,2,3\t1,2,3\t3 1,2\t1,3",
      "-<[1,2,3]\t1,2,3*\t2 1,3\t2,3",
  };
  CHECK(lines(r.out) == want);
}

TEST_CASE("table for K4 has one row per basis") {
  auto r = run({"table", kData + "/k4.graph"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 17);
}

TEST_CASE("alpha and alpha-inverse") {
  auto r = run({"alpha", kData + "/k4.graph", "--reorient", "3,5,6"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,3,6\n");
  r = run({"alpha", kData + "/k4.graph"});
  CHECK(r.out == "1,2,4\n");
  r = run({"alpha-inverse", kData + "/k4.graph", "--basis", "1,3,6"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"reorientation", "3,5,6", "1,2,4"});
}

TEST_CASE("activities fields") {
  auto r = run({"activities", kData + "/k4.graph", "--reorient", "3,4,5,6"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "field\tvalue");
  CHECK(ls[3] == "partition\t1,2,3|4,5,6");
}

TEST_CASE("refined table has 2^n rows") {
  auto r = run({"refined", kData + "/k4.graph"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 65);
}

TEST_CASE("verify passes on the fixtures") {
  for (const char* f : {"/k3.graph", "/k4.graph", "/flats.graph", "/k3.om"}) {
    auto r = run({"verify", kData + f});
    CHECK_MESSAGE(r.code == 0, f);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}

TEST_CASE("bad input exits with 2") {
  CHECK(run({"alpha", kData + "/does-not-exist.graph"}).code == actbij::kExitBadInput);
  CHECK(run({"alpha", kData + "/k4.graph", "--reorient", "9"}).code == actbij::kExitBadInput);
  CHECK(run({"alpha-inverse", kData + "/k4.graph", "--basis", "1,2,3"}).code == actbij::kExitBadInput);
  CHECK(run({"bogus"}).code == actbij::kExitBadInput);
  CHECK(run({}).code == actbij::kExitBadInput);
  const auto junk = temp_file("junk.graph", "graph 2\na\n");
  auto r = run({"tutte", junk});
  CHECK(r.code == actbij::kExitBadInput);
  CHECK_FALSE(r.err.empty());
  // an om file violating orthogonality
  const auto bad_om = temp_file("bad.om", "om 2\nC ++\nD ++\n");
  CHECK(run({"tutte", bad_om}).code == actbij::kExitBadInput);
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* cmd : {"table", "refined", "tutte", "verify"}) {
    const auto a = run({cmd, kData + "/k4.graph"});
    const auto b = run({cmd, kData + "/k4.graph"});
    CHECK(a.out == b.out);
  }
}
