#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "fixlat/catalog.hpp"
#include "fixlat/io.hpp"

using namespace fixlat;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const char* bin = std::getenv("FIXLAT_BIN");
  REQUIRE_MESSAGE(bin, "FIXLAT_BIN is not set");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path tmp(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "fixlat_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("group JSON round trip gives the same arrangement") {
  for (const char* s : {"H3", "J(D3:4)", "prod(mu2:3,mu2:3)"}) {
    auto G = build(s);
    auto j = group_to_json(G);
    auto H = group_from_json(json::parse(j.dump()));
    CHECK(H.order() == G.order());
    CHECK(H.name() == s);
    CHECK(arrangement_to_json(build_arrangement(H)).dump() == arrangement_to_json(build_arrangement(G)).dump());
  }
}

TEST_CASE("group JSON input forms") {
  auto flat = json::parse(R"({"dim": 2, "generators": [[0, -1, 1, 0]]})");
  CHECK(group_from_json(flat).order() == 4);
  auto nested = json::parse(R"({"dim": 2, "generators": [[[0, -1], [1, 0]]]})");
  CHECK(group_from_json(nested).order() == 4);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"generators": []})")), ParseError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"dim": 2, "generators": [[1, 2, 3]]})")), ParseError);
  auto open = json::parse(R"({"dim": 2, "generators": [[0, -1, 1, 0]], "elements": [[1, 0, 0, 1], [0, -1, 1, 0]]})");
  CHECK_THROWS_AS(group_from_json(open), NotSubgroup);
}

TEST_CASE("matrix output is cleaned") {
  Mat M(1, 2);
  M << -1e-17, 0.30000000000000004;
  CHECK(matrix_to_json(M).dump() == "[[0.0,0.3]]");
}

TEST_CASE("cohomology JSON layout") {
  auto A = build_arrangement(build("T3"));
  auto j = cohomology_to_json(gm_cohomology(A), stats(A), {});
  CHECK(j["betti"].dump() == "[0,13,0]");
  CHECK(j["stats"]["N"] == 7);
  CHECK(j["stats"]["C"] == 1);
}

TEST_CASE("DOT output") {
  auto A = build_arrangement(build("T3"));
  auto dot = lattice_dot(A);
  int nodes = 0;
  for (std::size_t p = 0; (p = dot.find("[label=", p)) != std::string::npos; ++p) ++nodes;
  CHECK(nodes == 9);
  auto q = quotient_dot(A, orbit_poset(build("T3"), A));
  CHECK(q.find("orbit size 4") != std::string::npos);
}

TEST_CASE("cli catalog") {
  auto r = run("catalog");
  CHECK(r.code == 0);
  CHECK(r.out.find("D3:n") != std::string::npos);
  CHECK(r.out.find("mixed(Oct3,T3)") != std::string::npos);
  auto j = json::parse(run("catalog --json --filter strict-codim-2").out);
  CHECK(j.size() == 5);
  CHECK(run("catalog --filter nonsense").code == 2);
}

TEST_CASE("cli analyze") {
  auto dot = tmp("t3.dot");
  auto r = run("analyze T3 --dot " + dot.string());
  CHECK(r.code == 0);
  auto text = slurp(dot);
  int nodes = 0;
  for (std::size_t p = 0; (p = text.find("[label=", p)) != std::string::npos; ++p) ++nodes;
  CHECK(nodes == 9);
  auto j = json::parse(run("analyze 'J(mu3:3)' --json").out);
  CHECK(j["profile"]["generated_at"] == 3);
  auto d4 = run("analyze 'prod(mu2:3,mu2:3)' --check dim4 --json");
  CHECK(d4.code == 0);
  CHECK(json::parse(d4.out)["check"]["pass"] == true);
  CHECK(run("analyze 'D3:'").code == 2);
  CHECK(run("analyze").code == 2);
  CHECK(run("analyze T3 --eq-tol 1e-3").code == 2);
}

TEST_CASE("cli output is deterministic") {
  auto a = run("analyze H3 --json").out;
  auto b = run("analyze H3 --json --parallel").out;
  CHECK(!a.empty());
  CHECK(a == b);
}

TEST_CASE("cli group export and re-import") {
  auto path = tmp("bc3.json");
  CHECK(run("group BC3 --out " + path.string()).code == 0);
  auto a = json::parse(run("analyze --input " + path.string() + " --json").out);
  auto b = json::parse(run("analyze BC3 --json").out);
  CHECK(a["arrangement"]["flats"].dump() == b["arrangement"]["flats"].dump());
  CHECK(a["cohomology"].dump() == b["cohomology"].dump());
}

TEST_CASE("cli numeric failures exit 3") {
  auto path = tmp("bad.json");
  std::ofstream(path) << R"({"dim": 2, "generators": [[2, 0, 0, 2]]})";
  CHECK(run("analyze --input " + path.string()).code == 3);
  std::ofstream(tmp("broken.json")) << "{";
  CHECK(run("analyze --input " + tmp("broken.json").string()).code == 2);
}

TEST_CASE("cli verify") {
  auto r = run("verify figures --n 3..4");
  CHECK(r.code == 0);
  CHECK(r.out.find("KNOWN-DISCREPANCY") != std::string::npos);
  CHECK(run("verify table1 --n 3..3").code == 0);
  CHECK(run("verify nonsense").code == 2);
  CHECK(run("verify table1 --n 5..2").code == 2);
}
