#include <doctest.h>

#include "fixlat/catalog.hpp"
#include "fixlat/cohomology.hpp"

using namespace fixlat;

namespace {

std::vector<long long> betti(const char* spec) { return gm_cohomology(build_arrangement(build(spec))).h; }

using V = std::vector<long long>;

}  // namespace

TEST_CASE("rotation groups give wedges of circles") {
  CHECK(betti("mu3:4") == V{0, 1, 0});
  CHECK(betti("T3") == V{0, 13, 0});
  CHECK(betti("Oct3") == V{0, 25, 0});
  CHECK(betti("Ico3") == V{0, 61, 0});
  // sphere minus 2N points, N = n + 1 lines
  for (int n = 2; n <= 9; ++n) CHECK(betti(("D3:" + std::to_string(n)).c_str()) == V{0, 2 * (n + 1) - 1, 0});
}

TEST_CASE("reflection arrangements: h0 is chambers minus one, chambers are the group order") {
  for (const char* s : {"A3", "BC3", "H3", "prod(I2:5,A1)"}) {
    auto G = build(s);
    auto h = gm_cohomology(build_arrangement(G));
    CHECK_MESSAGE(h.at(0) == G.order() - 1, s);
    CHECK(h.at(2) == 0);
  }
  CHECK(betti("H3") == V{119, 0, 0});
  CHECK(betti("BC3")[0] == 47);
}

TEST_CASE("small cases") {
  CHECK(betti("J(triv:3)") == V{0, 0, 1});
  CHECK(betti("J(mu3:3)") == V{0, 1, 0});
  CHECK(betti("J(D3:3)") == V{5, 6, 0});
  CHECK(betti("triv:3") == V{0, 0, 0});
  // one hyperplane: two half-spaces
  CHECK(betti("prod(triv:2,A1)") == V{1, 0, 0});
}

TEST_CASE("products of punctured planes") {
  for (int p = 2; p <= 4; ++p)
    for (int q = 2; q <= 4; ++q) {
      std::string s = "prod(mu2:" + std::to_string(p) + ",mu2:" + std::to_string(q) + ")";
      CHECK_MESSAGE((betti(s.c_str()) == V{0, 2, 1, 0}), s);
    }
}

TEST_CASE("parallel evaluation agrees") {
  for (const char* s : {"H3", "BC3", "J(D3:6)"}) {
    auto A = build_arrangement(build(s));
    CHECK(gm_cohomology(A, true).h == gm_cohomology(A, false).h);
  }
}

TEST_CASE("stats") {
  auto t = stats(build_arrangement(build("T3")));
  CHECK(t.N == 7);
  CHECK(t.a_at(2) == 7);
  CHECK(t.a_at(3) == 1);
  CHECK(t.C == 1);
  auto b = stats(build_arrangement(build("BC3")));
  CHECK(b.a_at(1) == 9);
  CHECK(b.a_at(2) == 13);
  CHECK(b.C == 48);
  CHECK(b.N == 0);
  auto j = stats(build_arrangement(build("J(mu3:3)")));
  CHECK(j.N == 1);
  CHECK(j.a_at(2) == 1);
  CHECK(j.a_at(3) == 1);
}

TEST_CASE("GL3 report") {
  auto ico = check_gl3(build("Ico3"));
  CHECK(ico.case_name == "strict-codim-2");
  CHECK(ico.all_pass());
  auto pm = check_gl3(build("J(triv:3)"));
  CHECK(pm.case_name == "trivial");
  CHECK(pm.all_pass());
  auto jd = check_gl3(build("J(D3:3)"));
  CHECK(jd.case_name == "mixed");
  CHECK(jd.all_pass());
  CHECK(jd.stats.C == 6);
  auto h3 = check_gl3(build("H3"));
  CHECK(h3.case_name == "strict-codim-1");
  CHECK(h3.all_pass());
  CHECK(check_gl3(build("prod(I2:4,triv:1)")).all_pass());
  CHECK_THROWS_AS(check_gl3(build("mu2:3")), WrongDimension);
}

TEST_CASE("GL3 report flags the nontrivial strictly codim-3 arrangement") {
  auto r = check_gl3(build("J(mu3:3)"));
  CHECK_FALSE(r.all_pass());
  CHECK(r.betti == V{0, 1, 0});
}

TEST_CASE("dim4 report") {
  auto r = check_dim4(build("prod(mu2:3,mu2:3)"));
  CHECK(r.all_pass());
  CHECK(r.betti == V{0, 2, 1, 0});
  CHECK_THROWS_AS(check_dim4(build("diag(mu2:3,2)")), NotStrictCodimTwo);
  CHECK_THROWS_AS(check_dim4(build("T3")), WrongDimension);
}

TEST_CASE("triviality criterion") {
  for (const char* s : {"J(triv:3)", "T3", "J(mu3:3)", "BC3"}) {
    auto A = build_arrangement(build(s));
    auto r = check_triviality(intersection_lattice(A), 3);
    CHECK(r.consistent());
    CHECK(r.trivial == (std::string(s) == "J(triv:3)"));
  }
}

TEST_CASE("line bound") {
  auto t = line_bound(build_arrangement(build("T3")));
  CHECK(t.applicable);
  CHECK(t.h == 13);
  CHECK(t.bound == 13);
  CHECK(t.all_lines);
  CHECK(t.holds());
  auto b = line_bound(build_arrangement(build("BC3")));
  CHECK(b.h > b.bound);
  CHECK(b.holds());
  CHECK_FALSE(line_bound(build_arrangement(build("mu3:4"))).applicable);
}
