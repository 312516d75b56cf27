#include <doctest.h>

#include <set>

#include "fixlat/catalog.hpp"
#include "fixlat/quotient.hpp"

using namespace fixlat;

namespace {

// Orbits by applying every element, not just generators.
int oracle_orbit_count(const FiniteLinearGroup& G, const Arrangement& A) {
  std::set<std::vector<int>> orbits;
  for (int f = 0; f < A.size(); ++f) {
    std::set<int> o;
    for (const auto& e : G.elements()) o.insert(A.find(apply(e.matrix, A.flats[f].subspace)));
    orbits.insert({o.begin(), o.end()});
  }
  return static_cast<int>(orbits.size());
}

}  // namespace

TEST_CASE("orbit counts against full-group orbits") {
  for (const char* s : {"D3:3", "D3:4", "T3", "Oct3", "Ico3", "BC3", "H3", "J(D3:6)", "mixed(D3:10,D3:5)"}) {
    auto G = build(s);
    auto A = build_arrangement(G);
    auto Q = orbit_poset(G, A);
    CHECK_MESSAGE(static_cast<int>(Q.orbits.size()) == oracle_orbit_count(G, A), s);
    std::size_t total = 0;
    for (const auto& o : Q.orbits) total += o.size();
    CHECK(total == static_cast<std::size_t>(A.size()));
  }
}

TEST_CASE("orbit sizes are group order over stabilizer order") {
  auto G = build("Ico3");
  auto A = build_arrangement(G);
  auto Q = orbit_poset(G, A);
  auto strata = luna_strata(G, A);
  for (std::size_t k = 0; k < Q.orbits.size(); ++k) {
    int r = Q.representative[k];
    CHECK(static_cast<int>(Q.orbits[k].size()) * strata[r].normalizer_order == G.order());
  }
  std::multiset<std::size_t> sizes;
  for (const auto& o : Q.orbits) sizes.insert(o.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 6, 10, 15});
}

TEST_CASE("quotient shapes") {
  CHECK(quotient_shape(build("D3:5")) == 2);
  CHECK(quotient_shape(build("D3:6")) == 3);
  CHECK(quotient_shape(build("T3")) == 2);
  CHECK(quotient_shape(build("Oct3")) == 3);
  CHECK(quotient_shape(build("Ico3")) == 3);
  CHECK_THROWS_AS(quotient_shape(build("BC3")), NotStrictCodimTwo);
  CHECK_THROWS_AS(quotient_shape(build("J(mu3:3)")), NotStrictCodimTwo);
}

TEST_CASE("orbit poset ranks and labels") {
  auto G = build("BC3");
  auto A = build_arrangement(G);
  auto Q = orbit_poset(G, A);
  CHECK(Q.poset.label(0) == "V");
  CHECK(Q.poset.rank[0] == 0);
  CHECK(Q.poset.size() == 7);
  for (std::size_t k = 0; k < Q.orbits.size(); ++k)
    for (int f : Q.orbits[k]) CHECK(Q.orbit_of[f] == static_cast<int>(k));
}
