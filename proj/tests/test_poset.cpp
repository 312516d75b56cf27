#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fixlat/catalog.hpp"
#include "fixlat/figures.hpp"
#include "fixlat/lattice.hpp"

using namespace fixlat;

namespace {

// Boolean lattice on k atoms; node = subset bitmask.
FinitePoset boolean_lattice(int k) {
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < (1 << k); ++a)
    for (int i = 0; i < k; ++i)
      if (!(a & (1 << i))) rel.push_back({a, a | (1 << i)});
  return FinitePoset(1 << k, rel);
}

FinitePoset random_poset(int n, std::mt19937& rng) {
  std::vector<std::pair<int, int>> rel;
  std::bernoulli_distribution coin(0.3);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) rel.push_back({a, b});
  return FinitePoset(n, rel);
}

FinitePoset relabel(const FinitePoset& P, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : P.covers()) rel.push_back({perm[a], perm[b]});
  return FinitePoset(P.size(), rel);
}

// Sign vectors of many sampled points; every region of a central line
// arrangement in the plane or of a reflection arrangement has positive measure.
long long sampled_regions(const std::vector<Eigen::VectorXd>& normals, int dim) {
  std::mt19937 rng(12345);
  std::normal_distribution<double> g;
  std::set<std::vector<bool>> seen;
  for (int t = 0; t < 200000; ++t) {
    Eigen::VectorXd x(dim);
    for (int i = 0; i < dim; ++i) x[i] = g(rng);
    std::vector<bool> s;
    for (const auto& nv : normals) s.push_back(nv.dot(x) > 0);
    seen.insert(s);
  }
  return static_cast<long long>(seen.size());
}

}  // namespace

TEST_CASE("transitive closure and covers") {
  FinitePoset P(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(P.less(0, 3));
  CHECK(P.covers().size() == 3);
  CHECK(P.bottom() == 0);
  CHECK(P.top() == 3);
  CHECK_THROWS_AS(FinitePoset(2, {{0, 1}, {1, 0}}), InvalidParameter);
  CHECK_THROWS_AS(FinitePoset(2, {{0, 5}}), InvalidParameter);
  FinitePoset Q(3, {{0, 1}, {0, 2}});
  CHECK_FALSE(Q.top().has_value());
}

TEST_CASE("order complex of a boolean lattice is a sphere") {
  for (int k = 2; k <= 4; ++k) {
    auto B = boolean_lattice(k);
    auto K = order_complex(B, 0, (1 << k) - 1);
    auto h = reduced_homology(K);
    for (int d = -1; d <= k; ++d) CHECK(h.at(d) == (d == k - 2 ? 1 : 0));
  }
  CHECK_THROWS_AS(order_complex(boolean_lattice(2), 1, 2), NotComparable);
}

TEST_CASE("bouquet homology") {
  for (int k = 1; k <= 6; ++k) {
    auto L = bouquet_poset(k);
    auto h = reduced_homology(order_complex(L, *L.bottom(), *L.top()));
    CHECK(h.at(0) == k - 1);
    CHECK(is_bouquet(L) == k);
  }
  auto e = reduced_homology(order_complex(chain_poset(2), 0, 1));
  CHECK(e.at(-1) == 1);
}

TEST_CASE("Euler characteristic, Mobius and Betti numbers agree") {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    auto P = random_poset(9, rng);
    std::vector<std::pair<int, int>> rel;
    for (auto [a, b] : P.covers()) rel.push_back({a + 1, b + 1});
    for (int a = 0; a < 9; ++a) {
      rel.push_back({0, a + 1});
      rel.push_back({a + 1, 10});
    }
    FinitePoset Q(11, rel);
    auto K = order_complex(Q, 0, 10);
    auto h = reduced_homology(K);
    long long alt = 0;
    for (auto [d, b] : h.reduced_betti) alt += (d % 2 == 0 ? b : -b);
    CHECK(reduced_euler(K) == alt);
    CHECK(mobius(Q, 0, 10) == reduced_euler(K));
  }
  CHECK_THROWS_AS(mobius(chain_poset(3), 2, 0), NotComparable);
}

TEST_CASE("is_bouquet shapes") {
  CHECK(is_bouquet(chain_poset(2)) == 1);
  CHECK(is_bouquet(chain_poset(3)) == 1);
  CHECK_FALSE(is_bouquet(chain_poset(4)).has_value());
  CHECK(is_bouquet(bouquet_poset(7)) == 7);
  CHECK_FALSE(is_bouquet(boolean_lattice(3)).has_value());
}

TEST_CASE("isomorphism under relabelling") {
  std::mt19937 rng(99);
  for (int t = 0; t < 30; ++t) {
    auto P = random_poset(12, rng);
    std::vector<int> perm(12);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(poset_isomorphic(P, relabel(P, perm)));
    if (!P.covers().empty()) {
      auto rel = P.covers();
      rel.pop_back();
      FinitePoset Q(12, rel);
      if (Q.covers().size() != P.covers().size()) CHECK_FALSE(poset_isomorphic(P, Q));
    }
  }
  CHECK_FALSE(poset_isomorphic(bouquet_poset(3), chain_poset(5)));
  CHECK_THROWS_AS(poset_isomorphic(bouquet_poset(60), bouquet_poset(60)), TooLarge);
}

TEST_CASE("exact rank") {
  CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(exact_rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(exact_rank({{1, 1, 0}, {0, 1, 1}, {1, 0, -1}}) == 2);
}

TEST_CASE("chamber count matches sampled regions") {
  for (const char* s : {"A3", "BC3", "H3", "prod(I2:5,A1)", "prod(I2:4,triv:1)", "J(D3:3)"}) {
    auto A = build_arrangement(build(s));
    std::vector<Subspace> hs;
    std::vector<Eigen::VectorXd> normals;
    for (int f : A.by_codim.at(1)) {
      hs.push_back(A.flats[f].subspace);
      normals.push_back(complement(A.flats[f].subspace).basis().col(0));
    }
    CHECK_MESSAGE(chamber_count(A) == sampled_regions(normals, A.ambient_dim()), s);
    CHECK(chamber_count(hs) == chamber_count(A));
  }
  CHECK(chamber_count(build_arrangement(build("T3"))) == 1);
  CHECK_THROWS_AS(chamber_count(std::vector<Subspace>{Subspace::zero(3)}), InvalidParameter);
}
