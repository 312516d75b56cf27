#include "fixlat/quotient.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace fixlat {

OrbitPoset orbit_poset(const FiniteLinearGroup& G, const Arrangement& A) {
  const int m = A.size();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (const auto& g : G.generator_matrices()) {
    for (int f = 0; f < m; ++f) {
      int img = A.find(apply(g, A.flats[f].subspace, G.tol()));
      if (img < 0) throw NotSubgroup("arrangement is not invariant under the group");
      int a = root(f), b = root(img);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitPoset Q;
  Q.orbit_of.assign(m, -1);
  for (int f = 0; f < m; ++f) {
    int r = root(f);
    if (Q.orbit_of[r] < 0) {
      Q.orbit_of[r] = static_cast<int>(Q.orbits.size());
      Q.orbits.emplace_back();
      Q.representative.push_back(r);
    }
    Q.orbit_of[f] = Q.orbit_of[r];
    Q.orbits[Q.orbit_of[f]].push_back(f);
  }
  std::set<std::pair<int, int>> rel;
  for (int k = 0; k < static_cast<int>(Q.orbits.size()); ++k) rel.insert({0, k + 1});
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (A.inside[a][b]) rel.insert({Q.orbit_of[b] + 1, Q.orbit_of[a] + 1});
  std::vector<std::string> labels{"V"};
  for (int k = 0; k < static_cast<int>(Q.orbits.size()); ++k) labels.push_back("O" + std::to_string(k));
  Q.poset = FinitePoset(static_cast<int>(Q.orbits.size()) + 1, {rel.begin(), rel.end()}, labels);
  Q.poset.rank.push_back(0);
  for (int r : Q.representative) Q.poset.rank.push_back(A.flats[r].codim);
  return Q;
}

std::optional<int> quotient_shape(const FiniteLinearGroup& G) {
  auto prof = generation_profile(G);
  if (prof.generated_at != 2 || !prof.strict_at.count(2))
    throw NotStrictCodimTwo("quotient_shape needs a group strictly generated in codimension two");
  auto A = build_arrangement(G);
  return is_bouquet(orbit_poset(G, A).poset);
}

}  // namespace fixlat
