#include "fixlat/lattice.hpp"

#include <cstdlib>

namespace fixlat {

FinitePoset intersection_lattice(const Arrangement& A) {
  std::vector<std::pair<int, int>> rel;
  std::vector<std::string> labels{"V"};
  for (int f = 0; f < A.size(); ++f) {
    rel.push_back({0, lattice_node(f)});
    labels.push_back("F" + std::to_string(f));
  }
  for (auto [sub, super] : A.covers) rel.push_back({lattice_node(super), lattice_node(sub)});
  FinitePoset P(A.size() + 1, rel, labels);
  P.rank.push_back(0);
  for (const auto& f : A.flats) P.rank.push_back(f.codim);
  return P;
}

long long chamber_count(const std::vector<Subspace>& hyperplanes, const ToleranceProfile& tol) {
  if (hyperplanes.empty()) return 1;
  const int n = hyperplanes[0].ambient_dim();
  std::vector<Subspace> flats;
  QuantizedIndex idx(tol.hash_grid);
  auto add = [&](const Subspace& S) {
    if (idx.find(S.projector()) >= 0) return;
    idx.insert(S.projector(), static_cast<int>(flats.size()));
    flats.push_back(S);
  };
  for (const auto& H : hyperplanes) {
    if (H.codim() != 1 || H.ambient_dim() != n) throw InvalidParameter("chamber_count expects hyperplanes");
    add(H);
  }
  for (std::size_t i = 1; i < flats.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(intersect(flats[i], flats[j], tol));
  const int m = static_cast<int>(flats.size());
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < m; ++a) {
    rel.push_back({0, a + 1});
    for (int b = 0; b < m; ++b)
      if (a != b && flats[a].dim() > flats[b].dim() && contains(flats[a], flats[b], tol)) rel.push_back({a + 1, b + 1});
  }
  FinitePoset L(m + 1, rel);
  long long c = 0;
  for (int x = 0; x <= m; ++x) c += std::llabs(mobius(L, 0, x));
  return c;
}

long long chamber_count(const Arrangement& A) {
  std::vector<Subspace> hs;
  auto it = A.by_codim.find(1);
  if (it != A.by_codim.end())
    for (int f : it->second) hs.push_back(A.flats[f].subspace);
  return chamber_count(hs, A.group.tol());
}

}  // namespace fixlat
