#include "fixlat/arrangement.hpp"

#include <algorithm>
#include <numeric>

namespace fixlat {

int Arrangement::find(const Subspace& S) const {
  if (S.ambient_dim() != ambient_dim()) throw DimensionMismatch("subspace and arrangement dimensions differ");
  return index_.find(S.projector());
}

FiniteLinearGroup Arrangement::fixator_group(int flat) const {
  const auto& S = flats.at(flat).subspace;
  return fixator(group, S);
}

Arrangement build_arrangement(const FiniteLinearGroup& G) {
  const auto& tol = G.tol();
  const int n = G.dim();
  std::vector<Subspace> subs;
  QuantizedIndex idx(tol.hash_grid);
  auto add = [&](const Subspace& S) {
    if (S.dim() == n || idx.find(S.projector()) >= 0) return false;
    idx.insert(S.projector(), static_cast<int>(subs.size()));
    subs.push_back(S);
    return true;
  };
  for (const auto& e : G.elements())
    if (e.fix_codim > 0) add(e.fixed);
  // Worklist closure: every new flat is intersected with all flats seen so far.
  for (std::size_t i = 1; i < subs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(intersect(subs[i], subs[j], tol));

  std::vector<int> perm(subs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::int64_t>> keys;
  for (const auto& s : subs) keys.push_back(s.key(tol));
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (subs[a].codim() != subs[b].codim()) return subs[a].codim() < subs[b].codim();
    return key_less(keys[a], keys[b]);
  });

  Arrangement A;
  A.group = G;
  A.index_ = QuantizedIndex(tol.hash_grid);
  for (int p : perm) {
    Flat f;
    f.subspace = subs[p];
    f.codim = subs[p].codim();
    for (int g = 0; g < G.order(); ++g)
      if (contains(G.element(g).fixed, f.subspace, tol)) f.fixator_ids.push_back(g);
    int id = A.size();
    A.index_.insert(f.subspace.projector(), id);
    A.by_codim[f.codim].push_back(id);
    A.flats.push_back(std::move(f));
  }
  const int m = A.size();
  A.inside.assign(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && A.flats[a].codim > A.flats[b].codim)
        A.inside[a][b] = contains(A.flats[b].subspace, A.flats[a].subspace, tol);
  for (int a = 0; a < m; ++a) {
    bool atom = true;
    for (int b = 0; b < m; ++b) atom = atom && !A.inside[a][b];
    A.flats[a].is_atom = atom;
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!A.inside[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < m && cover; ++c) cover = !(A.inside[a][c] && A.inside[c][b]);
      if (cover) A.covers.push_back({a, b});
    }
  return A;
}

FiniteLinearGroup fixator(const FiniteLinearGroup& G, const Subspace& S) {
  if (S.ambient_dim() != G.dim()) throw DimensionMismatch("subspace and group dimensions differ");
  const auto& tol = G.tol();
  return subgroup_generated(G, [&](const GroupElement& e) { return contains(e.fixed, S, tol); });
}

FiniteLinearGroup r_subgroup(const FiniteLinearGroup& G, int i) {
  return subgroup_generated(G, [i](const GroupElement& e) { return e.fix_codim == i; });
}

GenerationProfile generation_profile(const FiniteLinearGroup& G) {
  GenerationProfile p;
  const int n = G.dim();
  p.generated_at = -1;
  for (int k = 0; k <= n && p.generated_at < 0; ++k)
    if (subgroup_generated(G, [k](const GroupElement& e) { return e.fix_codim <= k; }).order() == G.order())
      p.generated_at = k;
  for (int k = 1; k <= n; ++k) {
    bool any = std::any_of(G.elements().begin(), G.elements().end(),
                           [k](const GroupElement& e) { return e.fix_codim == k; });
    if (any && r_subgroup(G, k).order() == G.order()) p.strict_at.insert(k);
  }
  if (G.order() > 1) {
    Subspace S = Subspace::full(n);
    for (const auto& e : G.elements()) {
      if (e.fix_codim == 0) continue;
      S = intersect(S, e.fixed, G.tol());
      if (S.dim() == 0) break;
    }
    p.is_essential = S.dim() == 0;
  }
  return p;
}

std::vector<LunaStratum> luna_strata(const FiniteLinearGroup& G, const Arrangement& A) {
  std::vector<LunaStratum> out;
  for (int f = 0; f < A.size(); ++f) {
    auto F = fixator(G, A.flats[f].subspace);
    auto N = normalizer(G, F);
    out.push_back({f, F.order(), N.order(), N.order() / F.order()});
  }
  return out;
}

std::vector<int> atoms_above(const Arrangement& A, int flat) {
  std::vector<int> out;
  for (int b = 0; b < A.size(); ++b)
    if (A.flats[b].is_atom && (b == flat || A.inside[flat][b])) out.push_back(b);
  return out;
}

}  // namespace fixlat
