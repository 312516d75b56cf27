#include "fixlat/cohomology.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace fixlat {

CohomologyProfile gm_cohomology(const FinitePoset& L, int n, bool parallel) {
  auto bottom = L.bottom();
  if (!bottom) throw InvalidParameter("lattice has no bottom element");
  if (static_cast<int>(L.rank.size()) != L.size()) throw InvalidParameter("lattice nodes carry no codimensions");
  auto interval = [&](int x) { return reduced_homology(order_complex(L, *bottom, x)); };
  std::vector<int> nodes;
  for (int x = 0; x < L.size(); ++x)
    if (x != *bottom) nodes.push_back(x);
  std::vector<HomologyProfile> hs(nodes.size());
  if (parallel) {
    std::vector<std::future<HomologyProfile>> fut;
    for (int x : nodes) fut.push_back(std::async(std::launch::async, interval, x));
    for (std::size_t k = 0; k < nodes.size(); ++k) hs[k] = fut[k].get();
  } else {
    for (std::size_t k = 0; k < nodes.size(); ++k) hs[k] = interval(nodes[k]);
  }
  CohomologyProfile c;
  c.h.assign(n, 0);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (auto [j, b] : hs[k].reduced_betti) {
      int i = L.rank[nodes[k]] - 2 - j;
      if (i < 0 || i >= n) throw std::logic_error("complement cohomology outside degrees 0..n-1");
      c.h[i] += b;
    }
  }
  return c;
}

CohomologyProfile gm_cohomology(const Arrangement& A, bool parallel) {
  return gm_cohomology(intersection_lattice(A), A.ambient_dim(), parallel);
}

long long ArrangementStats::sum_M() const {
  long long s = 0;
  for (auto [l, m] : M) s += m;
  return s;
}

ArrangementStats stats(const Arrangement& A) {
  ArrangementStats s;
  const int n = A.ambient_dim();
  for (const auto& [c, ids] : A.by_codim) s.a[c] = static_cast<int>(ids.size());
  for (int f = 0; f < A.size(); ++f) {
    if (A.flats[f].codim != n - 1) continue;
    if (A.flats[f].is_atom) ++s.N;
    int m = 0;
    for (int p = 0; p < A.size(); ++p) m += A.flats[p].subspace.dim() == 2 && A.inside[f][p];
    s.M[f] = m;
  }
  s.C = chamber_count(A);
  return s;
}

long long h_delta_top(const FinitePoset& L, int degree) {
  auto b = L.bottom(), t = L.top();
  if (!b || !t || *b == *t) return 0;
  return reduced_homology(order_complex(L, *b, *t)).at(degree);
}

bool TheoremReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

void add(TheoremReport& r, std::string name, long long expected, long long actual, std::string note = {}) {
  r.checks.push_back({std::move(name), expected, actual, expected == actual, std::move(note)});
}

}  // namespace

TrivialityResult check_triviality(const FinitePoset& L, int n) {
  TrivialityResult r;
  auto b = L.bottom(), t = L.top();
  r.trivial = L.size() == 2 && b && t && *b != *t && L.rank[*t] == n;
  r.top_degree_nonzero = gm_cohomology(L, n).at(n - 1) != 0;
  return r;
}

TheoremReport check_gl3(const FiniteLinearGroup& G) {
  if (G.dim() != 3) throw WrongDimension("check_gl3 needs a group acting on R^3");
  auto A = build_arrangement(G);
  auto L = intersection_lattice(A);
  auto prof = generation_profile(G);
  auto h = gm_cohomology(L, 3);
  TheoremReport r;
  r.theorem = "gl3";
  r.betti = h.h;
  r.stats = stats(A);
  const auto& s = r.stats;
  auto triv = check_triviality(L, 3);
  // Degree-0 homology of the whole proper part lands in h^1 only when the
  // top flat is the origin; a line on top shifts it to h^0.
  auto top = L.top();
  long long hd = top && L.rank[*top] == 3 ? h_delta_top(L, 0) : 0;
  auto strict = [&](int k) { return prof.generated_at == k && prof.strict_at.count(k) > 0; };
  if (strict(3)) {
    r.checks.push_back({"strict3_trivial_arrangement", 1, triv.trivial ? 1 : 0, triv.trivial,
                        "strictly generated in codim 3 should give the trivial arrangement"});
    if (!triv.trivial) r.notes.push_back("strictly generated in codim 3 but the arrangement is nontrivial");
  }
  if (triv.trivial) {
    r.case_name = "trivial";
    add(r, "h0", 0, h.at(0));
    add(r, "h1", 0, h.at(1));
    add(r, "h2", 1, h.at(2));
  } else if (strict(2)) {
    r.case_name = "strict-codim-2";
    add(r, "h0", 0, h.at(0));
    add(r, "h2", 0, h.at(2));
    add(r, "h1=2N-1", 2LL * s.N - 1, h.at(1));
    add(r, "all_flats_atom_lines", s.N, A.size() - (A.by_codim.count(3) ? 1 : 0));
  } else if (strict(1)) {
    r.case_name = "strict-codim-1";
    add(r, "h2", 0, h.at(2));
    add(r, "h1=h0(Delta)", hd, h.at(1));
    add(r, "h0=C-1", s.C - 1, h.at(0));
    add(r, "no_atom_lines", 0, s.N);
  } else {
    r.case_name = "mixed";
    add(r, "h2", 0, h.at(2));
    add(r, "h1=h0(Delta)+N", hd + s.N, h.at(1));
    add(r, "h0=C-1", s.C - 1, h.at(0));
  }
  return r;
}

TheoremReport check_dim4(const FiniteLinearGroup& G) {
  if (G.dim() != 4) throw WrongDimension("check_dim4 needs a group acting on R^4");
  auto prof = generation_profile(G);
  if (prof.generated_at != 2 || !prof.strict_at.count(2)) throw NotStrictCodimTwo("check_dim4 needs a group strictly generated in codim 2");
  auto A = build_arrangement(G);
  auto L = intersection_lattice(A);
  auto h = gm_cohomology(L, 4);
  TheoremReport r;
  r.theorem = "dim4";
  r.case_name = "strict-codim-2";
  r.betti = h.h;
  r.stats = stats(A);
  const auto& s = r.stats;
  long long formula = h_delta_top(L, 1) + s.sum_M() - s.a_at(3) + s.N + s.a_at(2);
  add(r, "h1_formula", formula, h.at(1));
  add(r, "h0", 0, h.at(0));
  add(r, "h3", 0, h.at(3));
  r.checks.push_back({"h2>2N-1", 2LL * s.N - 1, h.at(2), h.at(2) > 2LL * s.N - 1, "strict inequality"});
  add(r, "no_hyperplanes", 0, s.a_at(1));
  return r;
}

BoundResult line_bound(const Arrangement& A) {
  BoundResult b;
  const int n = A.ambient_dim();
  auto L = intersection_lattice(A);
  auto t = L.top();
  b.applicable = A.size() >= 2 && t && L.rank[*t] == n;
  auto s = stats(A);
  b.h = gm_cohomology(L, n).at(n - 2);
  b.bound = 2LL * s.N - 1;
  b.all_lines = true;
  for (const auto& f : A.flats)
    if (f.codim < n && f.codim != n - 1) b.all_lines = false;
  return b;
}

}  // namespace fixlat
