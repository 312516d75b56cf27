#pragma once

#include <map>
#include <string>
#include <vector>

#include "fixlat/lattice.hpp"

namespace fixlat {

// Reduced rational cohomology ranks h^0 .. h^{n-1} of the complement.
struct CohomologyProfile {
  std::vector<long long> h;
  long long at(int i) const { return i >= 0 && i < static_cast<int>(h.size()) ? h[i] : 0; }
};

// L must carry codimensions in L.rank and have a bottom element.
CohomologyProfile gm_cohomology(const FinitePoset& L, int n, bool parallel = false);
CohomologyProfile gm_cohomology(const Arrangement& A, bool parallel = false);

struct ArrangementStats {
  int N = 0;                   // atom lines
  std::map<int, int> a;        // codim -> number of flats
  std::map<int, int> M;        // line flat id -> number of 2-dimensional flats containing it
  long long C = 1;             // chambers of the hyperplane sub-arrangement
  int a_at(int i) const {
    auto it = a.find(i);
    return it == a.end() ? 0 : it->second;
  }
  long long sum_M() const;
};

ArrangementStats stats(const Arrangement& A);

struct Check {
  std::string name;
  long long expected = 0;
  long long actual = 0;
  bool pass = false;
  std::string note;
};

struct TheoremReport {
  std::string theorem;
  std::string case_name;
  std::vector<long long> betti;
  ArrangementStats stats;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool all_pass() const;
};

// Reduced b_0 of the open interval (bottom, top); 0 when there is no top.
long long h_delta_top(const FinitePoset& L, int degree);

TheoremReport check_gl3(const FiniteLinearGroup& G);
TheoremReport check_dim4(const FiniteLinearGroup& G);

struct TrivialityResult {
  bool trivial = false;          // lattice is exactly {0 < 1}
  bool top_degree_nonzero = false;  // h^{n-1} != 0
  bool consistent() const { return trivial == top_degree_nonzero; }
};

TrivialityResult check_triviality(const FinitePoset& L, int n);

struct BoundResult {
  bool applicable = false;  // nontrivial and central
  long long h = 0;          // h^{n-2}
  long long bound = 0;      // 2N - 1
  bool all_lines = false;   // every flat of codim < n is a line
  bool holds() const { return !applicable || (h >= bound && ((h == bound) == all_lines)); }
};

BoundResult line_bound(const Arrangement& A);

}  // namespace fixlat
