#pragma once

#include <map>
#include <set>
#include <vector>

#include "fixlat/group.hpp"

namespace fixlat {

struct Flat {
  Subspace subspace;
  int codim = 0;
  std::vector<int> fixator_ids;  // element ids in the parent group
  bool is_atom = false;
};

struct Arrangement {
  FiniteLinearGroup group;
  std::vector<Flat> flats;                    // sorted by (codim, quantized projector)
  std::map<int, std::vector<int>> by_codim;   // codim -> flat ids
  std::vector<std::pair<int, int>> covers;    // (sub, super): flat sub is maximal inside flat super
  std::vector<std::vector<bool>> inside;      // inside[a][b]: flat a is contained in flat b

  int size() const { return static_cast<int>(flats.size()); }
  int ambient_dim() const { return group.dim(); }
  // Flat id equal to S, or -1.
  int find(const Subspace& S) const;
  FiniteLinearGroup fixator_group(int flat) const;

 private:
  friend Arrangement build_arrangement(const FiniteLinearGroup& G);
  QuantizedIndex index_{1e-6};
};

Arrangement build_arrangement(const FiniteLinearGroup& G);

FiniteLinearGroup fixator(const FiniteLinearGroup& G, const Subspace& S);

// Subgroup generated by the elements whose fixed space has codimension i.
FiniteLinearGroup r_subgroup(const FiniteLinearGroup& G, int i);

struct GenerationProfile {
  int generated_at = 0;
  std::set<int> strict_at;
  bool is_essential = false;
};

GenerationProfile generation_profile(const FiniteLinearGroup& G);

struct LunaStratum {
  int flat = 0;
  int fixator_order = 0;
  int normalizer_order = 0;
  int bundle_group_order = 0;
};

std::vector<LunaStratum> luna_strata(const FiniteLinearGroup& G, const Arrangement& A);

// Flat ids of the atoms containing the given flat.
std::vector<int> atoms_above(const Arrangement& A, int flat);

}  // namespace fixlat
