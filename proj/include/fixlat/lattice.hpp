#pragma once

#include "fixlat/arrangement.hpp"
#include "fixlat/poset.hpp"

namespace fixlat {

// Node 0 is the full space; node i + 1 is flat i. rank holds codimensions.
FinitePoset intersection_lattice(const Arrangement& A);

inline int lattice_node(int flat) { return flat + 1; }
inline int flat_of_node(int node) { return node - 1; }

// Connected components of the complement of the codim-1 flats of A,
// by the Mobius sum over their intersection lattice.
long long chamber_count(const Arrangement& A);
long long chamber_count(const std::vector<Subspace>& hyperplanes, const ToleranceProfile& tol = {});

}  // namespace fixlat
