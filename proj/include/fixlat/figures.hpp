#pragma once

#include <string>
#include <vector>

#include "fixlat/poset.hpp"

namespace fixlat {

// Hand-transcribed Hasse diagrams. Node 0 is the full space in both posets.
struct FigureCase {
  std::string id;     // e.g. "JD3:4"
  std::string group;  // catalog spec
  FinitePoset lattice;
  FinitePoset quotient;
  bool known_discrepancy = false;  // transcribed as printed, disagrees with the geometry
  std::string note;
};

// All figure families at parameter n. Families without a parameter are
// included only when with_fixed is set.
std::vector<FigureCase> figure_cases(int n, bool with_fixed);

// Bouquet 0 < k atoms < 1.
FinitePoset bouquet_poset(int k);
// Chain 0 < 1 < ... < k-1.
FinitePoset chain_poset(int k);

// Icosahedral mirror arrangement built from vertex coordinates alone.
FigureCase icosahedral_reflection_figure();

}  // namespace fixlat
