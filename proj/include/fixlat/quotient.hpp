#pragma once

#include <optional>

#include "fixlat/lattice.hpp"

namespace fixlat {

struct OrbitPoset {
  std::vector<std::vector<int>> orbits;  // flat ids, sorted; orbits sorted by smallest id
  std::vector<int> representative;       // smallest flat id per orbit
  std::vector<int> orbit_of;             // flat id -> orbit id
  // Node 0 is the orbit of the full space; node k + 1 is orbit k.
  FinitePoset poset;
};

OrbitPoset orbit_poset(const FiniteLinearGroup& G, const Arrangement& A);

// Shape n of the orbit poset as a bouquet. Throws NotStrictCodimTwo unless G
// is strictly generated in codimension two.
std::optional<int> quotient_shape(const FiniteLinearGroup& G);

}  // namespace fixlat
