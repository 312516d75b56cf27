#pragma once

#include <json.hpp>
#include <string>

#include "fixlat/cohomology.hpp"
#include "fixlat/quotient.hpp"

namespace fixlat {

using json = nlohmann::ordered_json;

json group_to_json(const FiniteLinearGroup& G);
// Reads {"dim", "generators", "elements"?, "name"?}. With elements present the
// list is taken as the group and checked for closure; otherwise generators are closed.
FiniteLinearGroup group_from_json(const json& j, int cap = kDefaultCap, const ToleranceProfile& tol = {});

json arrangement_to_json(const Arrangement& A);
json quotient_to_json(const Arrangement& A, const OrbitPoset& Q);
json cohomology_to_json(const CohomologyProfile& h, const ArrangementStats& s, const std::vector<Check>& checks);
json report_to_json(const TheoremReport& r);

std::string lattice_dot(const Arrangement& A);
std::string quotient_dot(const Arrangement& A, const OrbitPoset& Q);

json matrix_to_json(const Mat& M);
Mat matrix_from_json(const json& j, int n);

}  // namespace fixlat
