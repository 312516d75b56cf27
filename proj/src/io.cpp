#include "fixlat/io.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace fixlat {

namespace {

// Twelve decimals keep the output stable against last-bit noise.
double clean(double x) {
  double r = std::round(x * 1e12) / 1e12;
  return r == 0 ? 0.0 : r;
}

}  // namespace

json matrix_to_json(const Mat& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < M.cols(); ++j) r.push_back(clean(M(i, j)));
    rows.push_back(r);
  }
  return rows;
}

Mat matrix_from_json(const json& j, int n) {
  Mat M(n, n);
  if (j.is_array() && j.size() == static_cast<std::size_t>(n) && j[0].is_array()) {
    for (int r = 0; r < n; ++r) {
      if (j[r].size() != static_cast<std::size_t>(n)) throw ParseError("matrix row has the wrong length");
      for (int c = 0; c < n; ++c) M(r, c) = j[r][c].get<double>();
    }
  } else if (j.is_array() && j.size() == static_cast<std::size_t>(n * n)) {
    for (int k = 0; k < n * n; ++k) M(k / n, k % n) = j[k].get<double>();
  } else {
    throw ParseError("matrix must be n rows of n numbers or a flat row-major list of n*n numbers");
  }
  return M;
}

json group_to_json(const FiniteLinearGroup& G) {
  json j;
  j["dim"] = G.dim();
  if (!G.name().empty()) j["name"] = G.name();
  j["order"] = G.order();
  json gens = json::array();
  for (const auto& g : G.generator_matrices()) gens.push_back(matrix_to_json(g));
  j["generators"] = gens;
  json els = json::array();
  for (const auto& e : G.elements()) els.push_back(matrix_to_json(e.matrix));
  j["elements"] = els;
  return j;
}

FiniteLinearGroup group_from_json(const json& j, int cap, const ToleranceProfile& tol) {
  try {
    const int n = j.at("dim").get<int>();
    if (n < 1) throw ParseError("dim must be positive");
    std::vector<Mat> gens;
    for (const auto& g : j.at("generators")) gens.push_back(matrix_from_json(g, n));
    if (gens.empty()) gens.push_back(Mat::Identity(n, n));
    FiniteLinearGroup G;
    if (j.contains("elements")) {
      std::vector<Mat> els;
      for (const auto& e : j["elements"]) els.push_back(matrix_from_json(e, n));
      if (static_cast<int>(els.size()) > cap) throw CapExceeded("element list exceeds the cap");
      G = FiniteLinearGroup::from_elements(std::move(els), gens, tol, true);
    } else {
      G = close(gens, cap, tol);
    }
    if (j.contains("name")) G.set_name(j["name"].get<std::string>());
    return G;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad group JSON: ") + e.what());
  }
}

json arrangement_to_json(const Arrangement& A) {
  json j;
  j["group"] = group_to_json(A.group);
  json flats = json::array();
  for (int f = 0; f < A.size(); ++f) {
    const auto& F = A.flats[f];
    json basis = json::array();
    const Mat& B = F.subspace.basis();
    for (int c = 0; c < B.cols(); ++c) {
      json v = json::array();
      for (int r = 0; r < B.rows(); ++r) v.push_back(clean(B(r, c)));
      basis.push_back(v);
    }
    flats.push_back({{"id", f},
                     {"codim", F.codim},
                     {"basis", basis},
                     {"fixator_order", F.fixator_ids.size()},
                     {"is_atom", F.is_atom}});
  }
  j["flats"] = flats;
  json order = json::array();
  for (auto [sub, super] : A.covers) order.push_back({sub, super});
  j["order"] = order;
  return j;
}

json quotient_to_json(const Arrangement& A, const OrbitPoset& Q) {
  json j;
  json orbits = json::array();
  for (std::size_t k = 0; k < Q.orbits.size(); ++k) {
    orbits.push_back({{"id", k},
                      {"codim", A.flats[Q.representative[k]].codim},
                      {"size", Q.orbits[k].size()},
                      {"representative", Q.representative[k]},
                      {"flats", Q.orbits[k]}});
  }
  j["orbits"] = orbits;
  json order = json::array();
  // Covers among orbits, as (smaller orbit, larger orbit) under inclusion.
  for (auto [lo, hi] : Q.poset.covers())
    if (lo != 0) order.push_back({hi - 1, lo - 1});
  j["order"] = order;
  return j;
}

json cohomology_to_json(const CohomologyProfile& h, const ArrangementStats& s, const std::vector<Check>& checks) {
  json j;
  j["betti"] = h.h;
  json a = json::object();
  for (auto [c, k] : s.a) a[std::to_string(c)] = k;
  json M = json::object();
  for (auto [l, m] : s.M) M[std::to_string(l)] = m;
  j["stats"] = {{"N", s.N}, {"a", a}, {"M", M}, {"C", s.C}};
  json cs = json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  j["checks"] = cs;
  return j;
}

json report_to_json(const TheoremReport& r) {
  json j = cohomology_to_json({r.betti}, r.stats, r.checks);
  j["theorem"] = r.theorem;
  j["case"] = r.case_name;
  j["notes"] = r.notes;
  j["pass"] = r.all_pass();
  return j;
}

std::string lattice_dot(const Arrangement& A) {
  std::ostringstream os;
  const int n = A.ambient_dim();
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  os << "  n0 [label=\"codim=0, dim=" << n << ", |Fix|=1\"];\n";
  for (int f = 0; f < A.size(); ++f) {
    const auto& F = A.flats[f];
    os << "  n" << f + 1 << " [label=\"codim=" << F.codim << ", dim=" << n - F.codim
       << ", |Fix|=" << F.fixator_ids.size() << "\"];\n";
  }
  os << "  { rank=same; n0; }\n";
  for (const auto& [c, ids] : A.by_codim) {
    os << "  { rank=same;";
    for (int f : ids) os << " n" << f + 1 << ";";
    os << " }\n";
  }
  for (int f = 0; f < A.size(); ++f)
    if (A.flats[f].is_atom) os << "  n0 -> n" << f + 1 << ";\n";
  for (auto [sub, super] : A.covers) os << "  n" << super + 1 << " -> n" << sub + 1 << ";\n";
  os << "}\n";
  return os.str();
}

std::string quotient_dot(const Arrangement& A, const OrbitPoset& Q) {
  std::ostringstream os;
  os << "digraph quotient {\n  rankdir=BT;\n  node [shape=box];\n";
  os << "  o0 [label=\"V, orbit size 1\"];\n";
  std::map<int, std::vector<int>> by_codim;
  for (std::size_t k = 0; k < Q.orbits.size(); ++k) {
    int c = A.flats[Q.representative[k]].codim;
    by_codim[c].push_back(static_cast<int>(k));
    os << "  o" << k + 1 << " [label=\"codim=" << c << ", orbit size " << Q.orbits[k].size() << "\"];\n";
  }
  for (const auto& [c, ids] : by_codim) {
    os << "  { rank=same;";
    for (int k : ids) os << " o" << k + 1 << ";";
    os << " }\n";
  }
  for (auto [lo, hi] : Q.poset.covers()) os << "  o" << lo << " -> o" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace fixlat
