#include "fixlat/figures.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>

namespace fixlat {

namespace {

// Named nodes; lt(a, b) puts a below b (larger subspace below).
class Diagram {
 public:
  Diagram() { node("V"); }
  int node(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(names_.size());
    ids_[name] = id;
    names_.push_back(name);
    return id;
  }
  void lt(const std::string& a, const std::string& b) { rel_.push_back({node(a), node(b)}); }
  FinitePoset poset() const { return FinitePoset(static_cast<int>(names_.size()), rel_, names_); }

 private:
  std::map<std::string, int> ids_;
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> rel_;
};

std::string idx(const std::string& base, int i) { return base + std::to_string(i); }

FinitePoset chain(std::initializer_list<const char*> above_v) {
  Diagram d;
  std::string prev = "V";
  for (const char* s : above_v) {
    d.lt(prev, s);
    prev = s;
  }
  return d.poset();
}

FinitePoset diamond() {
  Diagram d;
  d.lt("V", "a");
  d.lt("V", "b");
  d.lt("a", "O");
  d.lt("b", "O");
  return d.poset();
}

FigureCase make(std::string id, std::string group, FinitePoset L, FinitePoset Q) {
  FigureCase c;
  c.id = std::move(id);
  c.group = std::move(group);
  c.lattice = std::move(L);
  c.quotient = std::move(Q);
  return c;
}

FinitePoset mixed_d3_mu3_lattice(int n) {
  Diagram d;
  for (int i = 1; i <= n; ++i) {
    d.lt("V", idx("P", i));
    d.lt(idx("P", i), "l0");
  }
  return d.poset();
}

FinitePoset jd3_lattice(int n) {
  Diagram d;
  if (n % 2 == 0) {
    const int k = n / 2;
    d.lt("V", "P0");
    d.lt("l0", "O");
    for (int i = 1; i <= n; ++i) {
      d.lt("V", idx("P", i));
      d.lt(idx("P", i), "l0");
      d.lt("P0", idx("l", i));
      d.lt(idx("P", i), idx("l", (i - 1 + k) % n + 1));
      d.lt(idx("l", i), "O");
    }
  } else {
    d.lt("l0", "O");
    for (int i = 1; i <= n; ++i) {
      d.lt("V", idx("l", i));
      d.lt(idx("l", i), "O");
      d.lt("V", idx("P", i));
      d.lt(idx("P", i), "l0");
    }
  }
  return d.poset();
}

FinitePoset jd3_quotient(int n) {
  Diagram d;
  if (n % 2 == 0) {
    const bool k_odd = (n / 2) % 2 == 1;
    for (const char* p : {"P0", "Pe", "Po"}) d.lt("V", p);
    d.lt("P0", "Le");
    d.lt("P0", "Lo");
    d.lt("Pe", "L0");
    d.lt("Po", "L0");
    d.lt("Pe", k_odd ? "Lo" : "Le");
    d.lt("Po", k_odd ? "Le" : "Lo");
    for (const char* l : {"L0", "Le", "Lo"}) d.lt(l, "O");
  } else {
    d.lt("V", "P");
    d.lt("P", "l0");
    d.lt("l0", "O");
    d.lt("V", "l");
    d.lt("l", "O");
  }
  return d.poset();
}

FinitePoset mixed_d3_d3_lattice(int n) {
  Diagram d;
  d.lt("l0", "O");
  if (n % 2 == 1) {
    d.lt("V", "H");
    for (int i = 1; i <= n; ++i) {
      d.lt("V", idx("P", i));
      d.lt(idx("P", i), "l0");
      d.lt(idx("P", i), idx("h", i));
      d.lt("H", idx("h", i));
      d.lt(idx("h", i), "O");
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      d.lt("V", idx("P", i));
      d.lt(idx("P", i), "l0");
      d.lt("V", idx("h", i));
      d.lt(idx("h", i), "O");
    }
  }
  return d.poset();
}

FinitePoset mixed_d3_d3_quotient(int n) {
  Diagram d;
  d.lt("V", "P");
  d.lt("P", "l0");
  d.lt("l0", "O");
  d.lt("h", "O");
  if (n % 2 == 1) {
    d.lt("V", "H");
    d.lt("H", "h");
    d.lt("P", "h");
  } else {
    d.lt("V", "h");
  }
  return d.poset();
}

FigureCase jt3_corrected() {
  Diagram L;
  for (int i = 1; i <= 3; ++i) {
    L.lt("V", idx("ep", i));
    for (int j = 1; j <= 3; ++j)
      if (j != i) L.lt(idx("ep", i), idx("e", j));
    L.lt(idx("e", i), "O");
  }
  for (int j = 1; j <= 4; ++j) {
    L.lt("V", idx("v", j));
    L.lt(idx("v", j), "O");
  }
  Diagram Q;
  Q.lt("V", "ep");
  Q.lt("V", "v");
  Q.lt("ep", "e");
  Q.lt("e", "O");
  Q.lt("v", "O");
  auto c = make("J(T3)", "J(T3)", L.poset(), Q.poset());
  c.note = "geometric incidences";
  return c;
}

FigureCase jt3_printed() {
  Diagram L;
  for (int i = 1; i <= 3; ++i) {
    L.lt("V", idx("ep", i));
    L.lt(idx("ep", i), "O");
    L.lt("V", idx("e", i));
    L.lt(idx("e", i), "O");
  }
  for (int j = 1; j <= 4; ++j) {
    L.lt("V", idx("v", j));
    L.lt(idx("v", j), "O");
  }
  Diagram Q;
  for (const char* s : {"ep", "v", "e"}) {
    Q.lt("V", s);
    Q.lt(s, "O");
  }
  auto c = make("J(T3) printed", "J(T3)", L.poset(), Q.poset());
  c.known_discrepancy = true;
  c.note = "printed diagram draws the coordinate axes as atoms; they lie in the coordinate planes";
  return c;
}

FigureCase a3_figure() {
  // plane -> lines it contains
  const std::vector<std::pair<std::string, std::vector<std::string>>> inc = {
      {"f1p", {"e1", "v3", "v4"}}, {"f2p", {"e2", "v2", "v4"}}, {"f3p", {"e3", "v2", "v3"}},
      {"f4p", {"e1", "v1", "v2"}}, {"f5p", {"e2", "v1", "v3"}}, {"f6p", {"e3", "v1", "v4"}}};
  Diagram L;
  for (const auto& [p, lines] : inc) {
    L.lt("V", p);
    for (const auto& l : lines) {
      L.lt(p, l);
      L.lt(l, "O");
    }
  }
  Diagram Q;
  Q.lt("V", "fp");
  Q.lt("fp", "e");
  Q.lt("fp", "v");
  Q.lt("e", "O");
  Q.lt("v", "O");
  return make("mixed(Oct3,T3)", "mixed(Oct3,T3)", L.poset(), Q.poset());
}

FigureCase bc3_figure() {
  // line -> planes containing it
  const std::vector<std::pair<std::string, std::vector<std::string>>> inc = {
      {"e1", {"e2p", "e3p", "f1p", "f4p"}}, {"e2", {"e3p", "e1p", "f2p", "f5p"}},
      {"e3", {"e2p", "e1p", "f3p", "f6p"}}, {"v1", {"f4p", "f5p", "f6p"}},
      {"v2", {"f2p", "f3p", "f4p"}},        {"v3", {"f1p", "f3p", "f5p"}},
      {"v4", {"f2p", "f1p", "f6p"}},        {"f1", {"f4p", "e1p"}},
      {"f2", {"f5p", "e2p"}},               {"f3", {"f6p", "e3p"}},
      {"f4", {"f1p", "e1p"}},               {"f5", {"f2p", "e2p"}},
      {"f6", {"f3p", "e3p"}}};
  Diagram L;
  for (const auto& [l, planes] : inc) {
    L.lt(l, "O");
    for (const auto& p : planes) {
      L.lt("V", p);
      L.lt(p, l);
    }
  }
  Diagram Q;
  Q.lt("V", "ep");
  Q.lt("V", "fp");
  Q.lt("ep", "e");
  Q.lt("fp", "e");
  Q.lt("ep", "f");
  Q.lt("fp", "f");
  Q.lt("fp", "v");
  for (const char* s : {"e", "f", "v"}) Q.lt(s, "O");
  return make("J(Oct3)", "J(Oct3)", L.poset(), Q.poset());
}

}  // namespace

FinitePoset bouquet_poset(int k) {
  Diagram d;
  for (int i = 0; i < k; ++i) {
    d.lt("V", idx("a", i));
    d.lt(idx("a", i), "O");
  }
  return d.poset();
}

FinitePoset chain_poset(int k) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < k; ++i) rel.push_back({i, i + 1});
  return FinitePoset(k, rel);
}

FigureCase icosahedral_reflection_figure() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Eigen::Vector3d> verts;
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1})
      for (int r = 0; r < 3; ++r) {
        Eigen::Vector3d p(0, s1, s2 * phi);
        verts.push_back(Eigen::Vector3d(p[(3 - r) % 3], p[(4 - r) % 3], p[(5 - r) % 3]));
      }
  std::vector<Eigen::Vector3d> vax, eax, fax;
  auto add_axis = [](std::vector<Eigen::Vector3d>& axes, Eigen::Vector3d d) {
    d.normalize();
    for (const auto& a : axes)
      if (std::abs(std::abs(a.dot(d)) - 1) < 1e-9) return;
    axes.push_back(d);
  };
  const int nv = static_cast<int>(verts.size());
  auto adjacent = [&](int a, int b) { return std::abs((verts[a] - verts[b]).norm() - 2) < 1e-9; };
  for (int a = 0; a < nv; ++a) {
    add_axis(vax, verts[a]);
    for (int b = a + 1; b < nv; ++b) {
      if (!adjacent(a, b)) continue;
      add_axis(eax, verts[a] + verts[b]);
      for (int c = b + 1; c < nv; ++c)
        if (adjacent(a, c) && adjacent(b, c)) add_axis(fax, verts[a] + verts[b] + verts[c]);
    }
  }
  Diagram L;
  auto lines = [&](const char* base, const std::vector<Eigen::Vector3d>& axes) {
    for (std::size_t i = 0; i < axes.size(); ++i) {
      std::string l = base + std::to_string(i);
      L.lt(l, "O");
      for (std::size_t p = 0; p < eax.size(); ++p)
        if (std::abs(axes[i].dot(eax[p])) < 1e-9) L.lt(idx("p", static_cast<int>(p)), l);
    }
  };
  for (std::size_t p = 0; p < eax.size(); ++p) L.lt("V", idx("p", static_cast<int>(p)));
  lines("v", vax);
  lines("e", eax);
  lines("f", fax);
  Diagram Q;
  Q.lt("V", "p");
  for (const char* s : {"v", "e", "f"}) {
    Q.lt("p", s);
    Q.lt(s, "O");
  }
  auto c = make("J(Ico3)", "J(Ico3)", L.poset(), Q.poset());
  c.note = "incidences computed from icosahedron vertex coordinates";
  return c;
}

std::vector<FigureCase> figure_cases(int n, bool with_fixed) {
  const std::string s = std::to_string(n), s2 = std::to_string(2 * n);
  const bool even = n % 2 == 0;
  std::vector<FigureCase> out;
  out.push_back(make("mu3:" + s, "mu3:" + s, chain({"l0"}), chain({"l0"})));
  out.push_back(make("J(mu3:" + s + ")", "J(mu3:" + s + ")", even ? diamond() : chain({"l0", "O"}),
                     even ? diamond() : chain({"l0", "O"})));
  out.push_back(make("mixed(mu3:" + s2 + ",mu3:" + s + ")", "mixed(mu3:" + s2 + ",mu3:" + s + ")",
                     even ? chain({"l0", "O"}) : diamond(), even ? chain({"l0", "O"}) : diamond()));
  {
    Diagram q;
    q.lt("P" + std::string(even ? "e" : ""), "l0");
    q.lt("V", "P" + std::string(even ? "e" : ""));
    if (even) {
      q.lt("V", "Po");
      q.lt("Po", "l0");
    }
    out.push_back(make("mixed(D3:" + s + ",mu3:" + s + ")", "mixed(D3:" + s + ",mu3:" + s + ")",
                       mixed_d3_mu3_lattice(n), q.poset()));
  }
  out.push_back(make("D3:" + s, "D3:" + s, bouquet_poset(n + 1), bouquet_poset(even ? 3 : 2)));
  out.push_back(make("J(D3:" + s + ")", "J(D3:" + s + ")", jd3_lattice(n), jd3_quotient(n)));
  out.push_back(make("mixed(D3:" + s2 + ",D3:" + s + ")", "mixed(D3:" + s2 + ",D3:" + s + ")",
                     mixed_d3_d3_lattice(n), mixed_d3_d3_quotient(n)));
  if (with_fixed) {
    out.push_back(make("T3", "T3", bouquet_poset(7), bouquet_poset(2)));
    out.push_back(jt3_corrected());
    out.push_back(jt3_printed());
    out.push_back(a3_figure());
    out.push_back(make("Oct3", "Oct3", bouquet_poset(13), bouquet_poset(3)));
    out.push_back(bc3_figure());
    out.push_back(make("Ico3", "Ico3", bouquet_poset(31), bouquet_poset(3)));
    out.push_back(icosahedral_reflection_figure());
  }
  return out;
}

}  // namespace fixlat
