#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fixlat/group.hpp"

namespace fixlat {

// Parsed group name, e.g. "D3:5", "J(mu3:3)", "mixed(Oct3,T3)",
// "prod(mu2:3,mu2:3)", "diag(T3,2)", "triv:3".
struct CatalogSpec {
  std::string kind;  // triv, A1, I2, mu2, mu3, D3, T3, Oct3, Ico3, A3, BC3, H3, J, mixed, prod, diag
  int n = 0;         // parameter for triv/I2/mu2/mu3/D3 and the multiplicity of diag
  std::vector<CatalogSpec> args;

  static CatalogSpec parse(const std::string& text);
  std::string str() const;
};

FiniteLinearGroup build(const CatalogSpec& spec, int cap = kDefaultCap, const ToleranceProfile& tol = {});
FiniteLinearGroup build(const std::string& spec, int cap = kDefaultCap, const ToleranceProfile& tol = {});

enum class Parity { Any, Even, Odd };

struct ClassificationRow {
  std::string group;  // template with {n} and {2n}
  Parity parity = Parity::Any;
  std::string other_name;  // may be empty
  std::string r1;
  std::string r2;
  int codim = 0;        // minimal k with the group generated in codim <= k
  bool strict = false;  // strictly generated in that codim
};

const std::vector<ClassificationRow>& classification_rows();

// Substitutes n into a row template.
std::string instantiate(const std::string& tmpl, int n);
bool parity_ok(Parity p, int n);
const char* to_string(Parity p);

struct CatalogEntry {
  std::string form;
  std::string params;
  std::string description;
  bool strict_codim_two;  // one of the rank <= 3 rotation groups
};

const std::vector<CatalogEntry>& catalog_entries();

}  // namespace fixlat
