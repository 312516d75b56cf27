#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fixlat/tolerance.hpp"

namespace fixlat {

enum class Status { Pass, Fail, KnownDiscrepancy };
const char* to_string(Status s);

struct VerifyCase {
  std::string id;
  std::string expected;
  std::string actual;
  Status status = Status::Fail;
  std::string provenance;  // table, figure, theorem or derived
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerifyCase> cases;
  int numeric_errors = 0;  // NumericError raised while evaluating a case

  int count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }
  void print(std::ostream& os) const;
};

struct VerifyOptions {
  int n_lo = 2;
  int n_hi = 7;
  ToleranceProfile tol;
};

VerificationReport verify_classification(const VerifyOptions& opt);
VerificationReport verify_figures(const VerifyOptions& opt);
VerificationReport verify_theorems(const VerifyOptions& opt);
VerificationReport verify_cohomology(const VerifyOptions& opt);

// Parts of the theorem and cohomology suites.
VerificationReport check_bouquets(const VerifyOptions& opt);
VerificationReport check_structure(const VerifyOptions& opt);
VerificationReport check_gl3_cases(const VerifyOptions& opt);
VerificationReport check_dim4_products(const VerifyOptions& opt);
VerificationReport check_biconditional(const VerifyOptions& opt);
VerificationReport check_line_bound(const VerifyOptions& opt);
VerificationReport check_quotient_shapes(const VerifyOptions& opt);
VerificationReport check_exact_cohomology(const VerifyOptions& opt);

// Every group name that appears in the classification rows for n in [lo, hi].
std::vector<std::string> catalog_instances(int lo, int hi);

// One line per group with orders, flat codimensions, Betti numbers and poset
// shapes. Used to compare runs under different tolerances.
std::string discrete_digest(const std::vector<std::string>& specs, const ToleranceProfile& tol);

}  // namespace fixlat
