#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fixlat/numkernel.hpp"

namespace fixlat {

constexpr int kDefaultCap = 20000;
constexpr int kOrderCap = 1000;

struct GroupElement {
  Mat matrix;
  int det = 1;  // snapped to +1 or -1
  int order = 1;
  Subspace fixed;  // kernel(matrix - I)
  int fix_codim = 0;
};

class FiniteLinearGroup {
 public:
  int dim() const { return dim_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(int i) const { return elements_[i]; }
  // Generators as element ids.
  const std::vector<int>& generator_ids() const { return gens_; }
  std::vector<Mat> generator_matrices() const;
  const ToleranceProfile& tol() const { return tol_; }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  // Element id of M, or -1.
  int find(const Mat& M) const { return index_.find(M); }
  bool contains(const Mat& M) const { return find(M) >= 0; }
  int identity_id() const { return 0; }
  int product_id(int a, int b) const;
  int inverse_id(int a) const;

  bool contains_minus_identity() const;
  bool is_orthogonal() const;
  bool in_special_orthogonal() const;

  // Subgroup on the given element ids (must be closed), keeping this
  // group's matrices and invariants.
  FiniteLinearGroup restrict_to(const std::vector<int>& ids, const std::vector<int>& gen_ids) const;
  // Closure of the given ids inside this group.
  FiniteLinearGroup closure_of(const std::vector<int>& gen_ids) const;

  // Builds a group from a complete, closed element list. Computes invariants,
  // sorts, checks separation and (optionally) closure.
  static FiniteLinearGroup from_elements(std::vector<Mat> elems, const std::vector<Mat>& gens,
                                         const ToleranceProfile& tol, bool verify_closure);

 private:
  static GroupElement make_element(const Mat& M, const ToleranceProfile& tol);
  void build_index();

  int dim_ = 0;
  std::vector<GroupElement> elements_;
  std::vector<int> gens_;
  std::string name_;
  ToleranceProfile tol_;
  QuantizedIndex index_{1e-6};
};

struct BlockProfile {
  std::vector<double> rotation_angles;  // in (0, pi]
  int neg_count = 0;
  int fix_count = 0;
  int fix_codim() const { return 2 * static_cast<int>(rotation_angles.size()) + neg_count; }
};

// Smallest k >= 1 with M^k = I within eq_tol; throws NotFiniteOrder after cap.
int element_order(const Mat& M, const ToleranceProfile& tol = {}, int cap = kOrderCap);

FiniteLinearGroup close(const std::vector<Mat>& generators, int cap = kDefaultCap,
                        const ToleranceProfile& tol = {});

// Conjugates G into O(n). If conjugator is given it receives C with
// element g mapped to C g C^-1.
FiniteLinearGroup orthogonalize(const FiniteLinearGroup& G, Mat* conjugator = nullptr);

BlockProfile block_decompose(const Mat& g, const ToleranceProfile& tol = {});

FiniteLinearGroup j_extension(const FiniteLinearGroup& G);
FiniteLinearGroup mixed_group(const FiniteLinearGroup& K, const FiniteLinearGroup& H);
FiniteLinearGroup direct_product(const FiniteLinearGroup& G, const FiniteLinearGroup& H, int cap = kDefaultCap);
FiniteLinearGroup diag_tensor(const FiniteLinearGroup& G, int m);
FiniteLinearGroup alternating_subgroup(const FiniteLinearGroup& W);
FiniteLinearGroup normalizer(const FiniteLinearGroup& G, const FiniteLinearGroup& H);
FiniteLinearGroup subgroup_generated(const FiniteLinearGroup& G, const std::function<bool(const GroupElement&)>& pred);

// True iff every element of H is an element of G.
bool is_subset(const FiniteLinearGroup& H, const FiniteLinearGroup& G);

using Fingerprint = std::pair<int, std::vector<std::tuple<int, int, int>>>;
Fingerprint fingerprint(const FiniteLinearGroup& G);

enum class GroupMatch { Exact, Fingerprint, Mismatch };
GroupMatch compare_groups(const FiniteLinearGroup& A, const FiniteLinearGroup& B);
const char* to_string(GroupMatch m);

Mat block_diag(const std::vector<Mat>& blocks);

}  // namespace fixlat
