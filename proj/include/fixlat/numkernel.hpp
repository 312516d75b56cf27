#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "fixlat/errors.hpp"
#include "fixlat/tolerance.hpp"

namespace fixlat {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// A linear subspace of R^n held as its orthogonal projector.
class Subspace {
 public:
  Subspace() = default;

  // Span of the columns of B (need not be orthonormal or independent).
  static Subspace span(const Mat& B, const ToleranceProfile& tol = {});
  static Subspace full(int n);
  static Subspace zero(int n);

  int ambient_dim() const { return static_cast<int>(P_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }
  int codim() const { return ambient_dim() - dim(); }
  const Mat& projector() const { return P_; }
  // Orthonormal columns. Deterministic: eigenvectors of P with the largest
  // entry of each column made positive.
  const Mat& basis() const { return basis_; }

  bool equals(const Subspace& o, const ToleranceProfile& tol = {}) const;

  // Quantized projector, row-major. Used for ordering and hashing.
  std::vector<std::int64_t> key(const ToleranceProfile& tol = {}) const;

 private:
  Subspace(Mat P, Mat basis) : P_(std::move(P)), basis_(std::move(basis)) {}
  friend Subspace from_orthonormal(const Mat& Q);

  Mat P_;
  Mat basis_;
};

// Builds a Subspace from a matrix whose columns are already orthonormal.
Subspace from_orthonormal(const Mat& Q);

// Numerical null space. Throws AmbiguousRank when a singular value sits in
// the grey zone (rank_tol, 10 rank_tol), both relative to max(sigma_max, 1).
Subspace kernel(const Mat& M, const ToleranceProfile& tol = {});

// Numerical rank under the same grey-zone rule.
int numerical_rank(const Mat& M, const ToleranceProfile& tol = {});

Subspace intersect(const Subspace& S, const Subspace& T, const ToleranceProfile& tol = {});

// True iff T is contained in S.
bool contains(const Subspace& S, const Subspace& T, const ToleranceProfile& tol = {});

// Image g.S.
Subspace apply(const Mat& g, const Subspace& S, const ToleranceProfile& tol = {});

// Orthogonal complement.
Subspace complement(const Subspace& S, const ToleranceProfile& tol = {});

double max_abs(const Mat& M);
void require_finite(const Mat& M);

// Entry-wise quantization round(x / grid).
std::vector<std::int64_t> quantize(const Mat& M, double grid);

// Lexicographic comparison of quantized keys.
bool key_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& k) const noexcept;
};

// Lookup table from matrices to integer ids under the hash_grid equality.
// Entries that sit near a rounding boundary are probed on both sides so that
// two matrices closer than hash_grid always find each other.
class QuantizedIndex {
 public:
  explicit QuantizedIndex(double hash_grid) : grid_(hash_grid) {}

  // Returns the id of a stored matrix within hash_grid (max norm), or -1.
  int find(const Mat& M) const;
  // Stores M under id. Caller checks find() first.
  void insert(const Mat& M, int id);
  std::size_t size() const { return stored_.size(); }

 private:
  double grid_;
  std::unordered_map<std::vector<std::int64_t>, std::vector<int>, KeyHash> buckets_;
  std::vector<Mat> stored_;
  std::vector<int> ids_;
};

std::string format_matrix(const Mat& M);

}  // namespace fixlat
