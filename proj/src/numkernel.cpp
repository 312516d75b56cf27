#include "fixlat/numkernel.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace fixlat {

void ToleranceProfile::validate() const {
  if (!(rank_tol > 0 && rank_tol <= eq_tol && eq_tol <= hash_grid && hash_grid < 1)) {
    std::ostringstream os;
    os << "tolerances must satisfy 0 < rank_tol <= eq_tol <= hash_grid < 1 (got rank_tol=" << rank_tol
       << ", eq_tol=" << eq_tol << ", hash_grid=" << hash_grid << ")";
    throw InvalidParameter(os.str());
  }
}

ToleranceProfile ToleranceProfile::from_env() {
  ToleranceProfile t;
  if (const char* s = std::getenv("FIXLAT_TOL"); s && *s) {
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || *end != '\0') throw InvalidParameter(std::string("FIXLAT_TOL is not a number: ") + s);
    t.eq_tol = v;
    t.rank_tol = std::min(t.rank_tol, v);
  }
  t.validate();
  return t;
}

double max_abs(const Mat& M) { return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff(); }

void require_finite(const Mat& M) {
  if (!M.allFinite()) throw InvalidParameter("matrix has non-finite entries");
}

namespace {

struct SvdSplit {
  int rank;
  Mat V;  // right singular vectors, columns ordered by decreasing sigma
  Mat U;
};

SvdSplit svd_split(const Mat& M, const ToleranceProfile& tol) {
  require_finite(M);
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double scale = std::max(s.size() ? s(0) : 0.0, 1.0);
  double lo = tol.rank_tol * scale, hi = 10 * tol.rank_tol * scale;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > lo && s(i) < hi) {
      std::ostringstream os;
      os << "singular value " << s(i) << " lies in the ambiguous band (" << lo << ", " << hi << ")";
      throw AmbiguousRank(os.str());
    }
    if (s(i) >= hi) ++rank;
  }
  return {rank, svd.matrixV(), svd.matrixU()};
}

// Canonical orthonormal basis of the range of a projector: greedy pivoted
// Gram-Schmidt on its columns, largest residual first, lowest index on ties.
Mat canonical_basis(const Mat& P, int d) {
  const int n = static_cast<int>(P.rows());
  Mat Q(n, d);
  Mat R = P;
  std::vector<bool> used(n, false);
  for (int k = 0; k < d; ++k) {
    int best = -1;
    double bn = -1;
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      double nj = R.col(j).norm();
      if (nj > bn + 1e-7) {
        bn = nj;
        best = j;
      }
    }
    used[best] = true;
    Vec q = R.col(best) / bn;
    Q.col(k) = q;
    R -= q * (q.transpose() * R);
  }
  for (int k = 0; k < d; ++k) {
    // Flip so the first entry of clearly maximal size is positive.
    double m = Q.col(k).cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) {
      if (std::abs(Q(i, k)) > m - 1e-7) {
        if (Q(i, k) < 0) Q.col(k) = -Q.col(k);
        break;
      }
    }
  }
  return Q;
}

}  // namespace

int numerical_rank(const Mat& M, const ToleranceProfile& tol) { return svd_split(M, tol).rank; }

Subspace from_orthonormal(const Mat& Q) {
  const int n = static_cast<int>(Q.rows());
  Mat P = Q * Q.transpose();
  P = 0.5 * (P + P.transpose());
  int d = static_cast<int>(std::lround(P.trace()));
  if (d == 0) return Subspace(Mat::Zero(n, n), Mat(n, 0));
  return Subspace(P, canonical_basis(P, d));
}

Subspace Subspace::span(const Mat& B, const ToleranceProfile& tol) {
  const int n = static_cast<int>(B.rows());
  if (B.cols() == 0) return zero(n);
  auto sp = svd_split(B, tol);
  return from_orthonormal(sp.U.leftCols(sp.rank));
}

Subspace Subspace::full(int n) { return Subspace(Mat::Identity(n, n), Mat::Identity(n, n)); }

Subspace Subspace::zero(int n) { return Subspace(Mat::Zero(n, n), Mat(n, 0)); }

bool Subspace::equals(const Subspace& o, const ToleranceProfile& tol) const {
  if (ambient_dim() != o.ambient_dim()) return false;
  return max_abs(P_ - o.P_) < tol.hash_grid;
}

std::vector<std::int64_t> Subspace::key(const ToleranceProfile& tol) const { return quantize(P_, tol.hash_grid); }

Subspace kernel(const Mat& M, const ToleranceProfile& tol) {
  if (M.rows() != M.cols()) throw DimensionMismatch("kernel expects a square matrix");
  auto sp = svd_split(M, tol);
  const int n = static_cast<int>(M.cols());
  return from_orthonormal(sp.V.rightCols(n - sp.rank));
}

static void same_ambient(const Subspace& S, const Subspace& T) {
  if (S.ambient_dim() != T.ambient_dim()) throw DimensionMismatch("subspaces live in different ambient spaces");
}

Subspace intersect(const Subspace& S, const Subspace& T, const ToleranceProfile& tol) {
  same_ambient(S, T);
  const int n = S.ambient_dim();
  if (S.dim() == n) return T;
  if (T.dim() == n) return S;
  if (S.dim() == 0 || T.dim() == 0) return Subspace::zero(n);
  return kernel(2.0 * Mat::Identity(n, n) - S.projector() - T.projector(), tol);
}

bool contains(const Subspace& S, const Subspace& T, const ToleranceProfile& tol) {
  same_ambient(S, T);
  return max_abs(S.projector() * T.projector() - T.projector()) < tol.hash_grid;
}

Subspace apply(const Mat& g, const Subspace& S, const ToleranceProfile& tol) {
  if (g.rows() != g.cols() || g.rows() != S.ambient_dim()) throw DimensionMismatch("matrix and subspace dimensions differ");
  if (numerical_rank(g, tol) < g.rows()) throw SingularMatrix("apply needs an invertible matrix");
  if (S.dim() == 0) return S;
  return Subspace::span(g * S.basis(), tol);
}

Subspace complement(const Subspace& S, const ToleranceProfile& tol) {
  return kernel(S.projector(), tol);
}

std::vector<std::int64_t> quantize(const Mat& M, double grid) {
  std::vector<std::int64_t> k;
  k.reserve(M.size());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) k.push_back(std::llround(M(i, j) / grid));
  return k;
}

bool key_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t KeyHash::operator()(const std::vector<std::int64_t>& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : k) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {
// Entries whose scaled fractional part is within this distance of 1/2 are
// probed on both sides.
constexpr double kBoundaryMargin = 0.01;
constexpr int kMaxProbeBits = 12;
}  // namespace

int QuantizedIndex::find(const Mat& M) const {
  std::vector<std::int64_t> k;
  std::vector<std::pair<std::size_t, std::int64_t>> alt;
  k.reserve(M.size());
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) {
      double s = M(i, j) / grid_;
      std::int64_t r = std::llround(s);
      double frac = s - std::floor(s);
      if (std::abs(frac - 0.5) < kBoundaryMargin) alt.push_back({k.size(), r == std::int64_t(std::floor(s)) ? r + 1 : r - 1});
      k.push_back(r);
    }
  }
  if (alt.size() > kMaxProbeBits) alt.resize(kMaxProbeBits);
  const std::size_t combos = std::size_t(1) << alt.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    auto probe = k;
    for (std::size_t b = 0; b < alt.size(); ++b)
      if (mask >> b & 1) probe[alt[b].first] = alt[b].second;
    auto it = buckets_.find(probe);
    if (it == buckets_.end()) continue;
    for (int slot : it->second)
      if (stored_[slot].rows() == M.rows() && max_abs(stored_[slot] - M) < grid_) return ids_[slot];
  }
  return -1;
}

void QuantizedIndex::insert(const Mat& M, int id) {
  int slot = static_cast<int>(stored_.size());
  stored_.push_back(M);
  ids_.push_back(id);
  buckets_[quantize(M, grid_)].push_back(slot);
}

std::string format_matrix(const Mat& M) {
  std::ostringstream os;
  os << std::setprecision(6) << "[";
  for (int i = 0; i < M.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < M.cols(); ++j) os << (j ? " " : "") << (std::abs(M(i, j)) < 5e-13 ? 0.0 : M(i, j));
  }
  os << "]";
  return os.str();
}

}  // namespace fixlat
