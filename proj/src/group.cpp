#include "fixlat/group.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

namespace fixlat {

Mat block_diag(const std::vector<Mat>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.rows());
  Mat M = Mat::Zero(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    M.block(off, off, b.rows(), b.cols()) = b;
    off += static_cast<int>(b.rows());
  }
  return M;
}

int element_order(const Mat& M, const ToleranceProfile& tol, int cap) {
  const int n = static_cast<int>(M.rows());
  const Mat I = Mat::Identity(n, n);
  Mat P = M;
  for (int k = 1; k <= cap; ++k) {
    if (max_abs(P - I) < tol.eq_tol) return k;
    P = P * M;
    if (!P.allFinite() || max_abs(P) > 1e8) throw NotFiniteOrder("matrix powers diverge");
  }
  throw NotFiniteOrder("no power up to " + std::to_string(cap) + " equals the identity");
}

GroupElement FiniteLinearGroup::make_element(const Mat& M, const ToleranceProfile& tol) {
  const int n = static_cast<int>(M.rows());
  GroupElement e;
  e.matrix = M;
  e.order = element_order(M, tol);
  e.det = M.determinant() < 0 ? -1 : 1;
  e.fixed = kernel(M - Mat::Identity(n, n), tol);
  e.fix_codim = n - e.fixed.dim();
  return e;
}

void FiniteLinearGroup::build_index() {
  index_ = QuantizedIndex(tol_.hash_grid);
  for (int i = 0; i < order(); ++i) index_.insert(elements_[i].matrix, i);
}

namespace {

// Separation certificate: sort by a fixed linear functional of the entries and
// compare only neighbours inside the window that a close pair must fall into.
void check_separation(const std::vector<GroupElement>& els, double grid) {
  if (els.size() < 2) return;
  const auto& M0 = els[0].matrix;
  std::vector<double> w(M0.size());
  double wsum = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    double f = std::fmod(0.6180339887498949 * double(k + 1), 1.0);
    w[k] = 0.5 + 0.5 * f;
    wsum += w[k];
  }
  std::vector<std::pair<double, int>> s;
  s.reserve(els.size());
  for (int i = 0; i < static_cast<int>(els.size()); ++i) {
    const auto& M = els[i].matrix;
    double v = 0;
    for (int k = 0; k < M.size(); ++k) v += w[k] * M.data()[k];
    s.push_back({v, i});
  }
  std::sort(s.begin(), s.end());
  const double sep = 100 * grid;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size() && s[b].first - s[a].first <= sep * wsum; ++b) {
      double d = max_abs(els[s[a].second].matrix - els[s[b].second].matrix);
      if (d <= sep) {
        std::ostringstream os;
        os << "two group elements are only " << d << " apart (need > " << sep << ")";
        throw SeparationViolated(os.str());
      }
    }
  }
}

}  // namespace

FiniteLinearGroup FiniteLinearGroup::from_elements(std::vector<Mat> elems, const std::vector<Mat>& gens,
                                                   const ToleranceProfile& tol, bool verify_closure) {
  if (elems.empty()) throw InvalidParameter("a group needs at least one element");
  FiniteLinearGroup G;
  G.tol_ = tol;
  G.dim_ = static_cast<int>(elems[0].rows());
  std::vector<std::pair<std::vector<std::int64_t>, GroupElement>> tmp;
  tmp.reserve(elems.size());
  for (auto& M : elems) {
    if (M.rows() != G.dim_ || M.cols() != G.dim_) throw DimensionMismatch("group elements differ in size");
    require_finite(M);
    auto e = make_element(M, tol);
    tmp.push_back({quantize(M, tol.hash_grid), std::move(e)});
  }
  std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) {
    if (a.second.fix_codim != b.second.fix_codim) return a.second.fix_codim < b.second.fix_codim;
    return key_less(a.first, b.first);
  });
  for (auto& t : tmp) G.elements_.push_back(std::move(t.second));
  if (max_abs(G.elements_[0].matrix - Mat::Identity(G.dim_, G.dim_)) >= tol.hash_grid)
    throw NotSubgroup("element list does not contain the identity");
  check_separation(G.elements_, tol.hash_grid);
  G.build_index();
  for (const auto& g : gens) {
    int id = G.find(g);
    if (id < 0) throw NotSubgroup("generator missing from element list");
    if (std::find(G.gens_.begin(), G.gens_.end(), id) == G.gens_.end()) G.gens_.push_back(id);
  }
  if (verify_closure) {
    for (int s : G.gens_)
      for (int i = 0; i < G.order(); ++i)
        if (G.product_id(s, i) < 0) throw NotSubgroup("element list is not closed under multiplication");
  }
  return G;
}

std::vector<Mat> FiniteLinearGroup::generator_matrices() const {
  std::vector<Mat> out;
  for (int g : gens_) out.push_back(elements_[g].matrix);
  return out;
}

int FiniteLinearGroup::product_id(int a, int b) const { return find(elements_[a].matrix * elements_[b].matrix); }

int FiniteLinearGroup::inverse_id(int a) const {
  const Mat& M = elements_[a].matrix;
  return find(is_orthogonal() ? Mat(M.transpose()) : Mat(M.inverse()));
}

bool FiniteLinearGroup::contains_minus_identity() const { return contains(-Mat::Identity(dim_, dim_)); }

bool FiniteLinearGroup::is_orthogonal() const {
  const Mat I = Mat::Identity(dim_, dim_);
  for (const auto& e : elements_)
    if (max_abs(e.matrix.transpose() * e.matrix - I) >= tol_.eq_tol) return false;
  return true;
}

bool FiniteLinearGroup::in_special_orthogonal() const {
  if (!is_orthogonal()) return false;
  return std::all_of(elements_.begin(), elements_.end(), [](const GroupElement& e) { return e.det == 1; });
}

FiniteLinearGroup FiniteLinearGroup::restrict_to(const std::vector<int>& ids, const std::vector<int>& gen_ids) const {
  FiniteLinearGroup H;
  H.dim_ = dim_;
  H.tol_ = tol_;
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> remap(order(), -1);
  for (int i : sorted) {
    remap[i] = static_cast<int>(H.elements_.size());
    H.elements_.push_back(elements_[i]);
  }
  for (int g : gen_ids) H.gens_.push_back(remap[g]);
  H.build_index();
  return H;
}

FiniteLinearGroup FiniteLinearGroup::closure_of(const std::vector<int>& gen_ids) const {
  std::vector<bool> seen(order(), false);
  std::vector<int> ids{identity_id()};
  seen[identity_id()] = true;
  for (std::size_t q = 0; q < ids.size(); ++q) {
    for (int s : gen_ids) {
      int y = product_id(s, ids[q]);
      if (y < 0) throw NotSubgroup("product left the ambient group");
      if (!seen[y]) {
        seen[y] = true;
        ids.push_back(y);
      }
    }
  }
  return restrict_to(ids, gen_ids);
}

FiniteLinearGroup close(const std::vector<Mat>& generators, int cap, const ToleranceProfile& tol) {
  tol.validate();
  if (generators.empty()) throw InvalidParameter("close needs at least one generator");
  const int n = static_cast<int>(generators[0].rows());
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generators must be square of equal size");
    require_finite(g);
    element_order(g, tol);
  }
  std::vector<Mat> elems{Mat::Identity(n, n)};
  QuantizedIndex idx(tol.hash_grid);
  idx.insert(elems[0], 0);
  for (std::size_t q = 0; q < elems.size(); ++q) {
    for (const auto& s : generators) {
      Mat y = s * elems[q];
      if (idx.find(y) >= 0) continue;
      if (static_cast<int>(elems.size()) >= cap)
        throw CapExceeded("group has more than " + std::to_string(cap) + " elements");
      idx.insert(y, static_cast<int>(elems.size()));
      elems.push_back(std::move(y));
    }
  }
  return FiniteLinearGroup::from_elements(std::move(elems), generators, tol, false);
}

FiniteLinearGroup orthogonalize(const FiniteLinearGroup& G, Mat* conjugator) {
  const int n = G.dim();
  if (G.is_orthogonal()) {
    if (conjugator) *conjugator = Mat::Identity(n, n);
    return G;
  }
  Mat omega = Mat::Zero(n, n);
  for (const auto& e : G.elements()) omega += e.matrix.transpose() * e.matrix;
  omega /= G.order();
  Eigen::LLT<Mat> llt(omega);
  if (llt.info() != Eigen::Success) throw NotOrthogonal("averaged form is not positive definite");
  Mat C = llt.matrixU();
  Mat Cinv = C.inverse();
  std::vector<Mat> elems, gens;
  for (const auto& e : G.elements()) elems.push_back(C * e.matrix * Cinv);
  for (const auto& g : G.generator_matrices()) gens.push_back(C * g * Cinv);
  auto H = FiniteLinearGroup::from_elements(std::move(elems), gens, G.tol(), true);
  if (!H.is_orthogonal()) throw NotOrthogonal("conjugated group is not orthogonal within eq_tol");
  H.set_name(G.name());
  if (conjugator) *conjugator = C;
  return H;
}

BlockProfile block_decompose(const Mat& g, const ToleranceProfile& tol) {
  const int n = static_cast<int>(g.rows());
  if (g.rows() != g.cols()) throw DimensionMismatch("block_decompose expects a square matrix");
  if (max_abs(g.transpose() * g - Mat::Identity(n, n)) >= tol.eq_tol) throw NotOrthogonal("matrix is not orthogonal");
  Eigen::RealSchur<Mat> schur(g);
  Mat T = schur.matrixT();
  const Mat& U = schur.matrixU();
  Mat B = Mat::Zero(n, n);
  BlockProfile bp;
  int neg = 0;
  for (int i = 0; i < n;) {
    if (i + 1 < n && T(i + 1, i) != 0.0) {
      B.block(i, i, 2, 2) = T.block(i, i, 2, 2);
      double a = 0.5 * (T(i, i) + T(i + 1, i + 1));
      double b = std::sqrt(std::abs(T(i, i + 1) * T(i + 1, i)));
      bp.rotation_angles.push_back(std::atan2(b, a));
      i += 2;
    } else {
      B(i, i) = T(i, i);
      if (std::abs(T(i, i) - 1) < tol.hash_grid) {
        ++bp.fix_count;
      } else if (std::abs(T(i, i) + 1) < tol.hash_grid) {
        ++neg;
      } else {
        throw NotOrthogonal("real eigenvalue other than +1 or -1");
      }
      ++i;
    }
  }
  // An even number of -1 eigenvalues pairs into half-turns; an odd number is
  // kept as reflections, matching det = (-1)^k.
  if (neg % 2 == 0) {
    for (int k = 0; k < neg / 2; ++k) bp.rotation_angles.push_back(M_PI);
  } else {
    bp.neg_count = neg;
  }
  std::sort(bp.rotation_angles.begin(), bp.rotation_angles.end());
  if (max_abs(U * B * U.transpose() - g) >= tol.eq_tol) throw NotOrthogonal("block form does not reconstruct the matrix");
  return bp;
}

bool is_subset(const FiniteLinearGroup& H, const FiniteLinearGroup& G) {
  if (H.dim() != G.dim()) return false;
  for (const auto& e : H.elements())
    if (!G.contains(e.matrix)) return false;
  return true;
}

namespace {

FiniteLinearGroup generated_by_mask(const FiniteLinearGroup& G, const std::vector<bool>& mask) {
  std::vector<int> gens;
  std::vector<bool> in(G.order(), false);
  in[G.identity_id()] = true;
  FiniteLinearGroup cur = G.closure_of({});
  for (int i = 0; i < G.order(); ++i) {
    if (!mask[i] || in[i]) continue;
    gens.push_back(i);
    cur = G.closure_of(gens);
    std::fill(in.begin(), in.end(), false);
    for (const auto& e : cur.elements()) in[G.find(e.matrix)] = true;
  }
  return cur;
}

std::string wrap(const char* f, const std::string& a) { return std::string(f) + "(" + a + ")"; }

}  // namespace

FiniteLinearGroup subgroup_generated(const FiniteLinearGroup& G, const std::function<bool(const GroupElement&)>& pred) {
  std::vector<bool> mask(G.order());
  for (int i = 0; i < G.order(); ++i) mask[i] = pred(G.element(i));
  return generated_by_mask(G, mask);
}

FiniteLinearGroup alternating_subgroup(const FiniteLinearGroup& W) {
  auto A = subgroup_generated(W, [](const GroupElement& e) { return e.det == 1; });
  if (!W.name().empty()) A.set_name(wrap("Alt", W.name()));
  return A;
}

FiniteLinearGroup normalizer(const FiniteLinearGroup& G, const FiniteLinearGroup& H) {
  if (!is_subset(H, G)) throw NotSubgroup("normalizer needs H inside G");
  std::vector<bool> mask(G.order(), false);
  const auto hgens = H.generator_matrices();
  for (int i = 0; i < G.order(); ++i) {
    const Mat& g = G.element(i).matrix;
    const Mat& gi = G.element(G.inverse_id(i)).matrix;
    mask[i] = std::all_of(hgens.begin(), hgens.end(), [&](const Mat& h) { return H.contains(g * h * gi); });
  }
  return generated_by_mask(G, mask);
}

FiniteLinearGroup j_extension(const FiniteLinearGroup& G) {
  if (G.contains_minus_identity()) throw AlreadyContainsJ("group already contains -I");
  auto gens = G.generator_matrices();
  gens.push_back(-Mat::Identity(G.dim(), G.dim()));
  auto R = close(gens, std::max(kDefaultCap, 2 * G.order()), G.tol());
  if (!G.name().empty()) R.set_name(wrap("J", G.name()));
  return R;
}

FiniteLinearGroup mixed_group(const FiniteLinearGroup& K, const FiniteLinearGroup& H) {
  if (K.dim() != H.dim()) throw DimensionMismatch("mixed group needs equal dimensions");
  for (const auto& e : K.elements())
    if (e.det != 1) throw NotRotationGroup("outer group has an element of determinant -1");
  if (!is_subset(H, K)) throw NotSubgroup("inner group is not contained in the outer group");
  if (K.order() != 2 * H.order()) throw NotIndexTwo("inner group does not have index 2");
  std::vector<Mat> elems, gens;
  auto twist = [&](const Mat& g) { return H.contains(g) ? g : Mat(-g); };
  for (const auto& e : K.elements()) elems.push_back(twist(e.matrix));
  for (const auto& g : K.generator_matrices()) gens.push_back(twist(g));
  auto M = FiniteLinearGroup::from_elements(std::move(elems), gens, K.tol(), true);
  if (!K.name().empty() && !H.name().empty()) M.set_name("mixed(" + K.name() + "," + H.name() + ")");
  return M;
}

FiniteLinearGroup direct_product(const FiniteLinearGroup& G, const FiniteLinearGroup& H, int cap) {
  if (static_cast<long long>(G.order()) * H.order() > cap)
    throw CapExceeded("direct product would have more than " + std::to_string(cap) + " elements");
  const Mat Ig = Mat::Identity(G.dim(), G.dim()), Ih = Mat::Identity(H.dim(), H.dim());
  std::vector<Mat> elems, gens;
  for (const auto& a : G.elements())
    for (const auto& b : H.elements()) elems.push_back(block_diag({a.matrix, b.matrix}));
  for (const auto& g : G.generator_matrices()) gens.push_back(block_diag({g, Ih}));
  for (const auto& h : H.generator_matrices()) gens.push_back(block_diag({Ig, h}));
  auto P = FiniteLinearGroup::from_elements(std::move(elems), gens, G.tol(), false);
  if (!G.name().empty() && !H.name().empty()) P.set_name("prod(" + G.name() + "," + H.name() + ")");
  return P;
}

FiniteLinearGroup diag_tensor(const FiniteLinearGroup& G, int m) {
  if (m < 1) throw InvalidParameter("diag_tensor needs m >= 1");
  auto rep = [m](const Mat& g) { return block_diag(std::vector<Mat>(m, g)); };
  std::vector<Mat> elems, gens;
  for (const auto& e : G.elements()) elems.push_back(rep(e.matrix));
  for (const auto& g : G.generator_matrices()) gens.push_back(rep(g));
  auto D = FiniteLinearGroup::from_elements(std::move(elems), gens, G.tol(), false);
  if (!G.name().empty()) D.set_name("diag(" + G.name() + "," + std::to_string(m) + ")");
  return D;
}

Fingerprint fingerprint(const FiniteLinearGroup& G) {
  Fingerprint f;
  f.first = G.order();
  for (const auto& e : G.elements()) f.second.emplace_back(e.order, e.fix_codim, e.det);
  std::sort(f.second.begin(), f.second.end());
  return f;
}

GroupMatch compare_groups(const FiniteLinearGroup& A, const FiniteLinearGroup& B) {
  if (A.dim() == B.dim() && A.order() == B.order() && is_subset(A, B)) return GroupMatch::Exact;
  if (A.dim() == B.dim() && fingerprint(A) == fingerprint(B)) return GroupMatch::Fingerprint;
  return GroupMatch::Mismatch;
}

const char* to_string(GroupMatch m) {
  switch (m) {
    case GroupMatch::Exact: return "exact";
    case GroupMatch::Fingerprint: return "fingerprint";
    default: return "mismatch";
  }
}

}  // namespace fixlat
