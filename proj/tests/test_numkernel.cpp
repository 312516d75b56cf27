#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "fixlat/numkernel.hpp"

using namespace fixlat;

namespace {

Mat rot_z(double t) {
  Mat R = Mat::Identity(3, 3);
  R(0, 0) = std::cos(t);
  R(0, 1) = -std::sin(t);
  R(1, 0) = std::sin(t);
  R(1, 1) = std::cos(t);
  return R;
}

Mat col(double a, double b, double c) {
  Mat v(3, 1);
  v << a, b, c;
  return v;
}

}  // namespace

TEST_CASE("tolerance profile ordering") {
  ToleranceProfile t;
  CHECK_NOTHROW(t.validate());
  t.rank_tol = 1e-8;
  CHECK_THROWS_AS(t.validate(), InvalidParameter);
  t = {};
  t.hash_grid = 1.5;
  CHECK_THROWS_AS(t.validate(), InvalidParameter);
}

TEST_CASE("FIXLAT_TOL overrides eq_tol and pulls rank_tol down") {
  setenv("FIXLAT_TOL", "1e-11", 1);
  auto t = ToleranceProfile::from_env();
  CHECK(t.eq_tol == doctest::Approx(1e-11));
  CHECK(t.rank_tol <= t.eq_tol);
  setenv("FIXLAT_TOL", "abc", 1);
  CHECK_THROWS_AS(ToleranceProfile::from_env(), InvalidParameter);
  unsetenv("FIXLAT_TOL");
  CHECK(ToleranceProfile::from_env().eq_tol == doctest::Approx(1e-9));
}

TEST_CASE("kernel dimensions") {
  Mat M = Mat::Zero(3, 3);
  M(0, 0) = 1;
  CHECK(kernel(M).dim() == 2);
  CHECK(kernel(Mat::Identity(4, 4)).dim() == 0);
  CHECK(kernel(Mat::Zero(3, 3)).dim() == 3);
  // rank one outer product
  Mat v = col(1, 2, 3);
  CHECK(kernel(v * v.transpose()).dim() == 2);
  CHECK(numerical_rank(v * v.transpose()) == 1);
}

TEST_CASE("kernel refuses ambiguous singular values") {
  Mat M = Mat::Identity(3, 3);
  M(2, 2) = 5e-10;
  CHECK_THROWS_AS(kernel(M), AmbiguousRank);
  M(2, 2) = 1e-13;
  CHECK(kernel(M).dim() == 1);
  M(2, 2) = 1e-8;
  CHECK(kernel(M).dim() == 0);
}

TEST_CASE("non-finite input is rejected") {
  Mat M = Mat::Identity(2, 2);
  M(0, 1) = std::nan("");
  CHECK_THROWS_AS(kernel(M), InvalidParameter);
}

TEST_CASE("intersection of two planes is the cross product line") {
  auto P = complement(Subspace::span(col(1, 0, 0)));
  auto Q = complement(Subspace::span(col(0, 1, 1)));
  auto L = intersect(P, Q);
  REQUIRE(L.dim() == 1);
  Eigen::Vector3d n1(1, 0, 0), n2(0, 1, 1);
  Eigen::Vector3d c = n1.cross(n2).normalized();
  Eigen::Vector3d b = L.basis().col(0);
  CHECK(std::abs(std::abs(b.dot(c)) - 1) < 1e-12);
  CHECK(contains(P, L));
  CHECK(contains(Q, L));
  CHECK_FALSE(contains(L, P));
}

TEST_CASE("span is independent of the spanning set") {
  Mat A(3, 2), B(3, 3);
  A << 1, 0, 1, 1, 0, 0;
  B << 2, 1, 3, 0, 1, 3, 0, 0, 0;
  auto S = Subspace::span(A), T = Subspace::span(B);
  CHECK(S.dim() == 2);
  CHECK(S.equals(T));
  CHECK(S.key() == T.key());
  CHECK(max_abs(S.basis() - T.basis()) < 1e-12);
  CHECK(max_abs(S.basis().transpose() * S.basis() - Mat::Identity(2, 2)) < 1e-12);
}

TEST_CASE("apply rotates subspaces") {
  auto xaxis = Subspace::span(col(1, 0, 0));
  auto img = apply(rot_z(M_PI / 2), xaxis);
  CHECK(img.equals(Subspace::span(col(0, 1, 0))));
  CHECK_THROWS_AS(apply(Mat::Zero(3, 3), xaxis), SingularMatrix);
  CHECK_THROWS_AS(apply(Mat::Identity(2, 2), xaxis), DimensionMismatch);
}

TEST_CASE("full and zero subspaces") {
  CHECK(Subspace::full(4).codim() == 0);
  CHECK(Subspace::zero(4).dim() == 0);
  CHECK(complement(Subspace::zero(3)).equals(Subspace::full(3)));
  CHECK_THROWS_AS(intersect(Subspace::full(2), Subspace::full(3)), DimensionMismatch);
}

TEST_CASE("quantized index finds matrices across rounding boundaries") {
  const double grid = 1e-6;
  QuantizedIndex idx(grid);
  Mat A = Mat::Constant(2, 2, 0.5 * grid);  // exactly on a rounding boundary
  idx.insert(A, 7);
  Mat B = A;
  B(0, 0) -= 1e-9;
  B(1, 1) += 1e-9;
  CHECK(idx.find(B) == 7);
  Mat C = A;
  C(0, 1) += 3 * grid;
  CHECK(idx.find(C) == -1);
  CHECK(idx.size() == 1);
}

TEST_CASE("quantize and key ordering") {
  Mat M(1, 2);
  M << 1.4e-6, -2.6e-6;
  auto k = quantize(M, 1e-6);
  CHECK(k == std::vector<std::int64_t>{1, -3});
  CHECK(key_less({1, 2}, {1, 3}));
  CHECK_FALSE(key_less({1, 3}, {1, 3}));
  CHECK(KeyHash{}({1, 2}) == KeyHash{}({1, 2}));
}
