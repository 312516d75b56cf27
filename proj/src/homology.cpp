#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "fixlat/poset.hpp"

namespace fixlat {

using boost::multiprecision::cpp_int;

int exact_rank(const std::vector<std::vector<int>>& M) {
  if (M.empty() || M[0].empty()) return 0;
  const int rows = static_cast<int>(M.size()), cols = static_cast<int>(M[0].size());
  std::vector<std::vector<cpp_int>> A(rows, std::vector<cpp_int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A[i][j] = M[i][j];
  // Bareiss elimination; every division below is exact.
  cpp_int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c] != 0) {
        piv = i;
        if (abs(A[i][c]) == 1) break;
      }
    if (piv < 0) continue;
    std::swap(A[piv], A[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) A[i][j] = (A[r][c] * A[i][j] - A[i][c] * A[r][j]) / prev;
      A[i][c] = 0;
    }
    prev = A[r][c];
    ++r;
  }
  return r;
}

HomologyProfile reduced_homology(const OrderComplex& K) {
  // Augmented chain complex: C_{-1} = Q spanned by the empty chain.
  const int top = K.dimension();
  std::vector<long long> f{1};
  for (const auto& s : K.simplices) f.push_back(static_cast<long long>(s.size()));
  // rank_d[k + 1] = rank of the boundary C_k -> C_{k-1}, k >= 0
  std::vector<int> rank_d(top + 3, 0);
  for (int k = 0; k <= top; ++k) {
    const auto& cells = K.simplices[k];
    std::vector<std::vector<int>> B;
    if (k == 0) {
      B.assign(1, std::vector<int>(cells.size(), 1));
    } else {
      const auto& faces = K.simplices[k - 1];
      std::map<std::vector<int>, int> face_id;
      for (int i = 0; i < static_cast<int>(faces.size()); ++i) face_id[faces[i]] = i;
      B.assign(faces.size(), std::vector<int>(cells.size(), 0));
      for (int j = 0; j < static_cast<int>(cells.size()); ++j) {
        for (int drop = 0; drop <= k; ++drop) {
          std::vector<int> face;
          for (int t = 0; t <= k; ++t)
            if (t != drop) face.push_back(cells[j][t]);
          B[face_id.at(face)][j] = drop % 2 ? -1 : 1;
        }
      }
    }
    rank_d[k + 1] = exact_rank(B);
  }
  HomologyProfile h;
  for (int k = -1; k <= top; ++k) {
    long long b = f[k + 1] - rank_d[k + 1] - rank_d[k + 2];
    if (b != 0) h.reduced_betti[k] = b;
  }
  return h;
}

}  // namespace fixlat
