#include "fixlat/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace fixlat {

FinitePoset::FinitePoset(int n, const std::vector<std::pair<int, int>>& relations, std::vector<std::string> labels)
    : n_(n), lt_(n, std::vector<bool>(n, false)), up_(n), down_(n), labels_(std::move(labels)) {
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidParameter("poset relation refers to a missing node");
    lt_[a][b] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (lt_[i][k])
        for (int j = 0; j < n; ++j)
          if (lt_[k][j]) lt_[i][j] = true;
  for (int i = 0; i < n; ++i)
    if (lt_[i][i]) throw InvalidParameter("poset relation has a cycle");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!lt_[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c) cover = !(lt_[a][c] && lt_[c][b]);
      if (cover) {
        covers_.push_back({a, b});
        up_[a].push_back(b);
        down_[b].push_back(a);
      }
    }
  if (labels_.size() < static_cast<std::size_t>(n)) {
    for (int i = static_cast<int>(labels_.size()); i < n; ++i) labels_.push_back(std::to_string(i));
  }
}

std::optional<int> FinitePoset::bottom() const {
  for (int a = 0; a < n_; ++a) {
    bool ok = true;
    for (int b = 0; b < n_ && ok; ++b) ok = leq(a, b);
    if (ok) return a;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::top() const {
  for (int a = 0; a < n_; ++a) {
    bool ok = true;
    for (int b = 0; b < n_ && ok; ++b) ok = leq(b, a);
    if (ok) return a;
  }
  return std::nullopt;
}

std::vector<long long> OrderComplex::f_vector() const {
  std::vector<long long> f;
  for (const auto& s : simplices) f.push_back(static_cast<long long>(s.size()));
  return f;
}

OrderComplex order_complex_on(const FinitePoset& P, const std::vector<int>& verts) {
  OrderComplex K;
  K.vertices = verts;
  // Linear extension: strictly smaller elements have strictly smaller down-sets.
  std::vector<int> downsize(P.size(), 0);
  for (int v : verts)
    for (int u = 0; u < P.size(); ++u) downsize[v] += P.less(u, v);
  std::stable_sort(K.vertices.begin(), K.vertices.end(), [&](int a, int b) { return downsize[a] < downsize[b]; });
  const int m = static_cast<int>(K.vertices.size());
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int last) {
    const std::size_t d = chain.size() - 1;
    if (K.simplices.size() <= d) K.simplices.resize(d + 1);
    K.simplices[d].push_back(chain);
    for (int j = last + 1; j < m; ++j) {
      if (!P.less(K.vertices[last], K.vertices[j])) continue;
      chain.push_back(j);
      extend(j);
      chain.pop_back();
    }
  };
  for (int i = 0; i < m; ++i) {
    chain = {i};
    extend(i);
  }
  return K;
}

OrderComplex order_complex(const FinitePoset& P, int x, int y) {
  if (!P.less(x, y)) throw NotComparable("order_complex needs x < y");
  std::vector<int> verts;
  for (int z = 0; z < P.size(); ++z)
    if (P.less(x, z) && P.less(z, y)) verts.push_back(z);
  return order_complex_on(P, verts);
}

long long reduced_euler(const OrderComplex& K) {
  long long chi = -1;
  auto f = K.f_vector();
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 ? -1 : 1) * f[k];
  return chi;
}

std::optional<int> is_bouquet(const FinitePoset& P) {
  auto b = P.bottom();
  if (!b) return std::nullopt;
  const int n = P.size();
  if (n == 2) return 1;
  auto t = P.top();
  if (!t || *t == *b) return std::nullopt;
  if (n == 3) return 1;
  // n - 2 pairwise incomparable middle elements
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (a != *b && a != *t && c != *b && c != *t && P.less(a, c)) return std::nullopt;
  return n - 2;
}

long long mobius(const FinitePoset& P, int x, int y) {
  if (!P.leq(x, y)) throw NotComparable("mobius needs x <= y");
  std::vector<int> up;
  for (int z = 0; z < P.size(); ++z)
    if (P.leq(x, z) && P.leq(z, y)) up.push_back(z);
  std::vector<int> downsize(P.size(), 0);
  for (int z : up)
    for (int u = 0; u < P.size(); ++u) downsize[z] += P.less(u, z);
  std::stable_sort(up.begin(), up.end(), [&](int a, int b) { return downsize[a] < downsize[b]; });
  std::map<int, long long> mu;
  for (int z : up) {
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    long long s = 0;
    for (auto& [w, v] : mu)
      if (P.less(w, z)) s += v;
    mu[z] = -s;
  }
  return mu[y];
}

namespace {

std::vector<int> refine_colours(const FinitePoset& P, std::map<std::vector<long long>, int>& dict,
                                const std::vector<int>& base) {
  const int n = P.size();
  std::vector<int> col(n);
  for (int a = 0; a < n; ++a) {
    std::vector<long long> sig{base[a]};
    std::vector<long long> u, d;
    for (int b : P.up(a)) u.push_back(base[b]);
    for (int b : P.down(a)) d.push_back(base[b]);
    std::sort(u.begin(), u.end());
    std::sort(d.begin(), d.end());
    sig.push_back(-1);
    sig.insert(sig.end(), u.begin(), u.end());
    sig.push_back(-2);
    sig.insert(sig.end(), d.begin(), d.end());
    auto it = dict.find(sig);
    if (it == dict.end()) it = dict.emplace(sig, static_cast<int>(dict.size())).first;
    col[a] = it->second;
  }
  return col;
}

std::vector<int> initial_colours(const FinitePoset& P, std::map<std::vector<long long>, int>& dict) {
  std::vector<int> col(P.size());
  for (int a = 0; a < P.size(); ++a) {
    long long below = 0, above = 0;
    for (int b = 0; b < P.size(); ++b) {
      below += P.less(b, a);
      above += P.less(a, b);
    }
    std::vector<long long> sig{-3, below, above, static_cast<long long>(P.down(a).size()),
                               static_cast<long long>(P.up(a).size())};
    auto it = dict.find(sig);
    if (it == dict.end()) it = dict.emplace(sig, static_cast<int>(dict.size())).first;
    col[a] = it->second;
  }
  return col;
}

std::vector<int> histogram(const std::vector<int>& c) {
  std::vector<int> h = c;
  std::sort(h.begin(), h.end());
  return h;
}

}  // namespace

bool poset_isomorphic(const FinitePoset& P, const FinitePoset& Q) {
  constexpr int kLimit = 60;
  if (P.size() > kLimit || Q.size() > kLimit) throw TooLarge("poset isomorphism is limited to 60 nodes");
  if (P.size() != Q.size() || P.covers().size() != Q.covers().size()) return false;
  const int n = P.size();
  std::map<std::vector<long long>, int> dict;
  auto cp = initial_colours(P, dict), cq = initial_colours(Q, dict);
  for (int round = 0; round < n; ++round) {
    if (histogram(cp) != histogram(cq)) return false;
    std::map<std::vector<long long>, int> next;
    auto np = refine_colours(P, next, cp), nq = refine_colours(Q, next, cq);
    std::set<int> before(cp.begin(), cp.end()), after(np.begin(), np.end());
    cp = np;
    cq = nq;
    if (after.size() == before.size()) break;
  }
  if (histogram(cp) != histogram(cq)) return false;

  // Assign P nodes in an order that keeps each new node adjacent to earlier ones.
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  while (static_cast<int>(order.size()) < n) {
    int best = -1, best_links = -1;
    for (int a = 0; a < n; ++a) {
      if (placed[a]) continue;
      int links = 0;
      for (int b : order) links += P.less(a, b) || P.less(b, a);
      if (links > best_links) {
        best = a;
        best_links = links;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> solve = [&](std::size_t k) {
    if (k == order.size()) return true;
    int p = order[k];
    for (int q = 0; q < n; ++q) {
      if (used[q] || cq[q] != cp[p]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        int p2 = order[i], q2 = map[p2];
        ok = P.less(p, p2) == Q.less(q, q2) && P.less(p2, p) == Q.less(q2, q);
      }
      if (!ok) continue;
      map[p] = q;
      used[q] = true;
      if (solve(k + 1)) return true;
      used[q] = false;
      map[p] = -1;
    }
    return false;
  };
  return solve(0);
}

}  // namespace fixlat
