#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fixlat/errors.hpp"

namespace fixlat {

class FinitePoset {
 public:
  FinitePoset() = default;
  // relations: pairs (a, b) meaning a < b; need not be transitive or reduced.
  // Throws InvalidParameter on a cycle.
  FinitePoset(int n, const std::vector<std::pair<int, int>>& relations, std::vector<std::string> labels = {});

  int size() const { return n_; }
  bool leq(int a, int b) const { return a == b || lt_[a][b]; }
  bool less(int a, int b) const { return lt_[a][b]; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& up(int a) const { return up_[a]; }
  const std::vector<int>& down(int a) const { return down_[a]; }
  std::optional<int> bottom() const;
  std::optional<int> top() const;
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Optional integer attribute per node (codimension for lattices).
  std::vector<int> rank;

 private:
  int n_ = 0;
  std::vector<std::vector<bool>> lt_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<std::string> labels_;
};

struct OrderComplex {
  std::vector<int> vertices;                 // poset nodes
  std::vector<std::vector<std::vector<int>>> simplices;  // by dimension; each a chain of vertex indices
  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
  // f[k] = number of k-simplices.
  std::vector<long long> f_vector() const;
};

struct HomologyProfile {
  std::map<int, long long> reduced_betti;  // degree >= -1
  long long at(int d) const {
    auto it = reduced_betti.find(d);
    return it == reduced_betti.end() ? 0 : it->second;
  }
};

// Chains of the open interval (x, y). Throws NotComparable unless x < y.
OrderComplex order_complex(const FinitePoset& P, int x, int y);
// Chains on an arbitrary vertex set.
OrderComplex order_complex_on(const FinitePoset& P, const std::vector<int>& vertices);

// Exact reduced Betti numbers over Q via fraction-free elimination.
HomologyProfile reduced_homology(const OrderComplex& K);

// Reduced Euler characteristic -1 + sum (-1)^k f_k.
long long reduced_euler(const OrderComplex& K);

std::optional<int> is_bouquet(const FinitePoset& P);

long long mobius(const FinitePoset& P, int x, int y);

bool poset_isomorphic(const FinitePoset& P, const FinitePoset& Q);

// Exact rank of an integer matrix.
int exact_rank(const std::vector<std::vector<int>>& M);

}  // namespace fixlat
