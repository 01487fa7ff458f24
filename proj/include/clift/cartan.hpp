#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clift/types.hpp"

namespace clift {

// Finite Dynkin series.  Valid ranks: A n>=1, B n>=2, C n>=2, D n>=3,
// E n in {6,7,8}, F n=4, G n=2.
enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
  Series series;
  int rank;

  std::string str() const;
};

bool valid_rank(Series s, int rank);

// Throws InputError on an unknown series letter or out-of-range rank.
DynkinType dynkin(char series, int rank);

// Weight in fundamental-weight coordinates: v[i-1] is the coefficient of
// the i-th fundamental weight.
using Weight = std::vector<long long>;

Weight fundamental_weight(int rank, int i);
std::string weight_str(const Weight& v);

// Generalized Cartan matrix of a finite type, rows and columns indexed by
// the simple roots.  Orientation of the double/triple bonds: the arrow
// points from long to short, and in B_n the short root is the last one,
// so a(n, n-1) = -2.  C_n is the transpose of B_n, F_4 has a(3, 2) = -2,
// and G_2 has a(2, 1) = -3.  Nodes in D_n fork at n-2; E-series nodes are
// numbered with node 2 hanging off node 4 of the chain 1-3-4-5-...-n.
class CartanMatrix {
 public:
  CartanMatrix(DynkinType t, std::vector<std::vector<int>> entries);

  const DynkinType& type() const { return type_; }
  int rank() const { return static_cast<int>(m_.size()); }
  // Entry a(i, j), 1-based.
  int a(int i, int j) const { return m_.at(i - 1).at(j - 1); }
  const std::vector<std::vector<int>>& entries() const { return m_; }

 private:
  DynkinType type_;
  std::vector<std::vector<int>> m_;
};

CartanMatrix cartan_matrix(DynkinType t);

// Minimal positive integer diagonal d with d_i a(i,j) = d_j a(j,i).
std::vector<long long> symmetrizer(const CartanMatrix& c);

// Positive integer diagonal making D*M symmetric (eps = +1) or
// skew-symmetric (eps = -1), minimal per connected component, or nullopt
// when none exists.  M must be square.
std::optional<std::vector<long long>> symmetrizing_diagonal(
    const std::vector<std::vector<long long>>& m, int eps);

// Simple reflection s_i acting on a weight in fundamental-weight
// coordinates: lambda - lambda_i * alpha_i, where alpha_i is column i of
// the Cartan matrix.  i is 1-based.
Weight reflect(const CartanMatrix& c, int i, Weight lambda);

}  // namespace clift
