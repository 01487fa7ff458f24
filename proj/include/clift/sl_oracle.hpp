#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clift/cluster.hpp"
#include "clift/lift.hpp"
#include "clift/schubert.hpp"

namespace clift {

// Concrete realization of type A_{n-1} cells inside SL_n, used as an
// independent oracle for the combinatorial constructions.  Points of the
// unipotent radical carry coordinates n_ab (a < b), generic group points
// carry g_ab, and products of root subgroups carry t_1..t_m.

struct SymbolicMatrix {
  int n = 0;
  std::vector<std::vector<LaurentPoly>> e;  // n x n

  const LaurentPoly& at(int a, int b) const { return e.at(a - 1).at(b - 1); }
};

// Upper unitriangular matrix with fresh symbols n_ab above the diagonal.
SymbolicMatrix unitriangular_point(int n);
// Fully generic matrix with symbols g_ab.
SymbolicMatrix group_point(int n);
// One-parameter points multiplied along the word, last letter leftmost:
// (I + t_m E_{i_m, i_m+1}) ... (I + t_1 E_{i_1, i_1+1}).  This order puts
// the flag of the result inside the word's cell, so the prefix minors below
// are nonvanishing coordinates on it; the forward product lands in the
// inverse word's cell instead and kills some of them.
SymbolicMatrix lusztig_point(int n, const Word& w);

// The word as a permutation of 1..n, letters acting as adjacent
// transpositions, rightmost first.  result[a-1] = w(a).
std::vector<int> word_permutation(int n, const Word& w);

// Minor of x on rows u({1..i}) and columns v({1..i}), both sorted
// ascending.
LaurentPoly generalized_minor(const SymbolicMatrix& x, const Word& u,
                              const Word& v, int i);

// --- exact numeric linear algebra, for cross-checking the minors ---

using Mat = std::vector<std::vector<Rat>>;

Mat eval_matrix(const SymbolicMatrix& x, const std::map<std::string, Rat>& values);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_inverse(const Mat& a);  // throws InputError when singular

// x = lower * diag * upper with unitriangular outer factors; defined only
// when every leading principal minor is nonzero.
struct GaussFactors {
  Mat lower, diag, upper;
};
std::optional<GaussFactors> gauss_decompose(const Mat& x);

// Product of the first i diagonal entries of the middle factor; equals the
// leading principal i x i minor.
Rat principal_part(const GaussFactors& f, int i);

// Representative of a simple reflection: the identity with the 2x2 block
// ((0,-1),(1,0)) at rows and columns (i, i+1); words multiply these left
// to right.
Mat reflection_representative(int n, int i);
Mat word_representative(int n, const Word& w);

// --- degree functions on the unipotent coordinate ring ---

// Derivation of left translation by the j-th root subgroup:
// e_j(f) = df/dn_{j,j+1} + sum_{b > j+1} n_{j+1,b} * df/dn_{j,b}.
LaurentPoly e_derivation(int n, int j, const LaurentPoly& f);

// Largest s with e_j^s(f) nonzero; f must be nonzero.
int a_degree(int n, int j, const LaurentPoly& f);

// Weight sum_{j in J} a_j(f) * w_j, in fundamental-weight coordinates of
// rank n-1.
Weight lambda_of(int n, const LaurentPoly& f, const std::vector<int>& J);

// --- realized seeds and identity checks ---

enum class CellCoords { Unitriangular, Lusztig };

// The cell's seed with every variable realized as a polynomial: generalized
// minors in n_ab coordinates (word must be the longest one, whose cell the
// n_ab parametrize), or minors evaluated on the Lusztig point in t
// coordinates (any reduced word).  Type A only.
Seed realize_seed(const CartanMatrix& c, const CellSpec& cell,
                  CellCoords coords = CellCoords::Unitriangular);

// Degrees of the realized variables, via a_degree.
DegreeAssignment realized_degrees(const CartanMatrix& c, const CellSpec& cell);

// Lift whose variables are the same minors taken on a generic group point,
// with the principal minors as the appended frozen variables and the
// projection g_ab -> (n_ab, 1, 0).  Word must be the longest one.
LiftedSeed minor_lifted_seed(const CartanMatrix& c, const CellSpec& cell,
                             LiftConvention conv);

// Lift over torus-extended coordinates: variable k becomes
// h^{deg(x_k)} * x_k and the appended variable for j is the torus
// coordinate h_j itself.
LiftedSeed torus_lifted_seed(const Seed& base, const DegreeAssignment& degrees,
                             const std::vector<int>& J, LiftConvention conv);

// Ring the exchange quotients must land in.  Polynomial coordinates
// (n_ab, g_ab) demand polynomial quotients; torus coordinates (Lusztig t)
// only demand Laurent ones, since the cell is a torus chart there.
enum class Regularity { Polynomial, Laurent };

// For every column of a realized seed, the exchange sum M + L must be
// exactly divisible by the leaving variable and the quotient must be
// regular in the sense requested.
Report verify_exchange_identities(const Seed& s, Exec exec = Exec::Serial,
                                  Regularity reg = Regularity::Polynomial);

// Same divisibility check on a realized lifted seed (always with polynomial
// quotients, the ambient being the matrix coordinate ring), plus: the
// projected quotient must equal the mutated variable of the projected base
// seed.
Report verify_lifted_identities(const LiftedSeed& l, Exec exec = Exec::Serial);

}  // namespace clift
