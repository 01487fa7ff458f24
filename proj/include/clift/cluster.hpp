#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clift/cartan.hpp"
#include "clift/laurent.hpp"
#include "clift/types.hpp"

namespace clift {

// Extended exchange matrix: one row per cluster variable (mutable rows
// first or interleaved, in any fixed order), one column per mutable
// variable.  mutable_rows[c] is the 0-based row index paired with column c,
// strictly increasing.  Function arguments named k are 1-based row
// positions throughout; storage is 0-based.
struct ExtendedExchangeMatrix {
  std::vector<std::vector<long long>> b;  // rows x cols
  std::vector<std::string> row_labels;    // size rows, display only
  std::vector<int> mutable_rows;          // size cols, 0-based row indices

  int rows() const { return static_cast<int>(b.size()); }
  int cols() const { return static_cast<int>(mutable_rows.size()); }
  long long at(int r, int c) const { return b.at(r).at(c); }
  bool row_is_mutable(int r) const;          // r 0-based
  std::optional<int> col_of(int k) const;    // k 1-based position
  // The n x n block on the mutable rows, in column order.
  std::vector<std::vector<long long>> principal_block() const;
  // 1-based positions of the mutable rows, ascending.
  std::vector<int> mutable_positions() const;
  // 1-based positions of the frozen rows, ascending.
  std::vector<int> frozen_positions() const;

  friend bool operator==(const ExtendedExchangeMatrix& a,
                         const ExtendedExchangeMatrix& b) = default;
};

void validate_matrix(const ExtendedExchangeMatrix& m);

// Positive diagonal witness making the block skew-symmetric, if any.
std::optional<std::vector<long long>> is_skew_symmetrizable(
    const std::vector<std::vector<long long>>& block);

// Matrix mutation at the mutable position k: entries in row or column of k
// flip sign, every other entry picks up (|b_ik| b_kj + b_ik |b_kj|) / 2.
ExtendedExchangeMatrix mutate_matrix(const ExtendedExchangeMatrix& m, int k);

// Seed: an extended exchange matrix plus one cluster variable per row.
struct Seed {
  ExtendedExchangeMatrix matrix;
  std::vector<LaurentPoly> vars;
};

void validate_seed(const Seed& s);

// Seed whose variables are fresh symbols x1..xm over a shared table.
Seed formal_seed(ExtendedExchangeMatrix m);
bool is_formal(const Seed& s);

// Seed mutation at position k: the matrix mutates and x_k is replaced by
// (prod_{b_ik > 0} x_i^{b_ik} + prod_{b_ik < 0} x_i^{-b_ik}) / x_k.
// Throws NotDivisibleError when the division does not come out even.
Seed mutate_seed(const Seed& s, int k);

// Left-to-right composition of mutations; errors are annotated with the
// 1-based step at which they occurred.
Seed mutate_sequence(const Seed& s, const std::vector<int>& ks);

// Per-variable degrees in fundamental-weight coordinates.
using DegreeAssignment = std::vector<Weight>;

// For each column c, sum_i b[i][c] * degrees[i]; the all-zero vector means
// both exchange monomials carry equal degree everywhere.
std::vector<Weight> column_degree_defect(const ExtendedExchangeMatrix& m,
                                         const DegreeAssignment& degrees);

// Degree bookkeeping across a mutation at position k: the new variable
// gets -deg(x_k) + sum_{b_ik > 0} b_ik * deg(x_i).
DegreeAssignment propagate_degrees(const ExtendedExchangeMatrix& m,
                                   const DegreeAssignment& degrees, int k);

// Walks are sequences of 1-based mutable positions.
std::vector<std::vector<int>> all_walks(const std::vector<int>& positions, int depth);
std::vector<std::vector<int>> random_walks(const std::vector<int>& positions,
                                           int count, int depth,
                                           unsigned long long rng_seed);

// Checks the Laurent property of a formal seed along each walk: after
// every step, every cluster variable must be a Laurent polynomial whose
// denominators involve only the mutable initial variables.  The initial
// seed must be formal.
Report check_laurent(const Seed& s, const std::vector<std::vector<int>>& walks,
                     Exec exec = Exec::Serial);

// Graph of seeds reachable by mutation, with seeds identified when their
// sets of mutable variables coincide.  Expansion is breadth-first and
// deterministic; nodes beyond max_seeds are not added and complete is set
// to false.  complete = true certifies closure: every mutation of every
// node lands inside the returned set.
struct ExchangeGraph {
  struct Edge {
    int from;  // node index
    int k;     // 1-based mutation position
    int to;    // node index
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::vector<Seed> nodes;
  std::vector<Edge> edges;
  bool complete = false;
};

ExchangeGraph enumerate_exchange_graph(const Seed& s, int max_seeds,
                                       Exec exec = Exec::Serial);

}  // namespace clift
