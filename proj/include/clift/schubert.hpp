#pragma once

#include <string>
#include <vector>

#include "clift/cartan.hpp"
#include "clift/cluster.hpp"
#include "clift/weyl.hpp"

namespace clift {

// A Schubert cell presented by a reduced word, together with the set J of
// fundamental weights the ambient flag variety keeps (1-based, sorted,
// nonempty).
struct CellSpec {
  DynkinType type;
  Word word;
  std::vector<int> J;
};

void validate_cell(const CartanMatrix& c, const CellSpec& cell);

// Label of a cluster variable on the cell: the generalized minor with
// highest weight w_i twisted by a prefix of the word.
struct MinorLabel {
  int i;                    // fundamental weight index
  std::vector<int> prefix;  // letters i_1..i_k of the word
  Weight target;            // the prefix acting on w_i
  bool frozen;

  std::string str() const;  // "D(w2, s3 s2 w2)"
};

// 1-based word positions split by whether the letter reappears later.
struct FrozenSplit {
  std::vector<int> mutable_pos;
  std::vector<int> frozen_pos;
};
FrozenSplit classify_frozen(const Word& w);

// Exchange matrix attached to a reduced word: rows indexed by positions
// 1..m, columns by the positions whose letter reappears later.  With p(k)
// and s(k) the previous/next occurrence of the letter at k, the entry at
// (j, k) is 1 if j = p(k), -1 if j = s(k), a(i_j, i_k) if
// j < k < s(j) < s(k), -a(i_j, i_k) if k < j < s(k) < s(j), else 0.
// The word must be reduced.
ExtendedExchangeMatrix build_Bw(const CartanMatrix& c, const Word& w);

// One label per word position, in word order.
std::vector<MinorLabel> variable_labels(const CartanMatrix& c, const Word& w);

// Formal seed on the cell: build_Bw with fresh symbols x1..xm and minor
// labels on the rows.
Seed schubert_seed(const CartanMatrix& c, const Word& w);

}  // namespace clift
