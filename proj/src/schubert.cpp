#include "clift/schubert.hpp"

#include <algorithm>
#include <sstream>

namespace clift {

void validate_cell(const CartanMatrix& c, const CellSpec& cell) {
  if (cell.type.series != c.type().series || cell.type.rank != c.type().rank)
    throw InputError("cell type does not match the Cartan matrix");
  validate_word(c, cell.word);
  if (!is_reduced(c, cell.word)) throw InputError("word is not reduced");
  if (cell.J.empty()) throw InputError("J must be nonempty");
  int prev = 0;
  for (int j : cell.J) {
    if (j <= prev) throw InputError("J must be sorted and distinct");
    if (j < 1 || j > c.rank()) throw InputError("J index out of range");
    prev = j;
  }
}

std::string MinorLabel::str() const {
  std::ostringstream os;
  os << "D(w" << i << ", ";
  for (int l : prefix) os << "s" << l << " ";
  os << "w" << i << ")";
  return os.str();
}

FrozenSplit classify_frozen(const Word& w) {
  Occurrences occ(w);
  FrozenSplit out;
  for (int k = 1; k <= w.length(); ++k) {
    if (occ.s(k).finite())
      out.mutable_pos.push_back(k);
    else
      out.frozen_pos.push_back(k);
  }
  return out;
}

ExtendedExchangeMatrix build_Bw(const CartanMatrix& c, const Word& w) {
  validate_word(c, w);
  if (!is_reduced(c, w)) throw InputError("word is not reduced");
  const int m = w.length();
  Occurrences occ(w);
  auto split = classify_frozen(w);

  ExtendedExchangeMatrix out;
  out.mutable_rows.reserve(split.mutable_pos.size());
  for (int k : split.mutable_pos) out.mutable_rows.push_back(k - 1);
  out.b.assign(m, std::vector<long long>(split.mutable_pos.size(), 0));

  for (size_t col = 0; col < split.mutable_pos.size(); ++col) {
    const int k = split.mutable_pos[col];
    for (int j = 1; j <= m; ++j) {
      long long e = 0;
      if (occ.p(k) == j)
        e = 1;
      else if (occ.s(k) == j)
        e = -1;
      else if (j < k && k < occ.s(j) && occ.s(j) < occ.s(k))
        e = c.a(w.at(j), w.at(k));
      else if (k < j && j < occ.s(k) && occ.s(k) < occ.s(j))
        e = -c.a(w.at(j), w.at(k));
      out.b[j - 1][col] = e;
    }
  }

  auto labels = variable_labels(c, w);
  out.row_labels.reserve(m);
  for (const auto& l : labels) out.row_labels.push_back(l.str());
  return out;
}

std::vector<MinorLabel> variable_labels(const CartanMatrix& c, const Word& w) {
  validate_word(c, w);
  if (!is_reduced(c, w)) throw InputError("word is not reduced");
  Occurrences occ(w);
  std::vector<MinorLabel> out;
  out.reserve(w.length());
  for (int k = 1; k <= w.length(); ++k) {
    MinorLabel l;
    l.i = w.at(k);
    l.prefix.assign(w.letters.begin(), w.letters.begin() + k);
    l.target = act(c, Word{l.prefix}, fundamental_weight(c.rank(), l.i));
    l.frozen = !occ.s(k).finite();
    out.push_back(std::move(l));
  }
  return out;
}

Seed schubert_seed(const CartanMatrix& c, const Word& w) {
  return formal_seed(build_Bw(c, w));
}

}  // namespace clift
