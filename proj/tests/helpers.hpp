#pragma once

// Shared generators and path helpers for the test binaries.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "clift/cluster.hpp"
#include "clift/laurent.hpp"
#include "clift/weyl.hpp"

namespace clift::testing {

inline std::string source_path(const std::string& rel) {
  return std::string(CLIFT_SOURCE_DIR) + "/" + rel;
}

// Random extended exchange matrix with a skew-symmetrizable principal
// block: block = Z * diag(d) with Z skew-symmetric over {-1,0,1} and
// d in {1,2,3}, so entries stay within [-3,3] and diag(d) itself is a
// symmetrizing witness.  Frozen rows are unconstrained.
inline ExtendedExchangeMatrix random_matrix(std::mt19937_64& rng, int max_rows = 8) {
  const int m = 1 + static_cast<int>(rng() % max_rows);
  const int n = 1 + static_cast<int>(rng() % m);
  std::vector<int> rows(m);
  for (int i = 0; i < m; ++i) rows[i] = i;
  for (int i = m - 1; i > 0; --i) std::swap(rows[i], rows[rng() % (i + 1)]);
  std::vector<int> mut(rows.begin(), rows.begin() + n);
  std::sort(mut.begin(), mut.end());

  std::vector<long long> d(n);
  for (auto& v : d) v = 1 + static_cast<long long>(rng() % 3);
  std::vector<std::vector<long long>> z(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      z[i][j] = static_cast<long long>(rng() % 3) - 1;
      z[j][i] = -z[i][j];
    }

  ExtendedExchangeMatrix out;
  out.b.assign(m, std::vector<long long>(n, 0));
  out.mutable_rows = mut;
  for (int r = 0; r < m; ++r) {
    auto it = std::find(mut.begin(), mut.end(), r);
    if (it != mut.end()) {
      const int i = static_cast<int>(it - mut.begin());
      for (int c = 0; c < n; ++c) out.b[r][c] = z[i][c] * d[c];
    } else {
      for (int c = 0; c < n; ++c)
        out.b[r][c] = static_cast<long long>(rng() % 7) - 3;
    }
  }
  return out;
}

// Random polynomial over the given table: 1..4 terms, exponents in
// [lo, hi], nonzero small integer coefficients.  Never the zero polynomial.
inline LaurentPoly random_poly(std::mt19937_64& rng, const VarTableRef& t,
                               int lo = 0, int hi = 2) {
  const int nvars = t->size();
  LaurentPoly f(t);
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int s = 0; s < terms; ++s) {
    std::vector<int> e(nvars);
    for (auto& x : e) x = lo + static_cast<int>(rng() % (hi - lo + 1));
    long long c = static_cast<long long>(rng() % 7) - 3;
    if (c == 0) c = 1;
    f += LaurentPoly::monomial(t, e, static_cast<long>(c));
  }
  if (f.zero()) f += LaurentPoly::constant(t, 1);
  return f;
}

// Random reduced word: rejection-sampled letter strings.
inline Word random_reduced_word(std::mt19937_64& rng, const CartanMatrix& c,
                                int max_len) {
  for (;;) {
    const int len = 1 + static_cast<int>(rng() % max_len);
    Word w;
    for (int i = 0; i < len; ++i)
      w.letters.push_back(1 + static_cast<int>(rng() % c.rank()));
    if (is_reduced(c, w)) return w;
  }
}

}  // namespace clift::testing
