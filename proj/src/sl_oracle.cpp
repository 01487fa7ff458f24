#include "clift/sl_oracle.hpp"

#include <algorithm>
#include <sstream>

namespace clift {

namespace {

std::string nvar(int a, int b) {
  return "n" + std::to_string(a) + std::to_string(b);
}
std::string gvar(int a, int b) {
  return "g" + std::to_string(a) + std::to_string(b);
}

void require_sl(int n) {
  if (n < 2 || n > 9) throw InputError("SL oracle supports 2 <= n <= 9");
}

VarTableRef cell_table(int n) {
  std::vector<std::string> names;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) names.push_back(nvar(a, b));
  return VarTable::make(std::move(names));
}

SymbolicMatrix sym_identity(int n, const VarTableRef& t) {
  SymbolicMatrix x;
  x.n = n;
  x.e.assign(n, std::vector<LaurentPoly>(n, LaurentPoly(t)));
  for (int a = 0; a < n; ++a) x.e[a][a] = LaurentPoly::constant(t, 1);
  return x;
}

SymbolicMatrix sym_mul(const SymbolicMatrix& x, const SymbolicMatrix& y) {
  SymbolicMatrix out;
  out.n = x.n;
  out.e.assign(x.n, std::vector<LaurentPoly>(x.n, LaurentPoly()));
  for (int a = 0; a < x.n; ++a)
    for (int b = 0; b < x.n; ++b) {
      LaurentPoly s;
      for (int c = 0; c < x.n; ++c) s += x.e[a][c] * y.e[c][b];
      out.e[a][b] = std::move(s);
    }
  return out;
}

LaurentPoly sym_det(std::vector<std::vector<LaurentPoly>> m) {
  const int k = static_cast<int>(m.size());
  if (k == 0) return LaurentPoly::constant(LaurentPoly::empty_table(), 1);
  if (k == 1) return m[0][0];
  LaurentPoly out;
  for (int r = 0; r < k; ++r) {
    if (m[r][0].zero()) continue;
    std::vector<std::vector<LaurentPoly>> sub;
    sub.reserve(k - 1);
    for (int i = 0; i < k; ++i) {
      if (i == r) continue;
      sub.emplace_back(m[i].begin() + 1, m[i].end());
    }
    LaurentPoly cof = m[r][0] * sym_det(std::move(sub));
    if (r % 2)
      out -= cof;
    else
      out += cof;
  }
  return out;
}

}  // namespace

SymbolicMatrix unitriangular_point(int n) {
  require_sl(n);
  auto t = cell_table(n);
  auto x = sym_identity(n, t);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) x.e[a - 1][b - 1] = LaurentPoly::var(t, nvar(a, b));
  return x;
}

SymbolicMatrix group_point(int n) {
  require_sl(n);
  std::vector<std::string> names;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) names.push_back(gvar(a, b));
  auto t = VarTable::make(std::move(names));
  SymbolicMatrix x;
  x.n = n;
  x.e.assign(n, std::vector<LaurentPoly>(n, LaurentPoly(t)));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) x.e[a - 1][b - 1] = LaurentPoly::var(t, gvar(a, b));
  return x;
}

SymbolicMatrix lusztig_point(int n, const Word& w) {
  require_sl(n);
  const int m = w.length();
  std::vector<std::string> names;
  for (int k = 1; k <= m; ++k) names.push_back("t" + std::to_string(k));
  auto t = VarTable::make(std::move(names));
  auto x = sym_identity(n, t);
  for (int k = m; k >= 1; --k) {
    const int i = w.at(k);
    if (i < 1 || i >= n) throw InputError("letter out of range for SL" + std::to_string(n));
    auto factor = sym_identity(n, t);
    factor.e[i - 1][i] = LaurentPoly::var(t, "t" + std::to_string(k));
    x = sym_mul(x, factor);
  }
  return x;
}

std::vector<int> word_permutation(int n, const Word& w) {
  std::vector<int> out(n);
  for (int a = 1; a <= n; ++a) {
    int x = a;
    for (int k = w.length(); k >= 1; --k) {
      const int i = w.at(k);
      if (i < 1 || i >= n)
        throw InputError("letter out of range for SL" + std::to_string(n));
      if (x == i)
        x = i + 1;
      else if (x == i + 1)
        x = i;
    }
    out[a - 1] = x;
  }
  return out;
}

LaurentPoly generalized_minor(const SymbolicMatrix& x, const Word& u, const Word& v,
                              int i) {
  if (i < 1 || i >= x.n) throw InputError("minor weight index out of range");
  auto pu = word_permutation(x.n, u);
  auto pv = word_permutation(x.n, v);
  std::vector<int> rows, cols;
  for (int a = 1; a <= i; ++a) {
    rows.push_back(pu[a - 1]);
    cols.push_back(pv[a - 1]);
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  std::vector<std::vector<LaurentPoly>> sub(i, std::vector<LaurentPoly>(i));
  for (int a = 0; a < i; ++a)
    for (int b = 0; b < i; ++b) sub[a][b] = x.at(rows[a], cols[b]);
  return sym_det(std::move(sub));
}

Mat eval_matrix(const SymbolicMatrix& x, const std::map<std::string, Rat>& values) {
  Mat out(x.n, std::vector<Rat>(x.n));
  for (int a = 0; a < x.n; ++a)
    for (int b = 0; b < x.n; ++b) out[a][b] = eval(x.e[a][b], values);
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat out(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Mat mat_inverse(const Mat& a) {
  const int n = static_cast<int>(a.size());
  Mat work = a;
  Mat inv(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (work[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw InputError("matrix is singular");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    Rat d = work[col][col];
    for (int j = 0; j < n; ++j) {
      work[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work[r][col] == 0) continue;
      Rat f = work[r][col];
      for (int j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<GaussFactors> gauss_decompose(const Mat& x) {
  const int n = static_cast<int>(x.size());
  Mat a = x;
  GaussFactors f;
  f.lower.assign(n, std::vector<Rat>(n, 0));
  f.diag.assign(n, std::vector<Rat>(n, 0));
  f.upper.assign(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) {
    f.lower[i][i] = 1;
    f.upper[i][i] = 1;
  }
  for (int k = 0; k < n; ++k) {
    Rat d = a[k][k];
    if (d == 0) return std::nullopt;
    f.diag[k][k] = d;
    for (int i = k + 1; i < n; ++i) f.lower[i][k] = a[i][k] / d;
    for (int j = k + 1; j < n; ++j) f.upper[k][j] = a[k][j] / d;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] -= a[i][k] * a[k][j] / d;
  }
  return f;
}

Rat principal_part(const GaussFactors& f, int i) {
  Rat out = 1;
  for (int k = 0; k < i; ++k) out *= f.diag[k][k];
  return out;
}

Mat reflection_representative(int n, int i) {
  if (i < 1 || i >= n) throw InputError("reflection index out of range");
  Mat out(n, std::vector<Rat>(n, 0));
  for (int a = 0; a < n; ++a) out[a][a] = 1;
  out[i - 1][i - 1] = 0;
  out[i][i] = 0;
  out[i - 1][i] = -1;
  out[i][i - 1] = 1;
  return out;
}

Mat word_representative(int n, const Word& w) {
  Mat out(n, std::vector<Rat>(n, 0));
  for (int a = 0; a < n; ++a) out[a][a] = 1;
  for (int k = 1; k <= w.length(); ++k)
    out = mat_mul(out, reflection_representative(n, w.at(k)));
  return out;
}

namespace {

LaurentPoly d_dvar(const LaurentPoly& f, const std::string& name) {
  int v = f.table()->index_of(name);
  LaurentPoly out(f.table());
  if (v < 0) return out;
  for (const auto& [e, c] : f.terms()) {
    if (e[v] == 0) continue;
    auto ne = e;
    ne[v] -= 1;
    out += LaurentPoly::monomial(f.table(), std::move(ne), c * e[v]);
  }
  return out;
}

}  // namespace

LaurentPoly e_derivation(int n, int j, const LaurentPoly& f) {
  require_sl(n);
  if (j < 1 || j >= n) throw InputError("derivation index out of range");
  LaurentPoly out = d_dvar(f, nvar(j, j + 1));
  auto t = cell_table(n);
  for (int b = j + 2; b <= n; ++b)
    out += LaurentPoly::var(t, nvar(j + 1, b)) * d_dvar(f, nvar(j, b));
  return out;
}

int a_degree(int n, int j, const LaurentPoly& f) {
  if (f.zero()) throw InputError("degree of the zero function is undefined");
  int s = 0;
  LaurentPoly g = e_derivation(n, j, f);
  while (!g.zero()) {
    ++s;
    g = e_derivation(n, j, g);
  }
  return s;
}

Weight lambda_of(int n, const LaurentPoly& f, const std::vector<int>& J) {
  require_sl(n);
  Weight out(n - 1, 0);
  for (int j : J) {
    if (j < 1 || j >= n) throw InputError("J index out of range");
    out[j - 1] = a_degree(n, j, f);
  }
  return out;
}

namespace {

bool is_longest(const CartanMatrix& c, const Word& w) {
  return w.length() == longest_word(c).length() && is_reduced(c, w);
}

}  // namespace

Seed realize_seed(const CartanMatrix& c, const CellSpec& cell, CellCoords coords) {
  if (c.type().series != Series::A)
    throw InputError("realization is implemented for series A only");
  validate_cell(c, cell);
  const int n = c.rank() + 1;
  require_sl(n);

  SymbolicMatrix point;
  if (coords == CellCoords::Unitriangular) {
    if (!is_longest(c, cell.word))
      throw InputError(
          "unitriangular coordinates parametrize the longest word's cell only");
    point = unitriangular_point(n);
  } else {
    point = lusztig_point(n, cell.word);
  }

  Seed s;
  s.matrix = build_Bw(c, cell.word);
  const Word e{};
  auto labels = variable_labels(c, cell.word);
  s.vars.reserve(labels.size());
  for (size_t k = 0; k < labels.size(); ++k) {
    s.vars.push_back(generalized_minor(point, e, Word{labels[k].prefix}, labels[k].i));
    if (s.vars.back().zero())
      throw InputError("realized variable " + std::to_string(k + 1) +
                       " vanishes identically; the point does not lie in the cell");
  }
  return s;
}

DegreeAssignment realized_degrees(const CartanMatrix& c, const CellSpec& cell) {
  Seed s = realize_seed(c, cell, CellCoords::Unitriangular);
  const int n = c.rank() + 1;
  DegreeAssignment out;
  out.reserve(s.vars.size());
  for (const auto& v : s.vars) out.push_back(lambda_of(n, v, cell.J));
  return out;
}

LiftedSeed minor_lifted_seed(const CartanMatrix& c, const CellSpec& cell,
                             LiftConvention conv) {
  Seed base = realize_seed(c, cell, CellCoords::Unitriangular);
  DegreeAssignment degrees = realized_degrees(c, cell);
  const int n = c.rank() + 1;

  auto g = group_point(n);
  const Word e{};
  auto labels = variable_labels(c, cell.word);
  std::vector<LaurentPoly> lifted;
  lifted.reserve(labels.size());
  for (const auto& l : labels)
    lifted.push_back(generalized_minor(g, e, Word{l.prefix}, l.i));
  std::vector<LaurentPoly> deltas;
  deltas.reserve(cell.J.size());
  for (int j : cell.J) deltas.push_back(generalized_minor(g, e, e, j));

  auto cell_t = cell_table(n);
  std::map<std::string, LaurentPoly> projection;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a < b)
        projection.emplace(gvar(a, b), LaurentPoly::var(cell_t, nvar(a, b)));
      else if (a == b)
        projection.emplace(gvar(a, b),
                           LaurentPoly::constant(LaurentPoly::empty_table(), 1));
      else
        projection.emplace(gvar(a, b),
                           LaurentPoly::constant(LaurentPoly::empty_table(), 0));
    }
  return lifted_seed_from(base, degrees, cell.J, conv, std::move(lifted),
                          std::move(deltas), std::move(projection));
}

LiftedSeed torus_lifted_seed(const Seed& base, const DegreeAssignment& degrees,
                             const std::vector<int>& J, LiftConvention conv) {
  validate_seed(base);
  if (static_cast<int>(degrees.size()) != base.matrix.rows())
    throw InputError("degree count mismatch");
  const int rank = degrees.empty() ? 0 : static_cast<int>(degrees[0].size());
  std::vector<std::string> hnames;
  for (int j = 1; j <= rank; ++j) hnames.push_back("h" + std::to_string(j));
  auto ht = VarTable::make(hnames);

  auto h_monomial = [&](const Weight& w) {
    std::vector<int> e(rank);
    for (int j = 0; j < rank; ++j) e[j] = static_cast<int>(w[j]);
    return LaurentPoly::monomial(ht, std::move(e), 1);
  };

  std::vector<LaurentPoly> lifted;
  lifted.reserve(base.vars.size());
  for (size_t k = 0; k < base.vars.size(); ++k)
    lifted.push_back(h_monomial(degrees[k]) * base.vars[k]);
  std::vector<LaurentPoly> deltas;
  for (int j : J) deltas.push_back(LaurentPoly::var(ht, "h" + std::to_string(j)));

  std::map<std::string, LaurentPoly> projection;
  for (int j = 1; j <= rank; ++j)
    projection.emplace("h" + std::to_string(j),
                       LaurentPoly::constant(LaurentPoly::empty_table(), 1));
  return lifted_seed_from(base, degrees, J, conv, std::move(lifted),
                          std::move(deltas), std::move(projection));
}

namespace {

// Exchange monomials of a column: the product over positive entries and
// the product over negated negative entries.
std::pair<LaurentPoly, LaurentPoly> exchange_monomials(const Seed& s, int c) {
  LaurentPoly m_side = LaurentPoly::constant(LaurentPoly::empty_table(), 1);
  LaurentPoly l_side = m_side;
  for (int i = 0; i < s.matrix.rows(); ++i) {
    long long b = s.matrix.b[i][c];
    if (b > 0)
      m_side *= power(s.vars[i], static_cast<int>(b));
    else if (b < 0)
      l_side *= power(s.vars[i], static_cast<int>(-b));
  }
  return {m_side, l_side};
}

Report exchange_column(const Seed& s, int c, Regularity reg) {
  Report rep;
  const int pos = s.matrix.mutable_rows[c] + 1;
  auto [m_side, l_side] = exchange_monomials(s, c);
  LaurentPoly sum = m_side + l_side;
  ++rep.checks;
  auto q = exact_divide(sum, s.vars[pos - 1]);
  if (!q) {
    rep.violations.push_back({"not_divisible", -1, -1, pos,
                              "exchange sum is not divisible by the variable"});
    return rep;
  }
  // Monomials are units of the Laurent ring, so exact_divide alone cannot
  // fail against a one-term variable; regularity of the quotient is the
  // actual content of the identity in polynomial coordinates.
  if (reg == Regularity::Polynomial && !is_polynomial(*q)) {
    rep.violations.push_back(
        {"not_divisible", -1, -1, pos,
         "exchange quotient is not polynomial in the cell coordinates"});
    return rep;
  }
  ++rep.checks;
  if (!(*q * s.vars[pos - 1] == sum))
    rep.violations.push_back({"identity_mismatch", -1, -1, pos,
                              "quotient times variable differs from the sum"});
  return rep;
}

}  // namespace

Report verify_exchange_identities(const Seed& s, Exec exec, Regularity reg) {
  validate_seed(s);
  const int cols = s.matrix.cols();
  std::vector<Report> parts(cols);
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int c = 0; c < cols; ++c) parts[c] = exchange_column(s, c, reg);
  } else {
    for (int c = 0; c < cols; ++c) parts[c] = exchange_column(s, c, reg);
  }
  Report rep;
  for (const auto& p : parts) rep.merge(p);
  return rep;
}

namespace {

Report lifted_column(const LiftedSeed& l, const Seed& base, int c) {
  Report rep;
  const int pos = l.seed.matrix.mutable_rows[c] + 1;
  auto [m_side, l_side] = exchange_monomials(l.seed, c);
  LaurentPoly sum = m_side + l_side;
  ++rep.checks;
  auto q = exact_divide(sum, l.seed.vars[pos - 1]);
  if (!q) {
    rep.violations.push_back(
        {"not_divisible", -1, -1, pos,
         "lifted exchange sum is not divisible by the variable"});
    return rep;
  }
  if (!is_polynomial(*q)) {
    rep.violations.push_back(
        {"not_divisible", -1, -1, pos,
         "lifted exchange quotient is not polynomial in the ambient coordinates"});
    return rep;
  }
  ++rep.checks;
  if (!(*q * l.seed.vars[pos - 1] == sum)) {
    rep.violations.push_back({"identity_mismatch", -1, -1, pos,
                              "quotient times variable differs from the sum"});
    return rep;
  }
  // The lifted quotient must restrict to the base quotient.
  ++rep.checks;
  try {
    LaurentPoly projected = substitute(*q, l.projection);
    Seed mutated = mutate_seed(base, pos);
    if (!(projected == mutated.vars[pos - 1]))
      rep.violations.push_back(
          {"projection_mismatch", -1, -1, pos,
           "projected quotient differs from the base exchange"});
  } catch (const Error& e) {
    rep.violations.push_back({"projection_error", -1, -1, pos, e.what()});
  }
  return rep;
}

}  // namespace

Report verify_lifted_identities(const LiftedSeed& l, Exec exec) {
  validate_lifted(l);
  Seed base = project(l);
  const int cols = l.seed.matrix.cols();
  std::vector<Report> parts(cols);
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int c = 0; c < cols; ++c) parts[c] = lifted_column(l, base, c);
  } else {
    for (int c = 0; c < cols; ++c) parts[c] = lifted_column(l, base, c);
  }
  Report rep;
  for (const auto& p : parts) rep.merge(p);
  return rep;
}

}  // namespace clift
