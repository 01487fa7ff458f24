#include "clift/cluster.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace clift {

bool ExtendedExchangeMatrix::row_is_mutable(int r) const {
  return std::binary_search(mutable_rows.begin(), mutable_rows.end(), r);
}

std::optional<int> ExtendedExchangeMatrix::col_of(int k) const {
  auto it = std::lower_bound(mutable_rows.begin(), mutable_rows.end(), k - 1);
  if (it == mutable_rows.end() || *it != k - 1) return std::nullopt;
  return static_cast<int>(it - mutable_rows.begin());
}

std::vector<std::vector<long long>> ExtendedExchangeMatrix::principal_block() const {
  std::vector<std::vector<long long>> out;
  out.reserve(mutable_rows.size());
  for (int r : mutable_rows) out.push_back(b.at(r));
  return out;
}

std::vector<int> ExtendedExchangeMatrix::mutable_positions() const {
  std::vector<int> out;
  out.reserve(mutable_rows.size());
  for (int r : mutable_rows) out.push_back(r + 1);
  return out;
}

std::vector<int> ExtendedExchangeMatrix::frozen_positions() const {
  std::vector<int> out;
  for (int r = 0; r < rows(); ++r)
    if (!row_is_mutable(r)) out.push_back(r + 1);
  return out;
}

void validate_matrix(const ExtendedExchangeMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  if (static_cast<int>(m.row_labels.size()) != rows)
    throw InputError("row label count mismatch");
  for (const auto& row : m.b)
    if (static_cast<int>(row.size()) != cols) throw InputError("ragged matrix");
  int prev = -1;
  for (int r : m.mutable_rows) {
    if (r <= prev) throw InputError("mutable rows must be strictly increasing");
    if (r < 0 || r >= rows) throw InputError("mutable row index out of range");
    prev = r;
  }
}

std::optional<std::vector<long long>> is_skew_symmetrizable(
    const std::vector<std::vector<long long>>& block) {
  return symmetrizing_diagonal(block, -1);
}

ExtendedExchangeMatrix mutate_matrix(const ExtendedExchangeMatrix& m, int k) {
  auto col = m.col_of(k);
  if (!col) throw InputError("position " + std::to_string(k) + " is not mutable");
  const int c = *col;
  const int r = k - 1;
  ExtendedExchangeMatrix out = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (i == r || j == c)
        out.b[i][j] = -m.b[i][j];
      else
        out.b[i][j] = m.b[i][j] +
                      (std::abs(m.b[i][c]) * m.b[r][j] + m.b[i][c] * std::abs(m.b[r][j])) / 2;
    }
  return out;
}

void validate_seed(const Seed& s) {
  validate_matrix(s.matrix);
  if (static_cast<int>(s.vars.size()) != s.matrix.rows())
    throw InputError("variable count mismatch");
}

Seed formal_seed(ExtendedExchangeMatrix m) {
  validate_matrix(m);
  std::vector<std::string> names;
  names.reserve(m.rows());
  for (int i = 1; i <= m.rows(); ++i) names.push_back("x" + std::to_string(i));
  auto t = VarTable::make(std::move(names));
  Seed s;
  s.vars.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) s.vars.push_back(LaurentPoly::var(t, i));
  s.matrix = std::move(m);
  return s;
}

namespace {

// The unique variable name of a single symbol, or empty when the
// polynomial is not one.
std::string symbol_name(const LaurentPoly& f) {
  if (f.term_count() != 1 || f.lead_coeff() != 1) return {};
  const auto& e = f.lead_exp();
  int at = -1;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (e[i] != 1 || at >= 0) return {};
    at = static_cast<int>(i);
  }
  if (at < 0) return {};
  return f.table()->name(at);
}

}  // namespace

bool is_formal(const Seed& s) {
  std::set<std::string> seen;
  for (const auto& v : s.vars) {
    std::string n = symbol_name(v);
    if (n.empty() || !seen.insert(n).second) return false;
  }
  return true;
}

Seed mutate_seed(const Seed& s, int k) {
  validate_seed(s);
  auto col = s.matrix.col_of(k);
  if (!col) throw InputError("position " + std::to_string(k) + " is not mutable");
  const int c = *col;
  const int r = k - 1;

  LaurentPoly m_side = LaurentPoly::constant(s.vars[r].table(), 1);
  LaurentPoly l_side = m_side;
  for (int i = 0; i < s.matrix.rows(); ++i) {
    long long b = s.matrix.b[i][c];
    if (b > 0)
      m_side *= power(s.vars[i], static_cast<int>(b));
    else if (b < 0)
      l_side *= power(s.vars[i], static_cast<int>(-b));
  }
  auto q = exact_divide(m_side + l_side, s.vars[r]);
  if (!q)
    throw NotDivisibleError("exchange at position " + std::to_string(k) +
                            " does not divide evenly");
  Seed out;
  out.matrix = mutate_matrix(s.matrix, k);
  out.vars = s.vars;
  out.vars[r] = std::move(*q);
  return out;
}

Seed mutate_sequence(const Seed& s, const std::vector<int>& ks) {
  Seed cur = s;
  for (size_t t = 0; t < ks.size(); ++t) {
    try {
      cur = mutate_seed(cur, ks[t]);
    } catch (const NotDivisibleError& e) {
      throw NotDivisibleError("step " + std::to_string(t + 1) + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError("step " + std::to_string(t + 1) + ": " + e.what());
    }
  }
  return cur;
}

std::vector<Weight> column_degree_defect(const ExtendedExchangeMatrix& m,
                                         const DegreeAssignment& degrees) {
  validate_matrix(m);
  if (static_cast<int>(degrees.size()) != m.rows())
    throw InputError("degree count mismatch");
  const size_t rank = degrees.empty() ? 0 : degrees[0].size();
  for (const auto& d : degrees)
    if (d.size() != rank) throw InputError("degree rank mismatch");
  std::vector<Weight> out(m.cols(), Weight(rank, 0));
  for (int c = 0; c < m.cols(); ++c)
    for (int i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < rank; ++j) out[c][j] += m.b[i][c] * degrees[i][j];
  return out;
}

DegreeAssignment propagate_degrees(const ExtendedExchangeMatrix& m,
                                   const DegreeAssignment& degrees, int k) {
  auto col = m.col_of(k);
  if (!col) throw InputError("position " + std::to_string(k) + " is not mutable");
  if (static_cast<int>(degrees.size()) != m.rows())
    throw InputError("degree count mismatch");
  const int c = *col;
  const int r = k - 1;
  DegreeAssignment out = degrees;
  Weight w(degrees[r].size(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    long long b = m.b[i][c];
    if (b <= 0) continue;
    for (size_t j = 0; j < w.size(); ++j) w[j] += b * degrees[i][j];
  }
  for (size_t j = 0; j < w.size(); ++j) out[r][j] = w[j] - degrees[r][j];
  return out;
}

std::vector<std::vector<int>> all_walks(const std::vector<int>& positions, int depth) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> level{{}};
  for (int d = 1; d <= depth; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& w : level)
      for (int p : positions) {
        auto e = w;
        e.push_back(p);
        next.push_back(std::move(e));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::vector<std::vector<int>> random_walks(const std::vector<int>& positions,
                                           int count, int depth,
                                           unsigned long long rng_seed) {
  if (positions.empty()) throw InputError("no mutable positions to walk on");
  std::mt19937_64 rng(rng_seed);
  std::vector<std::vector<int>> out;
  out.reserve(count);
  for (int w = 0; w < count; ++w) {
    std::vector<int> walk(depth);
    for (int t = 0; t < depth; ++t)
      walk[t] = positions[static_cast<size_t>(rng() % positions.size())];
    out.push_back(std::move(walk));
  }
  return out;
}

namespace {

Report check_laurent_walk(const Seed& s, const std::vector<int>& walk, int walk_no,
                          const std::vector<std::string>& frozen_names) {
  Report rep;
  Seed cur = s;
  for (size_t t = 0; t < walk.size(); ++t) {
    try {
      cur = mutate_seed(cur, walk[t]);
    } catch (const NotDivisibleError& e) {
      rep.violations.push_back({"not_divisible", walk_no, static_cast<int>(t + 1),
                                walk[t], e.what()});
      return rep;
    }
    for (size_t i = 0; i < cur.vars.size(); ++i) {
      ++rep.checks;
      for (const auto& fn : frozen_names) {
        auto range = cur.vars[i].exponent_range(fn);
        if (range && range->first < 0) {
          rep.violations.push_back(
              {"frozen_denominator", walk_no, static_cast<int>(t + 1), walk[t],
               "variable " + std::to_string(i + 1) + " has " + fn + "^" +
                   std::to_string(range->first)});
        }
      }
    }
  }
  return rep;
}

}  // namespace

Report check_laurent(const Seed& s, const std::vector<std::vector<int>>& walks,
                     Exec exec) {
  validate_seed(s);
  if (!is_formal(s))
    throw InputError("Laurent check needs a formal initial seed");
  std::vector<std::string> frozen_names;
  for (int pos : s.matrix.frozen_positions())
    frozen_names.push_back(symbol_name(s.vars[pos - 1]));

  std::vector<Report> parts(walks.size());
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long w = 0; w < static_cast<long long>(walks.size()); ++w)
      parts[w] = check_laurent_walk(s, walks[w], static_cast<int>(w + 1), frozen_names);
  } else {
    for (size_t w = 0; w < walks.size(); ++w)
      parts[w] = check_laurent_walk(s, walks[w], static_cast<int>(w + 1), frozen_names);
  }
  Report rep;
  for (const auto& p : parts) rep.merge(p);
  return rep;
}

namespace {

std::string cluster_key(const Seed& s) {
  std::vector<std::string> parts;
  parts.reserve(s.matrix.cols());
  for (int r : s.matrix.mutable_rows) parts.push_back(s.vars[r].str());
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) {
    key += p;
    key += '\n';
  }
  return key;
}

}  // namespace

ExchangeGraph enumerate_exchange_graph(const Seed& s, int max_seeds, Exec exec) {
  validate_seed(s);
  if (max_seeds < 1) throw InputError("max_seeds must be positive");
  ExchangeGraph g;
  g.complete = true;
  std::map<std::string, int> ids;
  g.nodes.push_back(s);
  ids.emplace(cluster_key(s), 0);

  const auto positions = s.matrix.mutable_positions();
  auto admit = [&](int from, int k, Seed&& t) {
    std::string key = cluster_key(t);
    auto it = ids.find(key);
    if (it != ids.end()) {
      g.edges.push_back({from, k, it->second});
      return;
    }
    if (static_cast<int>(g.nodes.size()) >= max_seeds) {
      g.complete = false;
      return;
    }
    int id = static_cast<int>(g.nodes.size());
    g.nodes.push_back(std::move(t));
    ids.emplace(std::move(key), id);
    g.edges.push_back({from, k, id});
  };

  if (exec == Exec::Parallel) {
    // Level-synchronous expansion: mutate the whole frontier in parallel,
    // then admit candidates in the serial reference order.
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
      const int fn = static_cast<int>(frontier.size());
      const int pn = static_cast<int>(positions.size());
      std::vector<Seed> cand(static_cast<size_t>(fn) * pn);
      std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) collapse(2)
#endif
      for (int f = 0; f < fn; ++f)
        for (int p = 0; p < pn; ++p) {
          try {
            cand[static_cast<size_t>(f) * pn + p] =
                mutate_seed(g.nodes[frontier[f]], positions[p]);
          } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!err) err = std::current_exception();
          }
        }
      if (err) std::rethrow_exception(err);
      const int before = static_cast<int>(g.nodes.size());
      for (int f = 0; f < fn; ++f)
        for (int p = 0; p < pn; ++p)
          admit(frontier[f], positions[p],
                std::move(cand[static_cast<size_t>(f) * pn + p]));
      frontier.clear();
      for (int id = before; id < static_cast<int>(g.nodes.size()); ++id)
        frontier.push_back(id);
    }
  } else {
    for (int u = 0; u < static_cast<int>(g.nodes.size()); ++u) {
      for (int k : positions) {
        Seed t = mutate_seed(g.nodes[u], k);
        admit(u, k, std::move(t));
      }
    }
  }
  return g;
}

}  // namespace clift
