#include "clift/lift.hpp"

#include <algorithm>
#include <sstream>

namespace clift {

std::string convention_str(LiftConvention c) {
  return c == LiftConvention::Homogeneous ? "homogeneous" : "plain";
}

void validate_lifted(const LiftedSeed& l) {
  validate_seed(l.seed);
  const int rows = l.seed.matrix.rows();
  if (l.base_rows < 1 || l.base_rows > rows)
    throw InputError("base row count out of range");
  if (rows - l.base_rows != static_cast<int>(l.J.size()))
    throw InputError("appended row count must match |J|");
  if (l.J.empty()) throw InputError("J must be nonempty");
  int prev = 0;
  for (int j : l.J) {
    if (j <= prev) throw InputError("J must be sorted and distinct");
    prev = j;
  }
  if (static_cast<int>(l.degrees.size()) != rows)
    throw InputError("degree count mismatch");
  for (int r : l.seed.matrix.mutable_rows)
    if (r >= l.base_rows) throw InputError("appended rows must be frozen");
}

std::vector<std::vector<long long>> lift_rows(const ExtendedExchangeMatrix& m,
                                              const DegreeAssignment& degrees,
                                              const std::vector<int>& J,
                                              LiftConvention conv) {
  validate_matrix(m);
  if (static_cast<int>(degrees.size()) != m.rows())
    throw InputError("degree count mismatch");
  const long long sign = conv == LiftConvention::Homogeneous ? -1 : 1;
  std::vector<std::vector<long long>> out(J.size(),
                                          std::vector<long long>(m.cols(), 0));
  for (size_t idx = 0; idx < J.size(); ++idx) {
    const int j = J[idx];
    for (int c = 0; c < m.cols(); ++c) {
      long long sum = 0;
      for (int i = 0; i < m.rows(); ++i) {
        if (degrees[i].size() < static_cast<size_t>(j))
          throw InputError("J index exceeds degree rank");
        sum += m.b[i][c] * degrees[i][j - 1];
      }
      out[idx][c] = sign * sum;
    }
  }
  return out;
}

namespace {

ExtendedExchangeMatrix append_rows(const ExtendedExchangeMatrix& base,
                                   const std::vector<std::vector<long long>>& extra,
                                   const std::vector<int>& J) {
  ExtendedExchangeMatrix out = base;
  for (size_t idx = 0; idx < extra.size(); ++idx) {
    out.b.push_back(extra[idx]);
    MinorLabel delta;
    delta.i = J[idx];
    delta.frozen = true;
    out.row_labels.push_back(delta.str());
  }
  return out;
}

}  // namespace

LiftedSeed lift_seed(const Seed& base, const DegreeAssignment& degrees,
                     const std::vector<int>& J, LiftConvention conv) {
  validate_seed(base);
  if (J.empty()) throw InputError("J must be nonempty");
  const int m = base.matrix.rows();
  const size_t rank = degrees.empty() ? 0 : degrees[0].size();

  LiftedSeed l;
  l.base_rows = m;
  l.J = J;
  l.convention = conv;
  l.seed.matrix = append_rows(base.matrix, lift_rows(base.matrix, degrees, J, conv), J);

  std::vector<std::string> names;
  names.reserve(m + J.size());
  for (int k = 1; k <= m; ++k) names.push_back("X" + std::to_string(k));
  for (int j : J) names.push_back("D" + std::to_string(j));
  auto t = VarTable::make(std::move(names));
  for (int v = 0; v < static_cast<int>(m + J.size()); ++v)
    l.seed.vars.push_back(LaurentPoly::var(t, v));

  l.degrees = degrees;
  for (int j : J) {
    if (static_cast<size_t>(j) > rank) throw InputError("J index exceeds degree rank");
    l.degrees.push_back(fundamental_weight(static_cast<int>(rank), j));
  }

  for (int k = 1; k <= m; ++k)
    l.projection.emplace("X" + std::to_string(k), base.vars[k - 1]);
  for (int j : J)
    l.projection.emplace("D" + std::to_string(j),
                         LaurentPoly::constant(LaurentPoly::empty_table(), 1));
  validate_lifted(l);
  return l;
}

LiftedSeed lifted_seed_from(const Seed& base, const DegreeAssignment& degrees,
                            const std::vector<int>& J, LiftConvention conv,
                            std::vector<LaurentPoly> lifted_vars,
                            std::vector<LaurentPoly> delta_vars,
                            std::map<std::string, LaurentPoly> projection) {
  validate_seed(base);
  if (J.empty()) throw InputError("J must be nonempty");
  const int m = base.matrix.rows();
  if (static_cast<int>(lifted_vars.size()) != m)
    throw InputError("lifted variable count mismatch");
  if (delta_vars.size() != J.size())
    throw InputError("appended variable count mismatch");
  if (static_cast<int>(degrees.size()) != m)
    throw InputError("degree count mismatch");
  const size_t rank = degrees.empty() ? 0 : degrees[0].size();

  // Every supplied lift must restrict to what it lifts.
  const LaurentPoly one = LaurentPoly::constant(LaurentPoly::empty_table(), 1);
  for (int k = 0; k < m; ++k)
    if (!(substitute(lifted_vars[k], projection) == base.vars[k]))
      throw InputError("lifted variable " + std::to_string(k + 1) +
                       " does not project to its base variable");
  for (size_t idx = 0; idx < delta_vars.size(); ++idx)
    if (!(substitute(delta_vars[idx], projection) == one))
      throw InputError("appended variable " + std::to_string(idx + 1) +
                       " does not project to 1");

  LiftedSeed l;
  l.base_rows = m;
  l.J = J;
  l.convention = conv;
  l.seed.matrix = append_rows(base.matrix, lift_rows(base.matrix, degrees, J, conv), J);
  l.seed.vars = std::move(lifted_vars);
  for (auto& d : delta_vars) l.seed.vars.push_back(std::move(d));
  l.degrees = degrees;
  for (int j : J) l.degrees.push_back(fundamental_weight(static_cast<int>(rank), j));
  l.projection = std::move(projection);
  validate_lifted(l);
  return l;
}

Seed project(const LiftedSeed& l) {
  Seed out;
  out.matrix.mutable_rows = l.seed.matrix.mutable_rows;
  out.matrix.b.assign(l.seed.matrix.b.begin(), l.seed.matrix.b.begin() + l.base_rows);
  out.matrix.row_labels.assign(l.seed.matrix.row_labels.begin(),
                               l.seed.matrix.row_labels.begin() + l.base_rows);
  out.vars.reserve(l.base_rows);
  for (int k = 0; k < l.base_rows; ++k)
    out.vars.push_back(substitute(l.seed.vars[k], l.projection));
  return out;
}

LiftedSeed mutate_lifted(const LiftedSeed& l, int k) {
  LiftedSeed out = l;
  out.degrees = propagate_degrees(l.seed.matrix, l.degrees, k);
  out.seed = mutate_seed(l.seed, k);
  return out;
}

LiftedSeed mutate_lifted_sequence(const LiftedSeed& l, const std::vector<int>& ks) {
  LiftedSeed cur = l;
  for (size_t t = 0; t < ks.size(); ++t) {
    try {
      cur = mutate_lifted(cur, ks[t]);
    } catch (const NotDivisibleError& e) {
      throw NotDivisibleError("step " + std::to_string(t + 1) + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError("step " + std::to_string(t + 1) + ": " + e.what());
    }
  }
  return cur;
}

namespace {

bool same_shape(const ExtendedExchangeMatrix& a, const ExtendedExchangeMatrix& b) {
  return a.b == b.b && a.mutable_rows == b.mutable_rows;
}

bool defect_is_zero(const ExtendedExchangeMatrix& m, const DegreeAssignment& degrees,
                    const std::vector<int>& J) {
  auto defects = column_degree_defect(m, degrees);
  for (const auto& d : defects)
    for (int j : J)
      if (d.at(j - 1) != 0) return false;
  return true;
}

// Matrix-level walk: no polynomial arithmetic, so long walks stay cheap.
Report commutation_walk_matrices(const Seed& base, const LiftedSeed& l,
                                 const std::vector<int>& walk, int walk_no,
                                 const CommutationOptions& opt) {
  Report rep;
  ExtendedExchangeMatrix bm = base.matrix;
  ExtendedExchangeMatrix lm = l.seed.matrix;
  DegreeAssignment deg = l.degrees;
  for (size_t t = 0; t < walk.size(); ++t) {
    const int k = walk[t];
    deg = propagate_degrees(lm, deg, k);
    bm = mutate_matrix(bm, k);
    lm = mutate_matrix(lm, k);
    ++rep.checks;
    std::vector<std::vector<long long>> top(lm.b.begin(),
                                            lm.b.begin() + l.base_rows);
    if (top != bm.b || lm.mutable_rows != bm.mutable_rows) {
      rep.violations.push_back({"matrix_mismatch", walk_no, static_cast<int>(t + 1),
                                k, "projected matrix differs from base mutation"});
      return rep;
    }
    if (opt.check_grading && l.convention == LiftConvention::Homogeneous) {
      ++rep.checks;
      if (!defect_is_zero(lm, deg, l.J))
        rep.violations.push_back({"degree_defect", walk_no, static_cast<int>(t + 1),
                                  k, "column degree defect is nonzero"});
    }
  }
  return rep;
}

Report commutation_walk(const Seed& base, const LiftedSeed& l,
                        const std::vector<int>& walk, int walk_no,
                        const CommutationOptions& opt) {
  if (!opt.check_vars) return commutation_walk_matrices(base, l, walk, walk_no, opt);
  Report rep;
  Seed base_cur = base;
  LiftedSeed lift_cur = l;
  for (size_t t = 0; t < walk.size(); ++t) {
    const int k = walk[t];
    try {
      base_cur = mutate_seed(base_cur, k);
      lift_cur = mutate_lifted(lift_cur, k);
    } catch (const Error& e) {
      rep.violations.push_back(
          {"not_divisible", walk_no, static_cast<int>(t + 1), k, e.what()});
      return rep;
    }
    ++rep.checks;
    std::vector<std::vector<long long>> top(
        lift_cur.seed.matrix.b.begin(),
        lift_cur.seed.matrix.b.begin() + lift_cur.base_rows);
    if (top != base_cur.matrix.b ||
        lift_cur.seed.matrix.mutable_rows != base_cur.matrix.mutable_rows) {
      rep.violations.push_back({"matrix_mismatch", walk_no, static_cast<int>(t + 1),
                                k, "projected matrix differs from base mutation"});
      return rep;
    }
    if (opt.check_grading && l.convention == LiftConvention::Homogeneous) {
      ++rep.checks;
      if (!defect_is_zero(lift_cur.seed.matrix, lift_cur.degrees, lift_cur.J))
        rep.violations.push_back({"degree_defect", walk_no, static_cast<int>(t + 1),
                                  k, "column degree defect is nonzero"});
    }
  }
  try {
    Seed projected = project(lift_cur);
    for (size_t i = 0; i < projected.vars.size(); ++i) {
      ++rep.checks;
      if (!(projected.vars[i] == base_cur.vars[i])) {
        rep.violations.push_back(
            {"var_mismatch", walk_no, static_cast<int>(walk.size()),
             static_cast<int>(i + 1),
             "projected variable differs from base variable"});
      }
    }
  } catch (const Error& e) {
    rep.violations.push_back({"projection_error", walk_no,
                              static_cast<int>(walk.size()), -1, e.what()});
  }
  return rep;
}

}  // namespace

Report verify_commutation(const Seed& base, const LiftedSeed& l,
                          const std::vector<std::vector<int>>& walks,
                          const CommutationOptions& opt) {
  validate_seed(base);
  validate_lifted(l);
  {
    Seed projected = project(l);
    bool vars_match = projected.vars.size() == base.vars.size();
    for (size_t i = 0; vars_match && i < projected.vars.size(); ++i)
      vars_match = projected.vars[i] == base.vars[i];
    if (!same_shape(projected.matrix, base.matrix) || !vars_match)
      throw InputError("lifted seed does not project onto the base seed");
  }

  std::vector<Report> parts(walks.size());
  if (opt.exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long w = 0; w < static_cast<long long>(walks.size()); ++w)
      parts[w] = commutation_walk(base, l, walks[w], static_cast<int>(w + 1), opt);
  } else {
    for (size_t w = 0; w < walks.size(); ++w)
      parts[w] = commutation_walk(base, l, walks[w], static_cast<int>(w + 1), opt);
  }
  Report rep;
  for (const auto& p : parts) rep.merge(p);
  return rep;
}

}  // namespace clift
