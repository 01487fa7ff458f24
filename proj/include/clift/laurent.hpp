#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clift/types.hpp"

namespace clift {

using Rat = mpq_class;

class VarTable;
using VarTableRef = std::shared_ptr<const VarTable>;

// Immutable ordered list of variable names.  Polynomials hold a shared
// reference and index their exponent vectors by position in the table.
class VarTable {
 public:
  // Names must be distinct and nonempty.
  static VarTableRef make(std::vector<std::string> names);
  // All of a's names in a's order, then b's remaining names in b's order.
  static VarTableRef merged(const VarTableRef& a, const VarTableRef& b);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& n) const;  // -1 when absent

 private:
  VarTable() = default;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

// Exponent vectors ordered graded-lexicographically, largest first, so a
// term map iterates leading term first.
struct GrlexDesc {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Laurent polynomial with exact rational coefficients.  Terms are kept in
// a canonical graded-lex order; zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<std::vector<int>, Rat, GrlexDesc>;

  LaurentPoly() : LaurentPoly(empty_table()) {}
  explicit LaurentPoly(VarTableRef t) : table_(std::move(t)) {}

  static LaurentPoly constant(VarTableRef t, Rat c);
  static LaurentPoly var(VarTableRef t, int v);
  static LaurentPoly var(VarTableRef t, const std::string& name);
  static LaurentPoly monomial(VarTableRef t, std::vector<int> exp, Rat c);

  const VarTableRef& table() const { return table_; }
  const TermMap& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  // Single term with coefficient +-1/q and arbitrary exponents, i.e. a unit
  // of the Laurent ring.
  bool is_unit() const { return terms_.size() == 1; }

  const std::vector<int>& lead_exp() const;
  const Rat& lead_coeff() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // Equality is name-based: tables are aligned first, so the same
  // polynomial over tables that differ by unused variables compares equal.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  // Canonical rendering, terms leading-first: "x^2*y - 1/2*z + 3 + x^-1".
  std::string str() const;

  // Exponent of a named variable in every term: pair of (min, max), or
  // nullopt for the zero polynomial.
  std::optional<std::pair<int, int>> exponent_range(const std::string& name) const;

  static VarTableRef empty_table();

 private:
  friend std::pair<LaurentPoly, LaurentPoly> aligned(const LaurentPoly& a,
                                                     const LaurentPoly& b);
  friend LaurentPoly reindexed(const LaurentPoly& f, const VarTableRef& t);
  void add_term(const std::vector<int>& exp, const Rat& c);
  VarTableRef table_;
  TermMap terms_;
};

// Both operands rewritten over one shared table.
std::pair<LaurentPoly, LaurentPoly> aligned(const LaurentPoly& a, const LaurentPoly& b);

// The same polynomial over a table that must contain every variable the
// polynomial actually uses.
LaurentPoly reindexed(const LaurentPoly& f, const VarTableRef& t);

// f^e.  Negative e requires f to be a unit.
LaurentPoly power(const LaurentPoly& f, int e);

// a / b when the quotient is again a Laurent polynomial, nullopt otherwise.
// b must be nonzero.  Works by stripping per-variable minimal exponents and
// then dividing by leading terms under the graded-lex order.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

// True when no variable occurs with a negative exponent.  Every monomial is
// invertible in the Laurent ring, so exact_divide alone cannot certify that
// a quotient is regular; callers that need regularity test the result with
// this predicate.
bool is_polynomial(const LaurentPoly& f);

// Substitute bound variables by polynomials; unbound variables pass
// through.  A variable occurring with a negative exponent must be bound to
// a unit (or left unbound); anything else throws InputError, as does
// raising zero to a negative power.
LaurentPoly substitute(const LaurentPoly& f,
                       const std::map<std::string, LaurentPoly>& bind);

// Evaluate with every variable of f's table bound to a rational.  Zero
// values hitting negative exponents throw InputError.
Rat eval(const LaurentPoly& f, const std::map<std::string, Rat>& values);

}  // namespace clift
