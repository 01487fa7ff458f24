#include "clift/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace clift {

VarTableRef VarTable::make(std::vector<std::string> names) {
  auto t = std::shared_ptr<VarTable>(new VarTable());
  t->names_ = std::move(names);
  for (size_t i = 0; i < t->names_.size(); ++i) {
    if (t->names_[i].empty()) throw InputError("empty variable name");
    auto [it, fresh] = t->index_.emplace(t->names_[i], static_cast<int>(i));
    if (!fresh) throw InputError("duplicate variable name " + t->names_[i]);
  }
  return t;
}

VarTableRef VarTable::merged(const VarTableRef& a, const VarTableRef& b) {
  if (a.get() == b.get()) return a;
  bool contained = true;
  for (const auto& n : b->names_)
    if (a->index_of(n) < 0) {
      contained = false;
      break;
    }
  if (contained) return a;
  std::vector<std::string> names = a->names_;
  for (const auto& n : b->names_)
    if (a->index_of(n) < 0) names.push_back(n);
  return make(std::move(names));
}

int VarTable::index_of(const std::string& n) const {
  auto it = index_.find(n);
  return it == index_.end() ? -1 : it->second;
}

bool GrlexDesc::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  long long da = std::accumulate(a.begin(), a.end(), 0LL);
  long long db = std::accumulate(b.begin(), b.end(), 0LL);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

VarTableRef LaurentPoly::empty_table() {
  static VarTableRef t = VarTable::make({});
  return t;
}

LaurentPoly LaurentPoly::constant(VarTableRef t, Rat c) {
  LaurentPoly p(std::move(t));
  if (c != 0) p.terms_.emplace(std::vector<int>(p.table_->size(), 0), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::var(VarTableRef t, int v) {
  if (v < 0 || v >= t->size()) throw InputError("variable index out of range");
  LaurentPoly p(t);
  std::vector<int> e(t->size(), 0);
  e[v] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

LaurentPoly LaurentPoly::var(VarTableRef t, const std::string& name) {
  int v = t->index_of(name);
  if (v < 0) throw InputError("unknown variable " + name);
  return var(std::move(t), v);
}

LaurentPoly LaurentPoly::monomial(VarTableRef t, std::vector<int> exp, Rat c) {
  if (static_cast<int>(exp.size()) != t->size())
    throw InputError("exponent vector length mismatch");
  LaurentPoly p(std::move(t));
  if (c != 0) p.terms_.emplace(std::move(exp), std::move(c));
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat LaurentPoly::constant_value() const {
  if (!is_constant()) throw Error("not a constant");
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

const std::vector<int>& LaurentPoly::lead_exp() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rat& LaurentPoly::lead_coeff() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

void LaurentPoly::add_term(const std::vector<int>& exp, const Rat& c) {
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(exp, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::pair<LaurentPoly, LaurentPoly> aligned(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.table_.get() == b.table_.get()) return {a, b};
  if (a.table_->names() == b.table_->names()) {
    LaurentPoly b2 = b;
    b2.table_ = a.table_;
    return {a, b2};
  }
  VarTableRef t = VarTable::merged(a.table_, b.table_);
  return {reindexed(a, t), reindexed(b, t)};
}

LaurentPoly reindexed(const LaurentPoly& f, const VarTableRef& t) {
  if (f.table().get() == t.get()) return f;
  const int old_n = f.table()->size();
  std::vector<int> map(old_n, -1);
  for (int i = 0; i < old_n; ++i) map[i] = t->index_of(f.table()->name(i));
  LaurentPoly out(t);
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> ne(t->size(), 0);
    for (int i = 0; i < old_n; ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0)
        throw InputError("target table lacks variable " + f.table()->name(i));
      ne[map[i]] = e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(table_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  auto [a, b] = aligned(*this, o);
  for (const auto& [e, c] : b.terms_) a.add_term(e, c);
  *this = std::move(a);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  auto [a, b] = aligned(*this, o);
  for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
  *this = std::move(a);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  auto [a, b] = aligned(x, y);
  LaurentPoly out(a.table());
  if (a.zero() || b.zero()) return out;
  const int n = a.table()->size();
  std::vector<int> e(n);
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.table_.get() == b.table_.get()) return a.terms_ == b.terms_;
  auto [x, y] = aligned(a, b);
  return x.terms_ == y.terms_;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += table_->name(static_cast<int>(i));
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

std::optional<std::pair<int, int>> LaurentPoly::exponent_range(
    const std::string& name) const {
  if (terms_.empty()) return std::nullopt;
  int v = table_->index_of(name);
  if (v < 0) return std::make_pair(0, 0);
  int lo = terms_.begin()->first[v], hi = lo;
  for (const auto& [e, c] : terms_) {
    lo = std::min(lo, e[v]);
    hi = std::max(hi, e[v]);
  }
  return std::make_pair(lo, hi);
}

LaurentPoly power(const LaurentPoly& f, int e) {
  if (e == 0) return LaurentPoly::constant(f.table(), 1);
  if (e < 0) {
    if (!f.is_unit()) throw InputError("negative power of a non-unit");
    const auto& [exp, c] = *f.terms().begin();
    std::vector<int> inv(exp.size());
    for (size_t i = 0; i < exp.size(); ++i) inv[i] = -exp[i];
    return power(LaurentPoly::monomial(f.table(), std::move(inv), 1 / Rat(c)), -e);
  }
  LaurentPoly acc = LaurentPoly::constant(f.table(), 1);
  LaurentPoly base = f;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= base;
    if (k > 1) base *= base;
  }
  return acc;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (b0.zero()) throw InputError("division by zero");
  auto [a, b] = aligned(a0, b0);
  const int n = a.table()->size();
  if (a.zero()) return LaurentPoly(a.table());

  // Strip per-variable minimal exponents; contents are additive on
  // products, so the shifted quotient is exact iff the stripped one is.
  auto content = [n](const LaurentPoly& f) {
    std::vector<int> m(f.terms().begin()->first);
    for (const auto& [e, c] : f.terms())
      for (int i = 0; i < n; ++i) m[i] = std::min(m[i], e[i]);
    return m;
  };
  auto shifted = [n](const LaurentPoly& f, const std::vector<int>& off) {
    LaurentPoly out(f.table());
    std::vector<int> e(n);
    for (const auto& [ef, c] : f.terms()) {
      for (int i = 0; i < n; ++i) e[i] = ef[i] + off[i];
      out += LaurentPoly::monomial(f.table(), e, c);
    }
    return out;
  };
  std::vector<int> ca = content(a), cb = content(b);
  std::vector<int> neg_ca(n), neg_cb(n), off(n);
  for (int i = 0; i < n; ++i) {
    neg_ca[i] = -ca[i];
    neg_cb[i] = -cb[i];
    off[i] = ca[i] - cb[i];
  }
  LaurentPoly r = shifted(a, neg_ca);
  const LaurentPoly d = shifted(b, neg_cb);

  // Leading-term division under graded lex; all exponents stay
  // nonnegative, so this terminates.
  LaurentPoly q(a.table());
  std::vector<int> delta(n);
  while (!r.zero()) {
    const auto& lr = r.lead_exp();
    const auto& ld = d.lead_exp();
    bool divides = true;
    for (int i = 0; i < n; ++i) {
      delta[i] = lr[i] - ld[i];
      if (delta[i] < 0) divides = false;
    }
    if (!divides) return std::nullopt;
    LaurentPoly t = LaurentPoly::monomial(a.table(), delta, r.lead_coeff() / d.lead_coeff());
    q += t;
    r -= t * d;
  }
  return shifted(q, off);
}

bool is_polynomial(const LaurentPoly& f) {
  for (const auto& [e, c] : f.terms())
    for (int x : e)
      if (x < 0) return false;
  return true;
}

namespace {

Rat rat_pow(const Rat& v, int e) {
  if (e == 0) return 1;
  if (v == 0) {
    if (e < 0) throw InputError("zero raised to a negative power");
    return 0;
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v.get_num().get_mpz_t(), std::abs(e));
  mpz_pow_ui(den.get_mpz_t(), v.get_den().get_mpz_t(), std::abs(e));
  Rat out(num, den);
  out.canonicalize();
  return e > 0 ? out : 1 / out;
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& f,
                       const std::map<std::string, LaurentPoly>& bind) {
  VarTableRef t = f.table();
  for (const auto& [name, g] : bind) t = VarTable::merged(t, g.table());

  const int n = f.table()->size();
  std::vector<const LaurentPoly*> bound(n, nullptr);
  for (int i = 0; i < n; ++i) {
    auto it = bind.find(f.table()->name(i));
    if (it != bind.end()) bound[i] = &it->second;
  }

  std::map<std::pair<int, int>, LaurentPoly> pow_cache;
  LaurentPoly out(t);
  for (const auto& [e, c] : f.terms()) {
    // Unbound variables stay as a monomial factor; bound ones multiply in.
    std::vector<int> base(t->size(), 0);
    LaurentPoly term;
    bool term_zero = false;
    std::vector<std::pair<int, int>> factors;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (!bound[i]) {
        base[t->index_of(f.table()->name(i))] = e[i];
        continue;
      }
      if (bound[i]->zero()) {
        if (e[i] < 0)
          throw InputError("substitution has a pole: " + f.table()->name(i) +
                           " is zero with a negative exponent");
        term_zero = true;
        break;
      }
      if (e[i] < 0 && !bound[i]->is_unit())
        throw InputError("substitution needs an invertible value for " +
                         f.table()->name(i));
      factors.emplace_back(i, e[i]);
    }
    if (term_zero) continue;
    term = LaurentPoly::monomial(t, std::move(base), c);
    for (auto [i, ei] : factors) {
      auto key = std::make_pair(i, ei);
      auto it = pow_cache.find(key);
      if (it == pow_cache.end())
        it = pow_cache.emplace(key, power(reindexed(*bound[i], t), ei)).first;
      term *= it->second;
    }
    out += term;
  }
  return out;
}

Rat eval(const LaurentPoly& f, const std::map<std::string, Rat>& values) {
  const int n = f.table()->size();
  std::vector<const Rat*> v(n, nullptr);
  Rat out = 0;
  for (const auto& [e, c] : f.terms()) {
    Rat term = c;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (!v[i]) {
        auto it = values.find(f.table()->name(i));
        if (it == values.end())
          throw InputError("no value for variable " + f.table()->name(i));
        v[i] = &it->second;
      }
      if (*v[i] == 0 && e[i] > 0) {
        term = 0;
        break;
      }
      term *= rat_pow(*v[i], e[i]);
    }
    out += term;
  }
  return out;
}

}  // namespace clift
