#include "clift/cartan.hpp"

#include <gmpxx.h>

#include <numeric>
#include <sstream>

namespace clift {

std::string DynkinType::str() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

bool valid_rank(Series s, int rank) {
  switch (s) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 3;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

DynkinType dynkin(char series, int rank) {
  switch (series) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G': break;
    default:
      throw InputError(std::string("unknown Dynkin series '") + series + "'");
  }
  auto s = static_cast<Series>(series);
  if (!valid_rank(s, rank))
    throw InputError("invalid rank " + std::to_string(rank) + " for series " +
                     std::string(1, series));
  return DynkinType{s, rank};
}

Weight fundamental_weight(int rank, int i) {
  if (i < 1 || i > rank) throw InputError("fundamental weight index out of range");
  Weight v(rank, 0);
  v[i - 1] = 1;
  return v;
}

std::string weight_str(const Weight& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

CartanMatrix::CartanMatrix(DynkinType t, std::vector<std::vector<int>> entries)
    : type_(t), m_(std::move(entries)) {}

namespace {

// Chain with a(i, i+1) = a(i+1, i) = -1, then series-specific bond fixes.
std::vector<std::vector<int>> simply_laced_chain(int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) {
    a[i][i + 1] = -1;
    a[i + 1][i] = -1;
  }
  return a;
}

}  // namespace

CartanMatrix cartan_matrix(DynkinType t) {
  const int n = t.rank;
  if (!valid_rank(t.series, n)) throw InputError("invalid Dynkin type " + t.str());
  auto a = simply_laced_chain(n);
  switch (t.series) {
    case Series::A:
      break;
    case Series::B:  // short root last
      a[n - 1][n - 2] = -2;
      break;
    case Series::C:  // long root last
      a[n - 2][n - 1] = -2;
      break;
    case Series::D:  // fork: the last two nodes both attach to n-2
      a[n - 1][n - 2] = 0;
      a[n - 2][n - 1] = 0;
      a[n - 1][n - 3] = -1;
      a[n - 3][n - 1] = -1;
      break;
    case Series::E:  // node 2 hangs off node 4 of the chain 1-3-4-...-n
      a = std::vector<std::vector<int>>(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      {
        auto bond = [&](int i, int j) {
          a[i - 1][j - 1] = -1;
          a[j - 1][i - 1] = -1;
        };
        bond(1, 3);
        bond(2, 4);
        for (int i = 3; i < n; ++i) bond(i, i + 1);
      }
      break;
    case Series::F:
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case Series::G:
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return CartanMatrix(t, std::move(a));
}

std::optional<std::vector<long long>> symmetrizing_diagonal(
    const std::vector<std::vector<long long>>& m, int eps) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw InputError("matrix must be square");
  if (eps != 1 && eps != -1) throw InputError("eps must be +1 or -1");

  // Zero pattern must already be symmetric, and for eps = -1 paired entries
  // must carry opposite signs (d is positive).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if ((m[i][j] == 0) != (m[j][i] == 0)) return std::nullopt;
      if (m[i][j] != 0) {
        bool same_sign = (m[i][j] > 0) == (m[j][i] > 0);
        if (eps == 1 && !same_sign) return std::nullopt;
        if (eps == -1 && same_sign) return std::nullopt;
      }
    }
  if (eps == -1)
    for (int i = 0; i < n; ++i)
      if (m[i][i] != 0) return std::nullopt;

  // Propagate the ratio d_j / d_i = eps * m_ij / m_ji along edges of each
  // connected component, then clear denominators and reduce.
  std::vector<mpq_class> d(n, 0);
  for (int root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    std::vector<int> comp{root};
    d[root] = 1;
    for (size_t q = 0; q < comp.size(); ++q) {
      int i = comp[q];
      for (int j = 0; j < n; ++j) {
        if (j == i || m[i][j] == 0) continue;
        mpq_class ratio(static_cast<long>(eps * m[i][j]));
        ratio /= mpq_class(static_cast<long>(m[j][i]));
        mpq_class dj = d[i] * ratio;
        if (d[j] == 0) {
          d[j] = dj;
          comp.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;  // inconsistent cycle
        }
      }
    }
    mpz_class lcm_den = 1;
    for (int i : comp) lcm_den = lcm(lcm_den, d[i].get_den());
    mpz_class gcd_num = 0;
    for (int i : comp) {
      mpq_class scaled = d[i] * lcm_den;
      gcd_num = gcd(gcd_num, scaled.get_num());
    }
    for (int i : comp) d[i] = d[i] * lcm_den / gcd_num;
  }

  std::vector<long long> out(n);
  for (int i = 0; i < n; ++i) {
    if (d[i] <= 0 || !d[i].get_num().fits_slong_p()) return std::nullopt;
    out[i] = d[i].get_num().get_si();
  }
  // Final check covers entries the propagation never paired directly.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (out[i] * m[i][j] != eps * out[j] * m[j][i]) return std::nullopt;
  return out;
}

std::vector<long long> symmetrizer(const CartanMatrix& c) {
  std::vector<std::vector<long long>> m(c.rank(), std::vector<long long>(c.rank()));
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) m[i][j] = c.entries()[i][j];
  auto d = symmetrizing_diagonal(m, 1);
  if (!d) throw Error("Cartan matrix of " + c.type().str() + " not symmetrizable");
  return *d;
}

Weight reflect(const CartanMatrix& c, int i, Weight lambda) {
  const int n = c.rank();
  if (i < 1 || i > n) throw InputError("reflection index out of range");
  if (static_cast<int>(lambda.size()) != n)
    throw InputError("weight rank mismatch");
  const long long li = lambda[i - 1];
  for (int j = 1; j <= n; ++j) lambda[j - 1] -= li * c.a(j, i);
  return lambda;
}

}  // namespace clift
