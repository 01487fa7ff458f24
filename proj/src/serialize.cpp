#include "clift/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace clift {

std::vector<int> grouped_row_order(const ExtendedExchangeMatrix& m) {
  auto order = m.mutable_positions();
  auto frozen = m.frozen_positions();
  order.insert(order.end(), frozen.begin(), frozen.end());
  return order;
}

namespace {

std::vector<int> effective_order(const ExtendedExchangeMatrix& m,
                                 const std::vector<int>& row_order) {
  if (row_order.empty()) {
    std::vector<int> natural(m.rows());
    for (int i = 0; i < m.rows(); ++i) natural[i] = i + 1;
    return natural;
  }
  if (static_cast<int>(row_order.size()) != m.rows())
    throw InputError("row order must list every row once");
  std::vector<bool> seen(m.rows(), false);
  for (int k : row_order) {
    if (k < 1 || k > m.rows() || seen[k - 1])
      throw InputError("row order must list every row once");
    seen[k - 1] = true;
  }
  return row_order;
}

}  // namespace

std::string format_matrix(const ExtendedExchangeMatrix& m,
                          const std::vector<int>& row_order) {
  auto order = effective_order(m, row_order);
  std::ostringstream os;
  os << m.rows() << " x " << m.cols() << "  columns at positions (";
  auto pos = m.mutable_positions();
  for (size_t i = 0; i < pos.size(); ++i) {
    if (i) os << ", ";
    os << pos[i];
  }
  os << ")\n";

  size_t width = 1;
  for (const auto& row : m.b)
    for (long long e : row) width = std::max(width, std::to_string(e).size());
  size_t poswidth = std::to_string(m.rows()).size();

  for (int k : order) {
    os << " [" << std::setw(static_cast<int>(poswidth)) << k << "] "
       << (m.row_is_mutable(k - 1) ? "*" : " ");
    for (int c = 0; c < m.cols(); ++c)
      os << " " << std::setw(static_cast<int>(width)) << m.b[k - 1][c];
    if (!m.row_labels[k - 1].empty()) os << "  " << m.row_labels[k - 1];
    os << "\n";
  }
  return os.str();
}

std::string format_seed(const Seed& s, const std::vector<int>& row_order) {
  auto order = effective_order(s.matrix, row_order);
  std::ostringstream os;
  os << format_matrix(s.matrix, row_order);
  os << "variables\n";
  size_t poswidth = std::to_string(s.matrix.rows()).size();
  for (int k : order)
    os << " [" << std::setw(static_cast<int>(poswidth)) << k << "] "
       << s.vars[k - 1].str() << "\n";
  return os.str();
}

std::string format_lifted(const LiftedSeed& l) {
  std::ostringstream os;
  os << format_seed(l.seed);
  os << "base rows: " << l.base_rows << "\n";
  os << "J: (";
  for (size_t i = 0; i < l.J.size(); ++i) {
    if (i) os << ", ";
    os << l.J[i];
  }
  os << ")\n";
  os << "convention: " << convention_str(l.convention) << "\n";
  os << "degrees\n";
  size_t poswidth = std::to_string(l.seed.matrix.rows()).size();
  for (int k = 1; k <= l.seed.matrix.rows(); ++k)
    os << " [" << std::setw(static_cast<int>(poswidth)) << k << "] "
       << weight_str(l.degrees[k - 1]) << "\n";
  return os.str();
}

}  // namespace clift
