#pragma once

#include <string>
#include <vector>

#include "clift/cluster.hpp"
#include "clift/lift.hpp"

namespace clift {

// Deterministic text rendering used by the CLI and the golden tests.

// Row order for printing: a permutation of the 1-based row positions.
// Natural order when empty.
std::string format_matrix(const ExtendedExchangeMatrix& m,
                          const std::vector<int>& row_order = {});
std::string format_seed(const Seed& s, const std::vector<int>& row_order = {});
std::string format_lifted(const LiftedSeed& l);

// Mutable positions first, then frozen positions, each ascending.
std::vector<int> grouped_row_order(const ExtendedExchangeMatrix& m);

}  // namespace clift
