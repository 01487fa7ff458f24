#pragma once

#include "clift/lift.hpp"
#include "clift/schubert.hpp"

namespace clift::fixtures {

// Rank-3 doubly laced cell used as the worked example throughout the test
// suite: word (3,2,1,3,2,3) inside B3, flag data J = {3}.
CellSpec b3_cell();
// Degrees of its six variables: w3 on the positions labeled by w3.
DegreeAssignment b3_degrees();

// SL3 cell of the longest word, complete flag data.
CellSpec sl3_cell();
// SL4 / SL5 cells of the longest words, complete flag data.
CellSpec sl4_cell();
CellSpec sl5_cell();

// A3 cell of the longest word with J = {1,2,3}.
CellSpec a3_cell();
// Doubly laced rank-2 cell of the longest word (1,2,1,2).
CellSpec b2_cell();

// Rank-2 principal seeds for mutation combinatorics.
Seed a2_formal_seed();        // block ((0,1),(-1,0)), 5 clusters
Seed a1_formal_seed();        // block ((0)), 2 clusters
Seed kronecker_formal_seed(); // block ((0,2),(-2,0)), infinitely many

}  // namespace clift::fixtures
