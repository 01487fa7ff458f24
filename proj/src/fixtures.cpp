#include "clift/fixtures.hpp"

namespace clift::fixtures {

CellSpec b3_cell() {
  return CellSpec{dynkin('B', 3), Word{{3, 2, 1, 3, 2, 3}}, {3}};
}

DegreeAssignment b3_degrees() {
  // Degrees of the six minors: w3 exactly on the positions whose label
  // carries w3, and those are 1, 4, 6.
  Weight w3{0, 0, 1};
  Weight zero{0, 0, 0};
  return {w3, zero, zero, w3, zero, w3};
}

CellSpec sl3_cell() {
  return CellSpec{dynkin('A', 2), Word{{1, 2, 1}}, {1, 2}};
}

CellSpec sl4_cell() {
  return CellSpec{dynkin('A', 3), Word{{1, 2, 1, 3, 2, 1}}, {1, 2, 3}};
}

CellSpec sl5_cell() {
  return CellSpec{dynkin('A', 4), Word{{1, 2, 1, 3, 2, 1, 4, 3, 2, 1}}, {1, 2, 3, 4}};
}

CellSpec a3_cell() {
  return sl4_cell();
}

CellSpec b2_cell() {
  return CellSpec{dynkin('B', 2), Word{{1, 2, 1, 2}}, {1, 2}};
}

namespace {

Seed rank2_seed(long long b12, long long b21) {
  ExtendedExchangeMatrix m;
  m.b = {{0, b12}, {b21, 0}};
  m.row_labels = {"", ""};
  m.mutable_rows = {0, 1};
  return formal_seed(std::move(m));
}

}  // namespace

Seed a2_formal_seed() {
  return rank2_seed(1, -1);
}

Seed a1_formal_seed() {
  ExtendedExchangeMatrix m;
  m.b = {{0}};
  m.row_labels = {""};
  m.mutable_rows = {0};
  return formal_seed(std::move(m));
}

Seed kronecker_formal_seed() {
  return rank2_seed(2, -2);
}

}  // namespace clift::fixtures
