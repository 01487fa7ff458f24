#pragma once

#include <map>
#include <string>
#include <vector>

#include "clift/cluster.hpp"
#include "clift/schubert.hpp"

namespace clift {

// Sign convention for the appended rows of a lifted exchange matrix.
//
//   Homogeneous: row j gets -sum_i b[i][c] * deg_j(x_i), which makes every
//   column's degree defect vanish and the lifted exchange relations
//   homogeneous.
//
//   Plain: the unnegated sums +sum_i b[i][c] * deg_j(x_i), the entrywise
//   negation of Homogeneous.  Worked examples in the literature print this
//   orientation, so it is kept selectable; columns then carry a nonzero
//   defect and realized lifted identities fail, which the verifiers report
//   rather than hide.
enum class LiftConvention { Homogeneous, Plain };

std::string convention_str(LiftConvention c);

// Seed on the total space over the cell: the base seed's rows, then one
// frozen row per j in J whose variable is the j-th principal minor of
// degree w_j.  base_rows of the matrix are the original ones; projection
// maps every lifted variable name to its restriction on the cell (the
// principal minors go to 1).
struct LiftedSeed {
  Seed seed;
  int base_rows = 0;
  std::vector<int> J;
  DegreeAssignment degrees;  // per lifted row
  LiftConvention convention = LiftConvention::Homogeneous;
  std::map<std::string, LaurentPoly> projection;
};

void validate_lifted(const LiftedSeed& l);

// The |J| appended rows, computed from the base matrix and base degrees.
std::vector<std::vector<long long>> lift_rows(const ExtendedExchangeMatrix& m,
                                              const DegreeAssignment& degrees,
                                              const std::vector<int>& J,
                                              LiftConvention conv);

// Formal lift: base variables x_k become symbols X_k, one frozen symbol
// D_j of degree w_j is appended per j in J, and the projection sends
// X_k -> x_k, D_j -> 1.  degrees are the base degrees, one weight per row.
LiftedSeed lift_seed(const Seed& base, const DegreeAssignment& degrees,
                     const std::vector<int>& J, LiftConvention conv);

// Lift with caller-supplied variables: lifted[k] restricts to base var k
// under the projection, delta[j] restricts to 1.
LiftedSeed lifted_seed_from(const Seed& base, const DegreeAssignment& degrees,
                            const std::vector<int>& J, LiftConvention conv,
                            std::vector<LaurentPoly> lifted_vars,
                            std::vector<LaurentPoly> delta_vars,
                            std::map<std::string, LaurentPoly> projection);

// Drop the appended rows and apply the projection to the variables.
Seed project(const LiftedSeed& l);

// Mutation of the lifted seed at a base position, with degree propagation.
LiftedSeed mutate_lifted(const LiftedSeed& l, int k);
LiftedSeed mutate_lifted_sequence(const LiftedSeed& l, const std::vector<int>& ks);

struct CommutationOptions {
  // When false, walks run on matrices and degrees alone (no polynomial
  // arithmetic), so deep random walks stay cheap.
  bool check_vars = true;
  bool check_grading = true;  // defect must stay zero under Homogeneous
  Exec exec = Exec::Serial;
};

// Along every walk, mutating the lifted seed and then projecting must
// agree with mutating the base seed directly.  project(l) must equal base
// up to labels beforehand (InputError otherwise).
Report verify_commutation(const Seed& base, const LiftedSeed& l,
                          const std::vector<std::vector<int>>& walks,
                          const CommutationOptions& opt = {});

}  // namespace clift
