// Wall-clock comparison of the serial reference loops against the
// OpenMP-parallel ones, on the four kernels that fan out over walks or
// columns.  Both policies must produce the same result; the serial runs
// double as a correctness reference.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clift/fixtures.hpp"
#include "clift/sl_oracle.hpp"

using namespace clift;

namespace {

struct Workload {
  std::string name;
  // Returns a work count (checks or nodes); must not depend on the policy.
  std::function<long long(Exec)> run;
};

double time_ms(const std::function<void()>& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel timing of the verification kernels"};
  int reps = 3;
  app.add_option("--reps", reps, "repetitions per cell; best time wins")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::vector<Workload> workloads;

  {
    auto c = cartan_matrix(dynkin('A', 3));
    auto s = schubert_seed(c, longest_word(c));
    auto walks = all_walks(s.matrix.mutable_positions(), 7);
    workloads.push_back({"laurent walks, rank-3 cell, depth 7",
                         [s, walks](Exec e) {
                           auto rep = check_laurent(s, walks, e);
                           return rep.ok() ? rep.checks : -1;
                         }});
  }
  {
    auto seed = fixtures::kronecker_formal_seed();
    workloads.push_back({"exchange graph, rank-2 infinite type, 30 seeds",
                         [seed](Exec e) {
                           auto g = enumerate_exchange_graph(seed, 30, e);
                           return (long long)g.nodes.size();
                         }});
  }
  {
    auto c = cartan_matrix(dynkin('A', 6));
    CellSpec cell{dynkin('A', 6), longest_word(c), {1, 2, 3, 4, 5, 6}};
    auto s = realize_seed(c, cell);
    workloads.push_back({"exchange identities, 7x7 realization",
                         [s](Exec e) {
                           auto rep = verify_exchange_identities(s, e);
                           return rep.ok() ? rep.checks : -1;
                         }});
  }
  {
    auto c = cartan_matrix(dynkin('B', 3));
    auto base = schubert_seed(c, fixtures::b3_cell().word);
    auto l = lift_seed(base, fixtures::b3_degrees(), {3},
                       LiftConvention::Homogeneous);
    auto walks = random_walks(base.matrix.mutable_positions(), 20000, 12, 7);
    workloads.push_back({"lift commutation, 20000 matrix walks",
                         [base, l, walks](Exec e) {
                           CommutationOptions opt;
                           opt.check_vars = false;
                           opt.exec = e;
                           auto rep = verify_commutation(base, l, walks, opt);
                           return rep.ok() ? rep.checks : -1;
                         }});
  }

  std::printf("%-45s %12s %12s %9s %12s\n", "workload", "serial ms",
              "parallel ms", "speedup", "work");
  bool consistent = true;
  for (const auto& w : workloads) {
    double best_s = -1, best_p = -1;
    long long units_s = 0, units_p = 0;
    for (int r = 0; r < reps; ++r) {
      double ts = time_ms([&] { units_s = w.run(Exec::Serial); });
      double tp = time_ms([&] { units_p = w.run(Exec::Parallel); });
      if (best_s < 0 || ts < best_s) best_s = ts;
      if (best_p < 0 || tp < best_p) best_p = tp;
    }
    bool agree = units_s == units_p && units_s > 0;
    consistent = consistent && agree;
    std::printf("%-45s %12.1f %12.1f %8.2fx %12lld%s\n", w.name.c_str(),
                best_s, best_p, best_s / best_p, units_s,
                agree ? "" : "  MISMATCH");
  }
  if (!consistent) {
    std::fprintf(stderr, "policies disagree\n");
    return 1;
  }
  return 0;
}
