#include <random>
#include <set>
#include <vector>

#include "clift/fixtures.hpp"
#include "clift/schubert.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace clift;

TEST_SUITE("schubert") {

TEST_CASE("exchange matrix of the doubly laced example") {
  auto c = cartan_matrix(dynkin('B', 3));
  Word w{{3, 2, 1, 3, 2, 3}};
  auto m = build_Bw(c, w);

  CHECK(m.b == std::vector<std::vector<long long>>{{0, -2, 1},
                                                   {1, 0, -1},
                                                   {0, 1, 0},
                                                   {-1, 2, 0},
                                                   {0, -1, 1},
                                                   {0, 0, -1}});
  CHECK(m.mutable_rows == std::vector<int>{0, 1, 3});
  CHECK(m.mutable_positions() == std::vector<int>{1, 2, 4});
  CHECK(m.frozen_positions() == std::vector<int>{3, 5, 6});
}

TEST_CASE("variable labels of the doubly laced example") {
  auto c = cartan_matrix(dynkin('B', 3));
  Word w{{3, 2, 1, 3, 2, 3}};
  auto labels = variable_labels(c, w);
  REQUIRE(labels.size() == 6);

  CHECK(labels[0].str() == "D(w3, s3 w3)");
  CHECK(labels[1].str() == "D(w2, s3 s2 w2)");
  CHECK(labels[5].str() == "D(w3, s3 s2 s1 s3 s2 s3 w3)");

  const std::vector<Weight> targets{{0, 1, -1}, {1, 1, -2}, {0, 1, -2},
                                    {1, 0, -1}, {1, 0, -2}, {0, 0, -1}};
  const std::vector<bool> frozen{false, false, true, false, true, true};
  for (int k = 0; k < 6; ++k) {
    CHECK(labels[k].i == w.at(k + 1));
    CHECK(labels[k].prefix ==
          std::vector<int>(w.letters.begin(), w.letters.begin() + k + 1));
    CHECK(labels[k].target == targets[k]);
    CHECK(labels[k].frozen == frozen[k]);
  }
}

TEST_CASE("frozen classification") {
  Word w{{3, 2, 1, 3, 2, 3}};
  auto split = classify_frozen(w);
  CHECK(split.mutable_pos == std::vector<int>{1, 2, 4});
  CHECK(split.frozen_pos == std::vector<int>{3, 5, 6});

  auto one = classify_frozen(Word{{1}});
  CHECK(one.mutable_pos.empty());
  CHECK(one.frozen_pos == std::vector<int>{1});

  auto none = classify_frozen(Word{{}});
  CHECK(none.mutable_pos.empty());
  CHECK(none.frozen_pos.empty());
}

TEST_CASE("rank two cell") {
  auto c = cartan_matrix(dynkin('A', 2));
  Word w{{1, 2, 1}};
  auto m = build_Bw(c, w);
  CHECK(m.b == std::vector<std::vector<long long>>{{0}, {1}, {-1}});
  CHECK(m.mutable_rows == std::vector<int>{0});

  auto labels = variable_labels(c, w);
  CHECK(labels[0].str() == "D(w1, s1 w1)");
  CHECK(labels[0].target == Weight{-1, 1});
  CHECK(labels[1].str() == "D(w2, s1 s2 w2)");
  CHECK(labels[2].str() == "D(w1, s1 s2 s1 w1)");
  CHECK(labels[2].target == Weight{0, -1});
  CHECK_FALSE(labels[0].frozen);
  CHECK(labels[1].frozen);
  CHECK(labels[2].frozen);
}

TEST_CASE("non reduced words are rejected") {
  auto c = cartan_matrix(dynkin('A', 2));
  CHECK_THROWS_AS(build_Bw(c, Word{{1, 1}}), InputError);
  CHECK_THROWS_AS(variable_labels(c, Word{{2, 1, 2, 1}}), InputError);
  CHECK_THROWS_AS(schubert_seed(c, Word{{1, 2, 1, 2}}), InputError);
}

TEST_CASE("cell validation") {
  auto c = cartan_matrix(dynkin('B', 3));
  CellSpec cell{dynkin('B', 3), Word{{3, 2, 1}}, {3}};
  CHECK_NOTHROW(validate_cell(c, cell));

  auto wrong_type = cell;
  wrong_type.type = dynkin('C', 3);
  CHECK_THROWS_AS(validate_cell(c, wrong_type), InputError);

  auto empty_j = cell;
  empty_j.J = {};
  CHECK_THROWS_AS(validate_cell(c, empty_j), InputError);

  auto bad_j = cell;
  bad_j.J = {0, 3};
  CHECK_THROWS_AS(validate_cell(c, bad_j), InputError);

  auto dup_j = cell;
  dup_j.J = {3, 3};
  CHECK_THROWS_AS(validate_cell(c, dup_j), InputError);

  auto not_reduced = cell;
  not_reduced.word = Word{{3, 3}};
  CHECK_THROWS_AS(validate_cell(c, not_reduced), InputError);

  // Bundled fixtures describe valid cells.
  for (auto fix : {fixtures::b3_cell(), fixtures::sl3_cell(), fixtures::sl4_cell(),
                   fixtures::sl5_cell(), fixtures::a3_cell(), fixtures::b2_cell()}) {
    auto cm = cartan_matrix(fix.type);
    CHECK_NOTHROW(validate_cell(cm, fix));
  }
}

TEST_CASE("structural properties on random reduced words") {
  std::mt19937_64 rng(31);
  const auto types = {dynkin('A', 3), dynkin('B', 3), dynkin('G', 2)};
  for (const auto& ty : types) {
    auto c = cartan_matrix(ty);
    auto d = symmetrizer(c);
    for (int trial = 0; trial < 40; ++trial) {
      auto w = clift::testing::random_reduced_word(rng, c, 10);
      if (w.length() == 0) continue;
      auto m = build_Bw(c, w);
      Occurrences occ(w);

      // One column per position whose letter reappears.
      int expected_cols = 0;
      for (int k = 1; k <= w.length(); ++k)
        if (occ.s(k).finite()) ++expected_cols;
      CHECK(m.cols() == expected_cols);
      CHECK(m.rows() == w.length());

      // The defining +-1 entries of each column.
      for (int k : m.mutable_positions()) {
        int col = *m.col_of(k);
        CHECK(m.at(occ.s(k).pos() - 1, col) == -1);
        if (occ.p(k).finite()) CHECK(m.at(occ.p(k).pos() - 1, col) == 1);
        CHECK(m.at(k - 1, col) == 0);
      }

      // Weighting rows by the symmetrizer of the letters makes the
      // principal block skew.
      for (int j : m.mutable_positions())
        for (int k : m.mutable_positions()) {
          long long dj = d[w.at(j) - 1];
          long long dk = d[w.at(k) - 1];
          CHECK(dj * m.at(j - 1, *m.col_of(k)) == -dk * m.at(k - 1, *m.col_of(j)));
        }
      CHECK(is_skew_symmetrizable(m.principal_block()).has_value());

      // Labels stay consistent with the occurrence data.
      auto labels = variable_labels(c, w);
      for (int k = 1; k <= w.length(); ++k)
        CHECK(labels[k - 1].frozen == !occ.s(k).finite());
    }
  }
}

TEST_CASE("formal seed on a cell") {
  auto c = cartan_matrix(dynkin('B', 3));
  Word w{{3, 2, 1, 3, 2, 3}};
  auto s = schubert_seed(c, w);
  CHECK(is_formal(s));
  CHECK(s.matrix.b == build_Bw(c, w).b);
  CHECK(s.vars.size() == 6);

  auto labels = variable_labels(c, w);
  for (int k = 0; k < 6; ++k) CHECK(s.matrix.row_labels[k] == labels[k].str());

  // The seed mutates cleanly at each mutable position.
  for (int k : s.matrix.mutable_positions()) CHECK_NOTHROW(mutate_seed(s, k));
}

}  // TEST_SUITE
