#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adapted/basis.hpp"
#include "adapted/symplectic.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace adapted;

TEST_CASE("already canonical forms") {
  IntMatrix j = paired_form(4);
  SymplecticChange change = symplectic_basis(j);
  CHECK(change.P == IntMatrix::identity(4));
  CHECK(change.J == j);

  IntMatrix flipped(2, 2);
  flipped.at(0, 1) = -1;
  flipped.at(1, 0) = 1;
  SymplecticChange fc = symplectic_basis(flipped);
  IntMatrix swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  CHECK(fc.P == swap);
  CHECK(fc.P.transposed() * flipped * fc.P == paired_form(2));
}

TEST_CASE("normalization of scrambled forms") {
  for (std::size_t n : {4, 6, 10}) {
    for (unsigned long long seed = 1; seed <= 5; ++seed) {
      IntMatrix b = testing::scrambled_paired_form(n, seed);
      SymplecticChange change = symplectic_basis(b);
      CHECK(change.P.transposed() * b * change.P == paired_form(n));
      i64 det = change.P.determinant();
      CHECK((det == 1 || det == -1));
      CHECK(change.P * change.P_inv == IntMatrix::identity(n));
      // deterministic
      CHECK(symplectic_basis(b).P == change.P);
    }
  }
}

TEST_CASE("rejects invalid forms") {
  IntMatrix odd(3, 3);
  CHECK_THROWS_AS(symplectic_basis(odd), validation_error);

  IntMatrix not_skew = IntMatrix::identity(4);
  CHECK_THROWS_AS(symplectic_basis(not_skew), validation_error);

  IntMatrix doubled(2, 2);
  doubled.at(0, 1) = 2;
  doubled.at(1, 0) = -2;
  CHECK_THROWS_AS(symplectic_basis(doubled), validation_error);

  IntMatrix degenerate(4, 4);
  degenerate.at(0, 1) = 1;
  degenerate.at(1, 0) = -1;
  CHECK_THROWS_AS(symplectic_basis(degenerate), validation_error);
}

TEST_CASE("golden class normalizes and conjugates") {
  PrimeOrderData d = testing::golden_data();
  IntMatrix b = intersection_matrix(d);
  CHECK(b == testing::golden_intersection());
  SymplecticChange change = symplectic_basis(b);
  CHECK(change.P.transposed() * b * change.P == paired_form(6));

  IntMatrix act = action_matrix(d);
  IntMatrix t = transform_action(act, change);
  CHECK(is_symplectic(t, change.J));
  CHECK(t.pow(3) == IntMatrix::identity(6));

  CHECK(transform_action(IntMatrix::identity(6), change) == IntMatrix::identity(6));
  CHECK_THROWS_AS(transform_action(IntMatrix::identity(4), change), validation_error);
}

TEST_CASE("is_symplectic") {
  CHECK(is_symplectic(IntMatrix::identity(6), paired_form(6)));
  IntMatrix doubled = IntMatrix::identity(4);
  doubled.at(0, 0) = 2;
  doubled.at(1, 1) = 2;
  CHECK_FALSE(is_symplectic(doubled, paired_form(4)));

  // doubled permutation block against the halves arrangement
  IntMatrix mp(3, 3);
  mp.at(0, 1) = 1;
  mp.at(1, 2) = 1;
  mp.at(2, 0) = 1;
  IntMatrix mm(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      mm.at(i, j) = mp.at(i, j);
      mm.at(3 + i, 3 + j) = mp.at(i, j);
    }
  CHECK(is_symplectic(mm, blocks_form(6)));
  CHECK_THROWS_AS(is_symplectic(mp, paired_form(2)), validation_error);
}

TEST_CASE("preserves_form") {
  PrimeOrderData d = testing::golden_data();
  CHECK(preserves_form(action_matrix(d), intersection_matrix(d)));
  CHECK(preserves_form(IntMatrix::identity(6), testing::golden_intersection()));
  IntMatrix mp(3, 3);
  CHECK_THROWS_AS(preserves_form(mp, paired_form(2)), validation_error);
}

TEST_CASE("paired and halves arrangements") {
  std::vector<std::size_t> perm = paired_to_blocks_permutation(8);
  CHECK(paired_form(8).permuted(perm) == blocks_form(8));
}

TEST_CASE("published symplectic action candidate, desk verdict") {
  // The printed candidate contains at least one sign anomaly; record whether
  // it satisfies the form identity rather than asserting it.
  IntMatrix candidate = testing::golden_symplectic_action_candidate();
  IntMatrix j = blocks_form(6);
  bool as_printed = candidate.transposed() * j * candidate == j;
  bool transposed = candidate * j * candidate.transposed() == j;
  MESSAGE("published candidate satisfies T^T J T = J: ", as_printed,
          "; with rows as images: ", transposed);
  CHECK(true);  // verdict is informational; our own transform must pass instead
}
