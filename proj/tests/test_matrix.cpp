#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adapted/intmatrix.hpp"
#include "adapted/symplectic.hpp"
#include "support/oracles.hpp"

using namespace adapted;

TEST_CASE("determinant of small matrices") {
  CHECK(IntMatrix::identity(4).determinant() == 1);
  CHECK(paired_form(6).determinant() == 1);
  CHECK(blocks_form(8).determinant() == 1);

  IntMatrix scaled(2, 2);
  scaled.at(0, 1) = 2;
  scaled.at(1, 0) = -2;
  CHECK(scaled.determinant() == 4);

  IntMatrix singular(3, 3);
  singular.at(0, 0) = 1;
  singular.at(1, 0) = 2;
  CHECK(singular.determinant() == 0);
}

TEST_CASE("unimodular inverse round trips") {
  for (unsigned long long seed : {1ULL, 2ULL, 3ULL}) {
    IntMatrix b = testing::scrambled_paired_form(8, seed);
    // b is a congruence image of the paired form; build a unimodular matrix
    // from its normalization and invert it.
    SymplecticChange change = symplectic_basis(b);
    IntMatrix inv = change.P.inverse_unimodular();
    CHECK(inv * change.P == IntMatrix::identity(8));
    CHECK(change.P * inv == IntMatrix::identity(8));
    CHECK(inv == change.P_inv);
  }
  IntMatrix not_unimodular(2, 2);
  not_unimodular.at(0, 0) = 2;
  not_unimodular.at(1, 1) = 1;
  CHECK_THROWS_AS(not_unimodular.inverse_unimodular(), validation_error);
}

TEST_CASE("permutation conjugation matches the permutation matrix") {
  IntMatrix j = paired_form(6);
  std::vector<std::size_t> perm = paired_to_blocks_permutation(6);
  IntMatrix via_matrix = permutation_matrix(perm);
  CHECK(via_matrix.transposed() * j * via_matrix == j.permuted(perm));
  CHECK(j.permuted(perm) == blocks_form(6));
}

TEST_CASE("power and transpose") {
  IntMatrix n(2, 2);
  n.at(0, 1) = -1;
  n.at(1, 0) = 1;
  n.at(1, 1) = -1;  // order-3 companion block
  CHECK(n.pow(3) == IntMatrix::identity(2));
  CHECK(n.pow(0) == IntMatrix::identity(2));
  CHECK(n.transposed().transposed() == n);
}
