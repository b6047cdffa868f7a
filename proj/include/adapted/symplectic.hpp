#pragma once

#include <vector>

#include "adapted/intmatrix.hpp"

namespace adapted {

/// Unimodular change of basis P with P^T B P = J for a skew form B.
struct SymplecticChange {
  IntMatrix P;
  IntMatrix P_inv;
  IntMatrix J;
};

/// Hyperbolic pairs interleaved: ((0,1),(-1,0)) blocks down the diagonal.
IntMatrix paired_form(std::size_t n);
/// Halves arrangement: ((0, I), (-I, 0)).
IntMatrix blocks_form(std::size_t n);
/// Permutation taking the paired arrangement to the halves arrangement:
/// new index -> paired index.
std::vector<std::size_t> paired_to_blocks_permutation(std::size_t n);

/// Integer normalization of a unimodular skew form to the paired canonical
/// form by congruence. Deterministic: pivots are chosen by smallest nonzero
/// absolute value, ties broken by lowest row then column.
SymplecticChange symplectic_basis(const IntMatrix& b);

/// P^-1 M P, exact.
IntMatrix transform_action(const IntMatrix& m, const SymplecticChange& change);

bool is_symplectic(const IntMatrix& m, const IntMatrix& j);
bool preserves_form(const IntMatrix& m, const IntMatrix& b);

}  // namespace adapted
