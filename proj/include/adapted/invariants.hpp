#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "adapted/errors.hpp"

namespace adapted {

using i64 = long long;

/// Conjugacy invariants of a prime-order conformal automorphism class:
/// order p, fixed point count t, complementary rotation numbers n_i,
/// rotation numbers s_i (elementwise inverses of n mod p), multiplicities
/// m_j = #{i : n_i = j}, quotient genus g0 and total genus g.
///
/// Values are immutable after construction; every operation returns a new
/// instance.
struct PrimeOrderData {
  i64 p = 0;
  i64 t = 0;
  std::vector<i64> n;
  std::vector<i64> s;
  std::vector<i64> m;
  i64 g0 = 0;
  i64 g = 0;
  // input_index[i] = position of n[i] in the caller's original vector, so
  // output can be reported in the user's fixed-point order after sorting.
  std::vector<std::size_t> input_index;

  bool fixed_point_free() const { return t == 0; }
  bool sorted_normalized() const;
};

bool is_prime(i64 p);
i64 mod_inverse(i64 a, i64 p);
i64 mod_nonneg(i64 a, i64 p);

PrimeOrderData validate(i64 p, const std::vector<i64>& n, i64 g0);
PrimeOrderData validate_from_multiplicities(i64 p, const std::vector<i64>& m, i64 g0);
PrimeOrderData validate_fixed_point_free(i64 p, i64 g0);

/// Sorts n non-decreasingly (the canonical conjugacy representative) and
/// records the permutation; m is unchanged.
PrimeOrderData normalize_conjugacy(const PrimeOrderData& d);

/// Invariants of h^k: each n_i becomes k*n_i mod p, then renormalized.
PrimeOrderData power_class(const PrimeOrderData& d, i64 k);

/// Derives all fields like validate() but skips the g >= 2 bound. Structural
/// checks (primality, ranges, rotation sum) still apply. Intended for callers
/// that explicitly want degenerate low-genus data, e.g. counting experiments.
PrimeOrderData make_unchecked(i64 p, const std::vector<i64>& n, i64 g0);

}  // namespace adapted
