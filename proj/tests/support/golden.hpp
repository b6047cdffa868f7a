#pragma once

#include <vector>

#include "adapted/intmatrix.hpp"
#include "adapted/invariants.hpp"
#include "adapted/words.hpp"

namespace adapted::testing {

// The worked p = 3, t = 5, n = (1,1,2,1,1), g0 = 0 class.
inline PrimeOrderData golden_data() {
  return validate(3, {1, 1, 2, 1, 1}, 0);
}

// Its 6x6 intersection matrix over the ordering
// X_{1,3}, h(X_{1,3}), X_{1,4}, h(X_{1,4}), X_{2,1}, h(X_{2,1}).
inline IntMatrix golden_intersection() {
  const i64 rows[6][6] = {
      {0, 1, 1, 0, 1, -1},  {-1, 0, -1, 1, 0, 1}, {-1, 1, 0, 1, 1, -1},
      {0, -1, -1, 0, 0, 1}, {-1, 0, -1, 0, 0, 0}, {1, -1, 1, -1, 0, 0},
  };
  IntMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = rows[i][j];
  return m;
}

// The single relator for that class, with a = X_3, b = X_4, c = X_5:
// h(a) h(b) h(c) a b c h(a)^-1 a^-1 h(b)^-1 b^-1 c^-1 h(c)^-1.
inline std::vector<Letter> golden_relator() {
  auto a = [](int k) { return gen_X(3, k); };
  auto b = [](int k) { return gen_X(4, k); };
  auto c = [](int k) { return gen_X(5, k); };
  return {
      {a(1), 1},  {b(1), 1},  {c(1), 1},  {a(0), 1},  {b(0), 1},  {c(0), 1},
      {a(1), -1}, {a(0), -1}, {b(1), -1}, {b(0), -1}, {c(0), -1}, {c(1), -1},
  };
}

// The published symplectic action candidate for the same class, over the
// reordered basis; evaluated against T^T J T = J, verdict logged either way.
inline IntMatrix golden_symplectic_action_candidate() {
  const i64 rows[6][6] = {
      {0, 1, 0, -1, 0, 0}, {0, -1, 0, 1, 0, -1}, {1, -1, -1, 0, -1, -1},
      {1, 0, 0, -1, 0, -1}, {0, 1, 1, -1, 0, -1}, {0, 1, 0, 0, 0, 0},
  };
  IntMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace adapted::testing
