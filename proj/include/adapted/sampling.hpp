#pragma once

#include <optional>
#include <random>
#include <vector>

#include "adapted/invariants.hpp"
#include "adapted/words.hpp"

namespace adapted {

/// All non-decreasing length-t vectors over (0, p) whose sum is 0 mod p —
/// the conjugacy classes with t fixed points, one representative each.
std::vector<std::vector<i64>> all_n_multisets(i64 p, i64 t);

/// Uniformly random reduced word in the base alphabet lying in the kernel of
/// the quotient map, of length <= max_len (rejection sampled).
BaseWord random_kernel_word(std::mt19937_64& rng, const PrimeOrderData& d, std::size_t max_len);

/// Random valid n-vector for (p, t), sorted; nullopt if none exists.
std::optional<std::vector<i64>> random_n_vector(std::mt19937_64& rng, i64 p, i64 t);

}  // namespace adapted
