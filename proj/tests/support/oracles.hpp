#pragma once

#include <vector>

#include "adapted/basis.hpp"
#include "adapted/intmatrix.hpp"
#include "adapted/invariants.hpp"
#include "adapted/rewriter.hpp"
#include "adapted/words.hpp"

namespace adapted::testing {

// Intersection matrix of the closed surface glued from a single polygon with
// the given boundary word (each generator exactly once with each sign): the
// one-vertex CW structure determines the rotation of edge ends around the
// vertex, and the pairing is read off by interleaving there. Entirely
// independent of the formula-based route in the basis module.
IntMatrix relator_intersection(const Word& relator, const std::vector<GeneratorSymbol>& order);

// relator_intersection over the adapted-basis ordering of d.
IntMatrix relator_intersection_for(const PrimeOrderData& d);

// Random unimodular congruence Q^T J Q of the paired form, for exercising the
// normalization on inputs with larger entries.
IntMatrix scrambled_paired_form(std::size_t n, unsigned long long seed);

}  // namespace adapted::testing
