#pragma once

#include <span>
#include <utility>
#include <vector>

#include "adapted/invariants.hpp"
#include "adapted/words.hpp"

namespace adapted {

/// Presentation of the quotient-surface group: the a_i, b_i, x_j with the
/// long relation x_1...x_t [a_1,b_1]...[a_g0,b_g0] and the torsion relations
/// x_j^p (no x generators and no torsion when t = 0).
struct BasePresentation {
  std::vector<BaseSymbol> generators;
  std::vector<BaseWord> relators;
};

/// Presentation on the rewritten subgroup generators.
struct Presentation {
  std::vector<GeneratorSymbol> generators;
  std::vector<Word> relators;
};

BasePresentation base_presentation(const PrimeOrderData& d);
BaseWord long_relator(const PrimeOrderData& d);

/// Image of w under the quotient map onto Z_p (a_i, b_i -> 0; x_j -> n_j;
/// for t = 0 instead a_1 -> 1, everything else -> 0).
i64 coset_of(const BaseWord& w, const PrimeOrderData& d);

/// One rewritten letter: the subgroup generator S_{T^rep, sym} where T is
/// the transversal generator (x_1, or a_1 when t = 0), taken to the given
/// sign. No letters are dropped at this level.
struct SchreierLetter {
  i64 rep;
  BaseSymbol sym;
  int sign;
  bool operator==(const SchreierLetter&) const = default;
};

std::vector<SchreierLetter> rewrite_letters(const BaseWord& w, const PrimeOrderData& d);

/// The rewriting of a kernel word into subgroup generators, with the
/// transversal-generator letters S_{K,x_1} dropped (for t = 0 only the
/// freely trivial ones drop; S_{a_1^{p-1},a_1} survives as A_1 at power p-1).
/// X(j, r) here denotes S at transversal exponent r, i.e. h^r(x_j xbar_j^-1).
Word rewrite_tau(const BaseWord& w, const PrimeOrderData& d);

/// Defining word K a (Kbar a)^-1 of a rewritten generator, in the alphabet of
/// the base presentation. Symbols use the same indexing as rewrite_tau.
BaseWord schreier_generator_word(const GeneratorSymbol& s, const PrimeOrderData& d);
BaseWord schreier_letter_word(const SchreierLetter& l, const PrimeOrderData& d);

/// Substitutes every generator of a rewritten word by its defining word.
/// Substituting the full rewrite_letters sequence recovers the original word
/// exactly; substituting rewrite_tau's output recovers it up to insertions of
/// x_1^{+-p}, i.e. up to equal_mod_transversal_power.
BaseWord substitute_schreier(const Word& w, const PrimeOrderData& d);
BaseWord substitute_schreier(const std::vector<SchreierLetter>& letters, const PrimeOrderData& d);

/// Equality in the quotient of the free base group by the single relation
/// T^p = 1 on the transversal generator T (free-product normal forms).
bool equal_mod_transversal_power(const BaseWord& w1, const BaseWord& w2, const PrimeOrderData& d);

/// Converts rewrite_tau's transversal-exponent indexing of X symbols into the
/// orbit indexing used by presentations, where X(j, k) means h^k of the
/// generator introduced by the long relation's x_j letter; A/B symbols are
/// unchanged. to_rep_labels inverts it.
Word to_orbit_labels(const Word& w, const PrimeOrderData& d);
Word to_rep_labels(const Word& w, const PrimeOrderData& d);

/// Offset between the two X indexings: the orbit generator for x_j sits at
/// transversal exponent sigma_j = (n_1 + ... + n_{j-1}) * n_1^-1 mod p.
i64 orbit_offset(int j, const PrimeOrderData& d);

/// Rewritten presentation of the surface group: p conjugates of the long
/// relation plus one torsion relation per x_j, j >= 2, over generators
/// A(i,k), B(i,k), X(j,k) in orbit indexing (k in [0, p-1]).
Presentation subgroup_presentation(const PrimeOrderData& d);

/// Eliminates the X(2,*) family against the long relations and the top
/// h-power of each remaining X family against its torsion relation, leaving
/// 2g generators and a single relator in which every generator occurs exactly
/// once with each sign.
Presentation simplify_to_single_relator(const Presentation& pres, const PrimeOrderData& d);

/// Single-relator presentation for the fixed-point-free case: generators
/// alpha, beta and the lifted handles A(j,k), B(j,k) for j >= 2.
Presentation t0_presentation(const PrimeOrderData& d);

bool check_evenly_worded(std::span<const Letter> w);
inline bool check_evenly_worded(const Word& w) {
  return check_evenly_worded(std::span<const Letter>(w.letters()));
}

/// True iff the occurring generators admit a perfect matching in which each
/// matched pair's occurrences interleave around the cyclic word. Requires an
/// evenly worded input.
bool check_fully_linked(std::span<const Letter> w);
inline bool check_fully_linked(const Word& w) {
  return check_fully_linked(std::span<const Letter>(w.letters()));
}

/// The action of h on the simplified presentation's generators: h-power
/// shifts by one, with the top power of each orbit replaced by the word its
/// defining relation expresses it in.
std::vector<std::pair<GeneratorSymbol, Word>> induced_action_on_generators(
    const Presentation& pres, const PrimeOrderData& d);

}  // namespace adapted
