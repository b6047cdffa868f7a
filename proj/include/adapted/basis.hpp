#pragma once

#include <string>
#include <vector>

#include "adapted/intmatrix.hpp"
#include "adapted/invariants.hpp"
#include "adapted/words.hpp"

namespace adapted {

/// One adapted-basis curve. Lifted handle curves h^power(A_w) / h^power(B_w)
/// with power in [0, p-1]; exceptional curves h^power(X_{s,v}) indexed by the
/// rotation value s, the occurrence count v within that value, and
/// power in [0, p-2]; alpha/beta in the fixed-point-free case.
struct BasisElement {
  enum class Kind : unsigned char { LiftA, LiftB, Exceptional, Alpha, Beta };
  Kind kind;
  int w = 0;      // handle index for lifts
  int s = 0;      // rotation value for exceptional curves
  int v = 0;      // occurrence within the value class
  int power = 0;  // h-power

  auto operator<=>(const BasisElement&) const = default;
};

std::string label(const BasisElement& e);

inline BasisElement lift_a(int w, int power) {
  return {BasisElement::Kind::LiftA, w, 0, 0, power};
}
inline BasisElement lift_b(int w, int power) {
  return {BasisElement::Kind::LiftB, w, 0, 0, power};
}
inline BasisElement exceptional(int s, int v, int power) {
  return {BasisElement::Kind::Exceptional, 0, s, v, power};
}
inline BasisElement alpha_curve() { return {BasisElement::Kind::Alpha, 0, 0, 0, 0}; }
inline BasisElement beta_curve() { return {BasisElement::Kind::Beta, 0, 0, 0, 0}; }

/// Residue normalization for the intersection formulas: s_hat is the smallest
/// rotation value with nonzero multiplicity, q_hat its inverse mod p, and
/// [v] = q_hat * v mod p, so that s_hat * [v] = v mod p.
struct ResidueContext {
  i64 s_hat = 0;
  i64 q_hat = 0;
};

ResidueContext residue_context(const PrimeOrderData& d);
i64 bracket_residue(i64 v, const ResidueContext& ctx, i64 p);

/// The adapted basis in canonical order: per handle w the A lifts (powers
/// ascending) then the B lifts, then the exceptional curves by (s, v)
/// lexicographic order with the two smallest pairs omitted, powers innermost.
std::vector<BasisElement> enumerate_basis(const PrimeOrderData& d);

/// Fixed-point-free basis: lifted handles for w in [2, g0], then alpha, beta.
std::vector<BasisElement> enumerate_basis_t0(const PrimeOrderData& d);

/// Basis for either case.
std::vector<BasisElement> enumerate(const PrimeOrderData& d);

int intersection_number(const BasisElement& e1, const BasisElement& e2, const PrimeOrderData& d,
                        const ResidueContext& ctx);

/// Matrices over the enumerate() ordering. Convention: the action matrix M
/// holds the image of the j-th basis element in column j, so preserving the
/// intersection form I reads M^T I M = I.
IntMatrix intersection_matrix(const PrimeOrderData& d);
IntMatrix action_matrix(const PrimeOrderData& d);

/// Target canonical form: pg0 + q hyperbolic pairs arranged as
/// ((0, I), (-I, 0)) blocks, with q = (p-1)(t-2)/2 (q = 0 and size-g identity
/// blocks when t = 0).
IntMatrix canonical_intersection(const PrimeOrderData& d);

/// Action on homology computed from the rewritten presentation by
/// abelianizing the induced images; must coincide with action_matrix.
IntMatrix homology_action_full(const PrimeOrderData& d);

/// Permutation realizing the arrangement that puts all A-type lifts first,
/// then all B-type (alpha/beta joining their halves when t = 0), then the
/// exceptional curves: new index -> canonical index.
std::vector<std::size_t> block_arrangement_permutation(const PrimeOrderData& d);

/// The rewritten-presentation generator corresponding to a basis element.
GeneratorSymbol symbol_for(const BasisElement& e, const PrimeOrderData& d);

std::vector<std::string> labels(const std::vector<BasisElement>& basis);

}  // namespace adapted
