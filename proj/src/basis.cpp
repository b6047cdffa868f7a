#include "adapted/basis.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "adapted/rewriter.hpp"

namespace adapted {

namespace {

PrimeOrderData normalized(const PrimeOrderData& d) {
  return d.sorted_normalized() ? d : normalize_conjugacy(d);
}

std::string powered_label(const std::string& core, int power) {
  if (power == 0) return core;
  if (power == 1) return "h(" + core + ")";
  return "h^" + std::to_string(power) + "(" + core + ")";
}

void check_element(const BasisElement& e, const PrimeOrderData& d) {
  switch (e.kind) {
    case BasisElement::Kind::LiftA:
    case BasisElement::Kind::LiftB:
      require(e.w >= 1 && e.w <= d.g0 && e.power >= 0 && e.power < d.p, errc::context_mismatch,
              "lift " + label(e) + " does not belong to this surface");
      if (d.t == 0)
        require(e.w >= 2, errc::context_mismatch, "handle 1 is replaced by alpha/beta");
      return;
    case BasisElement::Kind::Exceptional: {
      require(d.t > 0, errc::context_mismatch, "no exceptional curves when t = 0");
      bool ok = e.s >= 1 && e.s <= d.p - 1 && e.v >= 1 &&
                e.v <= d.m[static_cast<std::size_t>(e.s - 1)] && e.power >= 0 &&
                e.power <= d.p - 2;
      require(ok, errc::context_mismatch,
              "exceptional curve " + label(e) + " does not belong to this surface");
      return;
    }
    case BasisElement::Kind::Alpha:
    case BasisElement::Kind::Beta:
      require(d.t == 0, errc::context_mismatch, "alpha/beta only exist when t = 0");
      return;
  }
}

// Ordered (s, v) pairs with the two lexicographically smallest omitted.
std::vector<std::pair<int, int>> kept_pairs(const PrimeOrderData& d) {
  std::vector<std::pair<int, int>> pairs;
  for (i64 s = 1; s <= d.p - 1; ++s)
    for (i64 v = 1; v <= d.m[static_cast<std::size_t>(s - 1)]; ++v)
      pairs.push_back({static_cast<int>(s), static_cast<int>(v)});
  ensure(static_cast<i64>(pairs.size()) == d.t, "pair count differs from t");
  pairs.erase(pairs.begin(), pairs.begin() + std::min<std::size_t>(2, pairs.size()));
  return pairs;
}

}  // namespace

std::string label(const BasisElement& e) {
  switch (e.kind) {
    case BasisElement::Kind::LiftA:
      return powered_label("A_" + std::to_string(e.w), e.power);
    case BasisElement::Kind::LiftB:
      return powered_label("B_" + std::to_string(e.w), e.power);
    case BasisElement::Kind::Exceptional:
      return powered_label("X_{" + std::to_string(e.s) + "," + std::to_string(e.v) + "}",
                           e.power);
    case BasisElement::Kind::Alpha:
      return "alpha";
    case BasisElement::Kind::Beta:
      return "beta";
  }
  return "?";
}

std::vector<std::string> labels(const std::vector<BasisElement>& basis) {
  std::vector<std::string> out;
  out.reserve(basis.size());
  for (const auto& e : basis) out.push_back(label(e));
  return out;
}

ResidueContext residue_context(const PrimeOrderData& d) {
  require(d.t > 0, errc::bad_t, "residue context needs fixed points");
  for (i64 s = 1; s <= d.p - 1; ++s)
    if (d.m[static_cast<std::size_t>(s - 1)] > 0) return {s, mod_inverse(s, d.p)};
  throw internal_error("all multiplicities vanish with t > 0");
}

i64 bracket_residue(i64 v, const ResidueContext& ctx, i64 p) {
  return mod_nonneg(ctx.q_hat * v, p);
}

std::vector<BasisElement> enumerate_basis(const PrimeOrderData& dd) {
  PrimeOrderData d = normalized(dd);
  require(d.t > 0, errc::bad_t, "t = 0 basis is enumerated by enumerate_basis_t0");
  std::vector<BasisElement> basis;
  for (int w = 1; w <= d.g0; ++w) {
    for (int k = 0; k < d.p; ++k) basis.push_back(lift_a(w, k));
    for (int k = 0; k < d.p; ++k) basis.push_back(lift_b(w, k));
  }
  for (auto [s, v] : kept_pairs(d))
    for (int k = 0; k + 1 < d.p; ++k) basis.push_back(exceptional(s, v, k));
  ensure(static_cast<i64>(basis.size()) == 2 * d.g, "basis size differs from 2g");
  return basis;
}

std::vector<BasisElement> enumerate_basis_t0(const PrimeOrderData& d) {
  require(d.t == 0, errc::bad_t, "t > 0 basis is enumerated by enumerate_basis");
  std::vector<BasisElement> basis;
  for (int w = 2; w <= d.g0; ++w) {
    for (int k = 0; k < d.p; ++k) basis.push_back(lift_a(w, k));
    for (int k = 0; k < d.p; ++k) basis.push_back(lift_b(w, k));
  }
  basis.push_back(alpha_curve());
  basis.push_back(beta_curve());
  ensure(static_cast<i64>(basis.size()) == 2 * d.g, "basis size differs from 2g");
  return basis;
}

std::vector<BasisElement> enumerate(const PrimeOrderData& d) {
  return d.t > 0 ? enumerate_basis(d) : enumerate_basis_t0(d);
}

namespace {

// Intersection of h^0(X_{pair r}) with h^k(X_{pair s}) for distinct pairs
// (r, v_r) < (s, v_s); r and s are the rotation values.
int distinct_pair_value(i64 r, i64 s, i64 k, const ResidueContext& ctx, i64 p) {
  i64 K = bracket_residue(k, ctx, p);
  i64 R = bracket_residue(r, ctx, p);
  i64 KS = bracket_residue(k + s, ctx, p);
  if (K < R && R <= KS) return 1;
  if (KS < R && R <= K) return -1;
  return 0;
}

// Intersection of h^0(X_{s,v}) with h^k(X_{s,v}) on the same pair.
int same_pair_value(i64 s, i64 k, const ResidueContext& ctx, i64 p) {
  i64 K = bracket_residue(k, ctx, p);
  i64 S = bracket_residue(s, ctx, p);
  i64 KS = bracket_residue(k + s, ctx, p);
  if (K <= S && S < KS) return 1;
  if (KS < S && S < K) return -1;
  return 0;
}

bool is_lift(const BasisElement& e) {
  return e.kind == BasisElement::Kind::LiftA || e.kind == BasisElement::Kind::LiftB;
}

}  // namespace

int intersection_number(const BasisElement& e1, const BasisElement& e2, const PrimeOrderData& dd,
                        const ResidueContext& ctx) {
  PrimeOrderData d = normalized(dd);
  check_element(e1, d);
  check_element(e2, d);

  if (is_lift(e1) && is_lift(e2)) {
    if (e1.w != e2.w || e1.power != e2.power) return 0;
    if (e1.kind == BasisElement::Kind::LiftA && e2.kind == BasisElement::Kind::LiftB) return 1;
    if (e1.kind == BasisElement::Kind::LiftB && e2.kind == BasisElement::Kind::LiftA) return -1;
    return 0;
  }
  if (e1.kind == BasisElement::Kind::Alpha && e2.kind == BasisElement::Kind::Beta) return 1;
  if (e1.kind == BasisElement::Kind::Beta && e2.kind == BasisElement::Kind::Alpha) return -1;
  if (e1.kind != BasisElement::Kind::Exceptional || e2.kind != BasisElement::Kind::Exceptional)
    return 0;

  std::pair<int, int> p1{e1.s, e1.v}, p2{e2.s, e2.v};
  if (p1 == p2) {
    i64 k = mod_nonneg(e2.power - e1.power, d.p);
    if (k == 0) return 0;
    return same_pair_value(e1.s, k, ctx, d.p);
  }
  if (p1 < p2) {
    i64 k = mod_nonneg(e2.power - e1.power, d.p);
    return distinct_pair_value(e1.s, e2.s, k, ctx, d.p);
  }
  i64 k = mod_nonneg(e1.power - e2.power, d.p);
  return -distinct_pair_value(e2.s, e1.s, k, ctx, d.p);
}

IntMatrix intersection_matrix(const PrimeOrderData& dd) {
  PrimeOrderData d = normalized(dd);
  std::vector<BasisElement> basis = enumerate(d);
  std::size_t n = basis.size();
  IntMatrix out(n, n);
  ResidueContext ctx = d.t > 0 ? residue_context(d) : ResidueContext{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int v = intersection_number(basis[i], basis[j], d, ctx);
      out.at(i, j) = v;
      out.at(j, i) = -v;
    }
  return out;
}

IntMatrix action_matrix(const PrimeOrderData& dd) {
  PrimeOrderData d = normalized(dd);
  std::vector<BasisElement> basis = enumerate(d);
  std::size_t n = basis.size();
  std::map<BasisElement, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[basis[i]] = i;

  IntMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const BasisElement& e = basis[j];
    switch (e.kind) {
      case BasisElement::Kind::LiftA:
      case BasisElement::Kind::LiftB: {
        BasisElement img = e;
        img.power = (e.power + 1) % static_cast<int>(d.p);
        out.at(index.at(img), j) = 1;
        break;
      }
      case BasisElement::Kind::Exceptional: {
        if (e.power + 1 <= d.p - 2) {
          BasisElement img = e;
          img.power = e.power + 1;
          out.at(index.at(img), j) = 1;
        } else {
          // top power maps to minus the sum of the orbit's basis members
          for (int k = 0; k + 1 < d.p; ++k)
            out.at(index.at(exceptional(e.s, e.v, k)), j) = -1;
        }
        break;
      }
      case BasisElement::Kind::Alpha:
      case BasisElement::Kind::Beta:
        out.at(j, j) = 1;
        break;
    }
  }
  return out;
}

IntMatrix canonical_intersection(const PrimeOrderData& dd) {
  PrimeOrderData d = normalized(dd);
  i64 half1, half2;
  if (d.t > 0) {
    i64 q2 = (d.p - 1) * (d.t - 2);
    require(q2 % 2 == 0, errc::odd_q, "(p-1)(t-2) is odd");
    half1 = d.p * d.g0;
    half2 = q2 / 2;
  } else {
    half1 = d.g;
    half2 = 0;
  }
  std::size_t n = static_cast<std::size_t>(2 * (half1 + half2));
  ensure(static_cast<i64>(n) == 2 * d.g, "canonical form size differs from 2g");
  IntMatrix out(n, n);
  auto fill_block = [&](std::size_t offset, i64 size) {
    for (i64 i = 0; i < size; ++i) {
      out.at(offset + i, offset + size + i) = 1;
      out.at(offset + size + i, offset + i) = -1;
    }
  };
  fill_block(0, half1);
  fill_block(static_cast<std::size_t>(2 * half1), half2);
  return out;
}

GeneratorSymbol symbol_for(const BasisElement& e, const PrimeOrderData& d) {
  switch (e.kind) {
    case BasisElement::Kind::LiftA:
      return gen_A(e.w, e.power);
    case BasisElement::Kind::LiftB:
      return gen_B(e.w, e.power);
    case BasisElement::Kind::Exceptional: {
      // j = fixed-point position of the v-th occurrence of value s in sorted n
      i64 before = 0;
      for (i64 value = 1; value < e.s; ++value)
        before += d.m[static_cast<std::size_t>(value - 1)];
      return gen_X(static_cast<int>(before) + e.v, e.power);
    }
    case BasisElement::Kind::Alpha:
      return gen_alpha();
    case BasisElement::Kind::Beta:
      return gen_beta();
  }
  throw internal_error("unhandled basis element kind");
}

IntMatrix homology_action_full(const PrimeOrderData& dd) {
  PrimeOrderData d = normalized(dd);
  Presentation pres =
      d.t > 0 ? simplify_to_single_relator(subgroup_presentation(d), d) : t0_presentation(d);
  auto action = induced_action_on_generators(pres, d);
  std::map<GeneratorSymbol, Word> images;
  for (auto& [sym, img] : action) images[sym] = img;

  std::vector<BasisElement> basis = enumerate(d);
  std::map<GeneratorSymbol, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[symbol_for(basis[i], d)] = i;
  ensure(index.size() == basis.size(), "basis elements map to distinct generators");

  IntMatrix out(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto it = images.find(symbol_for(basis[j], d));
    ensure(it != images.end(), "missing induced image for " + label(basis[j]));
    for (auto& [sym, count] : abelianized(it->second)) {
      auto idx = index.find(sym);
      ensure(idx != index.end(), "image letter outside the basis: " + to_string(sym));
      out.at(idx->second, j) += count;
    }
  }
  return out;
}

std::vector<std::size_t> block_arrangement_permutation(const PrimeOrderData& dd) {
  PrimeOrderData d = normalized(dd);
  std::vector<BasisElement> basis = enumerate(d);
  std::map<BasisElement, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  std::vector<std::size_t> perm;
  perm.reserve(basis.size());
  auto push_kind = [&](BasisElement::Kind kind) {
    for (const auto& e : basis)
      if (e.kind == kind) perm.push_back(index.at(e));
  };
  push_kind(BasisElement::Kind::LiftA);
  if (d.t == 0) push_kind(BasisElement::Kind::Alpha);
  push_kind(BasisElement::Kind::LiftB);
  if (d.t == 0) push_kind(BasisElement::Kind::Beta);
  push_kind(BasisElement::Kind::Exceptional);
  ensure(perm.size() == basis.size(), "arrangement permutation size mismatch");
  return perm;
}

}  // namespace adapted
