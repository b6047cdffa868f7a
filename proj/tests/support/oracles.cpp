#include "support/oracles.hpp"

#include <map>
#include <random>

#include "adapted/symplectic.hpp"

namespace adapted::testing {

IntMatrix relator_intersection(const Word& relator, const std::vector<GeneratorSymbol>& order) {
  const auto& sides = relator.letters();
  std::size_t n_sides = sides.size();
  std::map<GeneratorSymbol, std::size_t> edge;
  for (std::size_t i = 0; i < order.size(); ++i) edge[order[i]] = i;
  ensure(edge.size() == order.size(), "duplicate symbols in the requested order");

  std::map<GeneratorSymbol, std::pair<int, int>> seen;
  for (const auto& l : sides) {
    ensure(edge.contains(l.sym), "relator letter missing from the order");
    (l.sign > 0 ? seen[l.sym].first : seen[l.sym].second) += 1;
  }
  ensure(seen.size() == order.size(), "order symbol missing from the relator");
  for (const auto& [sym, c] : seen)
    ensure(c.first == 1 && c.second == 1, "relator is not evenly worded");

  // germ ids: 2e = outgoing end of edge e, 2e+1 = incoming end
  auto out_germ = [&](std::size_t e) { return 2 * e; };
  auto in_germ = [&](std::size_t e) { return 2 * e + 1; };
  auto start_germ = [&](std::size_t side) {
    std::size_t e = edge.at(sides[side].sym);
    return sides[side].sign > 0 ? out_germ(e) : in_germ(e);
  };
  auto end_germ = [&](std::size_t side) {
    std::size_t e = edge.at(sides[side].sym);
    return sides[side].sign > 0 ? in_germ(e) : out_germ(e);
  };

  // corner k sits between side k-1 and side k; its bounding germs around the
  // vertex are alpha_k (end of side k-1) and beta_k (start of side k)
  std::vector<std::size_t> alpha_corner(n_sides, SIZE_MAX);
  for (std::size_t k = 0; k < n_sides; ++k) {
    std::size_t g = end_germ((k + n_sides - 1) % n_sides);
    ensure(alpha_corner[g] == SIZE_MAX, "germ bounds two corners on the same side");
    alpha_corner[g] = k;
  }

  // walk the vertex link: after corner k comes the corner on the other side
  // of germ beta_k
  std::vector<std::size_t> pos(n_sides, SIZE_MAX);
  std::size_t corner = 0;
  for (std::size_t step = 0; step < n_sides; ++step) {
    std::size_t g = start_germ(corner);
    ensure(pos[g] == SIZE_MAX, "vertex link revisits a germ");
    pos[g] = step;
    corner = alpha_corner[g];
  }
  ensure(corner == 0, "vertex link is not a single circle");

  std::size_t n = order.size();
  IntMatrix m(n, n);
  auto in_arc = [&](std::size_t z, std::size_t from, std::size_t to) {
    std::size_t len = (to + n_sides - from) % n_sides;
    std::size_t off = (z + n_sides - from) % n_sides;
    return 0 < off && off < len;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      std::size_t oa = pos[out_germ(a)], ia = pos[in_germ(a)];
      std::size_t ob = pos[out_germ(b)], ib = pos[in_germ(b)];
      bool ib_in = in_arc(ib, oa, ia);
      bool ob_in = in_arc(ob, oa, ia);
      if (ib_in && !ob_in)
        m.at(a, b) = 1;
      else if (ob_in && !ib_in)
        m.at(a, b) = -1;
    }
  ensure(m.is_skew_symmetric(), "vertex-link pairing is not skew");
  return m;
}

IntMatrix relator_intersection_for(const PrimeOrderData& d) {
  Presentation pres =
      d.t > 0 ? simplify_to_single_relator(subgroup_presentation(d), d) : t0_presentation(d);
  std::vector<BasisElement> basis = enumerate(d);
  std::vector<GeneratorSymbol> order;
  order.reserve(basis.size());
  for (const auto& e : basis) order.push_back(symbol_for(e, d));
  return relator_intersection(pres.relators.at(0), order);
}

IntMatrix scrambled_paired_form(std::size_t n, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  IntMatrix b = paired_form(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<i64> coeff(-2, 2);
  for (int step = 0; step < 40; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    i64 q = coeff(rng);
    b.add_col(j, i, q);
    b.add_row(j, i, q);
  }
  return b;
}

}  // namespace adapted::testing
