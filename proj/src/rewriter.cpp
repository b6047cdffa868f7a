#include "adapted/rewriter.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace adapted {

namespace {

// Transversal generator: coset representatives are its powers 0..p-1.
BaseSymbol transversal(const PrimeOrderData& d) {
  return d.t > 0 ? base_x(1) : base_a(1);
}

i64 phi(const BaseSymbol& s, const PrimeOrderData& d) {
  if (d.t > 0)
    return s.kind == BaseSymbol::Kind::x ? d.n[static_cast<std::size_t>(s.index - 1)] : 0;
  return (s.kind == BaseSymbol::Kind::a && s.index == 1) ? 1 : 0;
}

// Multiplying coset values by u = phi(T)^-1 turns them into transversal
// exponents.
i64 rep_unit(const PrimeOrderData& d) {
  return d.t > 0 ? mod_inverse(d.n[0], d.p) : 1;
}

PrimeOrderData normalized(const PrimeOrderData& d) {
  return d.sorted_normalized() ? d : normalize_conjugacy(d);
}

void check_alphabet(const BaseWord& w, const PrimeOrderData& d) {
  for (const auto& l : w.letters()) {
    bool ok = l.sym.index >= 1;
    if (l.sym.kind == BaseSymbol::Kind::x)
      ok = ok && d.t > 0 && l.sym.index <= d.t;
    else
      ok = ok && l.sym.index <= d.g0;
    require(ok, errc::out_of_range, "letter " + to_string(l.sym) + " outside the alphabet");
  }
}

std::optional<GeneratorSymbol> map_letter(const SchreierLetter& l, const PrimeOrderData& d) {
  int r = static_cast<int>(l.rep);
  if (d.t > 0) {
    switch (l.sym.kind) {
      case BaseSymbol::Kind::x:
        if (l.sym.index == 1) return std::nullopt;
        return gen_X(l.sym.index, r);
      case BaseSymbol::Kind::a:
        return gen_A(l.sym.index, r);
      case BaseSymbol::Kind::b:
        return gen_B(l.sym.index, r);
    }
  } else {
    if (l.sym.kind == BaseSymbol::Kind::a && l.sym.index == 1) {
      if (l.rep < d.p - 1) return std::nullopt;  // freely trivial
      return gen_A(1, static_cast<int>(d.p - 1));
    }
    return l.sym.kind == BaseSymbol::Kind::a ? gen_A(l.sym.index, r) : gen_B(l.sym.index, r);
  }
  return std::nullopt;
}

// Relator with the given generator occurring exactly once, cyclically rotated
// so that occurrence leads; the generator then equals the inverse (or, for a
// negative occurrence, the value) of the remainder.
Word solve_for(const Word& relator, const GeneratorSymbol& s) {
  const auto& ls = relator.letters();
  std::size_t count = 0, at = 0;
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i].sym == s) {
      ++count;
      at = i;
    }
  require(count == 1, errc::malformed_input,
          to_string(s) + " occurs " + std::to_string(count) + " times, expected once");
  Word rest;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto& l = ls[(at + i) % ls.size()];
    rest.push(l.sym, l.sign);
  }
  return ls[at].sign > 0 ? rest.inverse() : rest;
}

Word tau_orbit(const BaseWord& w, const PrimeOrderData& d) {
  return to_orbit_labels(rewrite_tau(w, d), d);
}

Presentation simplify_t0(const Presentation& pres, const PrimeOrderData& d);

}  // namespace

BaseWord long_relator(const PrimeOrderData& d) {
  BaseWord w;
  for (int j = 1; j <= d.t; ++j) w.push(base_x(j), 1);
  for (int i = 1; i <= d.g0; ++i) {
    w.push(base_a(i), 1);
    w.push(base_b(i), 1);
    w.push(base_a(i), -1);
    w.push(base_b(i), -1);
  }
  return w;
}

BasePresentation base_presentation(const PrimeOrderData& d) {
  BasePresentation pres;
  for (int i = 1; i <= d.g0; ++i) {
    pres.generators.push_back(base_a(i));
    pres.generators.push_back(base_b(i));
  }
  for (int j = 1; j <= d.t; ++j) pres.generators.push_back(base_x(j));
  pres.relators.push_back(long_relator(d));
  for (int j = 1; j <= d.t; ++j) pres.relators.push_back(base_power(base_x(j), d.p));
  return pres;
}

i64 coset_of(const BaseWord& w, const PrimeOrderData& d) {
  check_alphabet(w, d);
  i64 c = 0;
  for (const auto& l : w.letters()) c += l.sign * phi(l.sym, d);
  return mod_nonneg(c, d.p);
}

std::vector<SchreierLetter> rewrite_letters(const BaseWord& w, const PrimeOrderData& d) {
  require(coset_of(w, d) == 0, errc::not_in_kernel,
          "word has coset value " + std::to_string(coset_of(w, d)));
  i64 u = rep_unit(d);
  std::vector<SchreierLetter> out;
  out.reserve(w.size());
  i64 c = 0;
  for (const auto& l : w.letters()) {
    if (l.sign > 0) {
      out.push_back({mod_nonneg(c * u, d.p), l.sym, 1});
      c = mod_nonneg(c + phi(l.sym, d), d.p);
    } else {
      c = mod_nonneg(c - phi(l.sym, d), d.p);
      out.push_back({mod_nonneg(c * u, d.p), l.sym, -1});
    }
  }
  return out;
}

Word rewrite_tau(const BaseWord& w, const PrimeOrderData& d) {
  Word out;
  for (const SchreierLetter& l : rewrite_letters(w, d))
    if (auto s = map_letter(l, d)) out.push(*s, l.sign);
  return out;
}

i64 orbit_offset(int j, const PrimeOrderData& d) {
  ensure(d.t > 0 && j >= 2 && j <= d.t, "orbit offset needs 2 <= j <= t");
  i64 prefix = 0;
  for (int i = 1; i < j; ++i) prefix += d.n[static_cast<std::size_t>(i - 1)];
  return mod_nonneg(prefix * rep_unit(d), d.p);
}

namespace {

Word relabel(const Word& w, const PrimeOrderData& d, int direction) {
  if (d.t == 0) return w;
  Word out;
  for (const auto& l : w.letters()) {
    GeneratorSymbol s = l.sym;
    if (s.kind == GeneratorSymbol::Kind::X)
      s.power = static_cast<int>(
          mod_nonneg(s.power + direction * orbit_offset(s.base, d), d.p));
    out.push(s, l.sign);
  }
  return out;
}

}  // namespace

Word to_orbit_labels(const Word& w, const PrimeOrderData& d) { return relabel(w, d, -1); }
Word to_rep_labels(const Word& w, const PrimeOrderData& d) { return relabel(w, d, +1); }

BaseWord schreier_generator_word(const GeneratorSymbol& s, const PrimeOrderData& d) {
  BaseSymbol tr = transversal(d);
  i64 u = rep_unit(d);
  auto make = [&](const BaseSymbol& sym, i64 rep) {
    i64 rep_after = mod_nonneg(rep + phi(sym, d) * u, d.p);
    BaseWord w = base_power(tr, rep);
    w.push(sym, 1);
    w.append(base_power(tr, rep_after).inverse());
    return w;
  };
  switch (s.kind) {
    case GeneratorSymbol::Kind::A:
      if (d.t == 0 && s.base == 1)
        ensure(s.power == d.p - 1, "only the top a_1 generator survives");
      return make(base_a(s.base), s.power);
    case GeneratorSymbol::Kind::B:
      return make(base_b(s.base), s.power);
    case GeneratorSymbol::Kind::X:
      ensure(d.t > 0, "no X generators when t = 0");
      return make(base_x(s.base), s.power);
    case GeneratorSymbol::Kind::AlphaBeta:
      ensure(d.t == 0, "alpha/beta only exist when t = 0");
      if (s.base == 0) return base_power(tr, d.p);
      return make(base_b(1), d.p - 1);
  }
  throw internal_error("unhandled generator kind");
}

BaseWord schreier_letter_word(const SchreierLetter& l, const PrimeOrderData& d) {
  BaseSymbol tr = transversal(d);
  i64 u = rep_unit(d);
  i64 rep_after = mod_nonneg(l.rep + phi(l.sym, d) * u, d.p);
  BaseWord w = base_power(tr, l.rep);
  w.push(l.sym, 1);
  w.append(base_power(tr, rep_after).inverse());
  return w;
}

BaseWord substitute_schreier(const Word& w, const PrimeOrderData& d) {
  BaseWord out;
  for (const auto& l : w.letters()) {
    BaseWord piece = schreier_generator_word(l.sym, d);
    if (l.sign > 0)
      out.append(piece);
    else
      out.append_inverse(piece);
  }
  return out;
}

BaseWord substitute_schreier(const std::vector<SchreierLetter>& letters, const PrimeOrderData& d) {
  BaseWord out;
  for (const auto& l : letters) {
    BaseWord piece = schreier_letter_word({l.rep, l.sym, 1}, d);
    if (l.sign > 0)
      out.append(piece);
    else
      out.append_inverse(piece);
  }
  return out;
}

namespace {

// Normal form in Z_p * (free group on the remaining generators): transversal
// runs reduced mod p into [1, p-1], everything else freely reduced. Adjacent
// stack runs always carry distinct symbols, so merging one level suffices.
std::vector<std::pair<BaseSymbol, i64>> torsion_normal_form(const BaseWord& w,
                                                            const PrimeOrderData& d) {
  BaseSymbol tr = transversal(d);
  std::vector<std::pair<BaseSymbol, i64>> runs;
  for (const auto& l : w.letters()) {
    i64 e = l.sign;
    if (!runs.empty() && runs.back().first == l.sym) {
      e += runs.back().second;
      runs.pop_back();
    }
    if (l.sym == tr) e = mod_nonneg(e, d.p);
    if (e != 0) runs.push_back({l.sym, e});
  }
  return runs;
}

}  // namespace

bool equal_mod_transversal_power(const BaseWord& w1, const BaseWord& w2, const PrimeOrderData& d) {
  return torsion_normal_form(w1, d) == torsion_normal_form(w2, d);
}

Presentation subgroup_presentation(const PrimeOrderData& dd) {
  PrimeOrderData d = normalized(dd);
  Presentation pres;
  BaseSymbol tr = transversal(d);
  BaseWord rel = long_relator(d);

  if (d.t > 0) {
    for (int i = 1; i <= d.g0; ++i)
      for (int k = 0; k < d.p; ++k) {
        pres.generators.push_back(gen_A(i, k));
      }
    for (int i = 1; i <= d.g0; ++i)
      for (int k = 0; k < d.p; ++k) pres.generators.push_back(gen_B(i, k));
    for (int j = 2; j <= d.t; ++j)
      for (int k = 0; k < d.p; ++k) pres.generators.push_back(gen_X(j, k));
    for (i64 r = 0; r < d.p; ++r)
      pres.relators.push_back(
          tau_orbit(conjugated(base_power(tr, r), rel), d).cyclically_reduced());
    for (int j = 2; j <= d.t; ++j)
      pres.relators.push_back(tau_orbit(base_power(base_x(j), d.p), d).cyclically_reduced());
    return pres;
  }

  require(d.g0 >= 2, errc::genus_too_small, "fixed-point-free case needs g0 >= 2");
  pres.generators.push_back(gen_A(1, static_cast<int>(d.p - 1)));
  for (int k = 0; k < d.p; ++k) pres.generators.push_back(gen_B(1, k));
  for (int j = 2; j <= d.g0; ++j)
    for (int k = 0; k < d.p; ++k) {
      pres.generators.push_back(gen_A(j, k));
    }
  for (int j = 2; j <= d.g0; ++j)
    for (int k = 0; k < d.p; ++k) pres.generators.push_back(gen_B(j, k));
  for (i64 r = 0; r < d.p; ++r)
    pres.relators.push_back(
        rewrite_tau(conjugated(base_power(tr, r), rel), d).cyclically_reduced());
  return pres;
}

namespace {

// Generator order of the simplified presentation: lifted handles grouped per
// handle (A then B, h-powers ascending), then the X orbits, then alpha/beta.
std::vector<GeneratorSymbol> final_generators(const PrimeOrderData& d) {
  std::vector<GeneratorSymbol> gens;
  int top = static_cast<int>(d.p);
  if (d.t > 0) {
    for (int i = 1; i <= d.g0; ++i) {
      for (int k = 0; k < top; ++k) gens.push_back(gen_A(i, k));
      for (int k = 0; k < top; ++k) gens.push_back(gen_B(i, k));
    }
    for (int j = 3; j <= d.t; ++j)
      for (int k = 0; k + 1 < top; ++k) gens.push_back(gen_X(j, k));
  } else {
    for (int j = 2; j <= d.g0; ++j) {
      for (int k = 0; k < top; ++k) gens.push_back(gen_A(j, k));
      for (int k = 0; k < top; ++k) gens.push_back(gen_B(j, k));
    }
    gens.push_back(gen_alpha());
    gens.push_back(gen_beta());
  }
  return gens;
}

Presentation simplify_t0(const Presentation& pres, const PrimeOrderData& d) {
  // Locate the relator carrying the surviving a_1 generator; the other p-1
  // express each B(1,k) through B(1,k+1).
  GeneratorSymbol top_a = gen_A(1, static_cast<int>(d.p - 1));
  const Word* main = nullptr;
  std::map<int, const Word*> chain;  // k -> relator with B(1,k) negative
  for (const Word& rel : pres.relators) {
    bool has_top_a = false;
    for (const auto& l : rel.letters())
      if (l.sym == top_a) has_top_a = true;
    if (has_top_a) {
      require(main == nullptr, errc::malformed_input, "several relators contain a_1^p");
      main = &rel;
    } else {
      int lowest = -1;
      for (const auto& l : rel.letters())
        if (l.sym.kind == GeneratorSymbol::Kind::B && l.sym.base == 1 && l.sign < 0)
          lowest = l.sym.power;
      require(lowest >= 0, errc::malformed_input, "unexpected relator shape");
      chain[lowest] = &rel;
    }
  }
  require(main != nullptr && static_cast<i64>(chain.size()) == d.p - 1, errc::malformed_input,
          "expected one a_1^p relator and p-1 chain relators");

  Word relator = *main;
  for (int k = 0; k + 1 < d.p; ++k) {
    auto it = chain.find(k);
    require(it != chain.end(), errc::malformed_input,
            "missing chain relator for power " + std::to_string(k));
    std::map<GeneratorSymbol, Word> repl;
    repl[gen_B(1, k)] = solve_for(*it->second, gen_B(1, k));
    relator = relator.substituted(repl);
  }

  std::map<GeneratorSymbol, Word> rename;
  {
    Word alpha_w, beta_w;
    alpha_w.push(gen_alpha(), 1);
    beta_w.push(gen_beta(), 1);
    rename[top_a] = alpha_w;
    rename[gen_B(1, static_cast<int>(d.p - 1))] = beta_w;
  }
  Presentation out;
  out.generators = final_generators(d);
  out.relators.push_back(relator.substituted(rename).cyclically_reduced());
  ensure(check_evenly_worded(out.relators[0]), "single relator is not evenly worded");
  ensure(static_cast<i64>(out.generators.size()) == 2 * d.g,
          "generator count differs from 2g");
  return out;
}

}  // namespace

Presentation simplify_to_single_relator(const Presentation& pres, const PrimeOrderData& dd) {
  PrimeOrderData d = normalized(dd);
  if (d.t == 0) return simplify_t0(pres, d);

  // Split the relators into torsion words (all letters one X family,
  // positive) and the conjugates of the long relation.
  std::map<int, const Word*> torsion;
  std::vector<const Word*> longs;
  for (const Word& rel : pres.relators) {
    bool pure_x = !rel.empty();
    int base = -1;
    for (const auto& l : rel.letters()) {
      if (l.sym.kind != GeneratorSymbol::Kind::X || l.sign < 0) pure_x = false;
      if (base == -1 && l.sym.kind == GeneratorSymbol::Kind::X) base = l.sym.base;
      if (l.sym.kind == GeneratorSymbol::Kind::X && l.sym.base != base) pure_x = false;
    }
    if (pure_x && static_cast<i64>(rel.size()) == d.p) {
      require(!torsion.contains(base), errc::malformed_input,
              "duplicate torsion relator for x_" + std::to_string(base));
      torsion[base] = &rel;
    } else {
      longs.push_back(&rel);
    }
  }
  require(static_cast<i64>(longs.size()) == d.p, errc::malformed_input,
          "expected p conjugates of the long relation, found " + std::to_string(longs.size()));
  for (int j = 2; j <= d.t; ++j)
    require(torsion.contains(j), errc::malformed_input,
            "missing torsion relator for x_" + std::to_string(j));

  // Each long relator determines one h-power of the x_2 orbit generator.
  std::map<GeneratorSymbol, Word> repl;
  for (const Word* rel : longs) {
    int q = -1;
    for (const auto& l : rel->letters())
      if (l.sym.kind == GeneratorSymbol::Kind::X && l.sym.base == 2) {
        require(q == -1, errc::malformed_input, "long relator with several x_2 letters");
        q = l.sym.power;
      }
    require(q >= 0, errc::malformed_input, "long relator without an x_2 letter");
    GeneratorSymbol s = gen_X(2, q);
    require(!repl.contains(s), errc::malformed_input, "two long relators solve " + to_string(s));
    repl[s] = solve_for(*rel, s);
  }
  require(static_cast<i64>(repl.size()) == d.p, errc::malformed_input,
          "long relators do not cover the whole x_2 orbit");

  // Substituting into the inverted x_2 torsion word keeps the conjugate
  // products in ascending position, which is the form the worked example
  // prints.
  Word relator = torsion.at(2)->inverse().substituted(repl);

  for (int j = 3; j <= d.t; ++j) {
    GeneratorSymbol topgen = gen_X(j, static_cast<int>(d.p - 1));
    std::map<GeneratorSymbol, Word> top;
    top[topgen] = solve_for(*torsion.at(j), topgen);
    relator = relator.substituted(top);
  }

  Presentation out;
  out.generators = final_generators(d);
  out.relators.push_back(relator.cyclically_reduced());
  ensure(check_evenly_worded(out.relators[0]), "single relator is not evenly worded");
  ensure(static_cast<i64>(out.generators.size()) == 2 * d.g,
          "generator count differs from 2g");
  return out;
}

Presentation t0_presentation(const PrimeOrderData& d) {
  require(d.t == 0, errc::bad_t, "t = " + std::to_string(d.t) + ", expected 0");
  return simplify_to_single_relator(subgroup_presentation(d), d);
}

bool check_evenly_worded(std::span<const Letter> w) {
  std::map<GeneratorSymbol, std::pair<int, int>> counts;
  for (const Letter& l : w) {
    if (l.sign > 0)
      counts[l.sym].first += 1;
    else
      counts[l.sym].second += 1;
  }
  for (const auto& [sym, c] : counts)
    if (c.first != 1 || c.second != 1) return false;
  return true;
}

namespace {

bool interleaved(std::pair<std::size_t, std::size_t> a, std::pair<std::size_t, std::size_t> b) {
  bool first_inside = a.first < b.first && b.first < a.second;
  bool second_inside = a.first < b.second && b.second < a.second;
  return first_inside != second_inside;
}

bool perfect_matching(const std::vector<std::vector<std::size_t>>& adj,
                      std::vector<std::size_t>& match, std::size_t v) {
  if (v == adj.size()) return true;
  if (match[v] != SIZE_MAX) return perfect_matching(adj, match, v + 1);
  for (std::size_t u : adj[v]) {
    if (match[u] != SIZE_MAX) continue;
    match[v] = u;
    match[u] = v;
    if (perfect_matching(adj, match, v + 1)) return true;
    match[v] = SIZE_MAX;
    match[u] = SIZE_MAX;
  }
  return false;
}

}  // namespace

bool check_fully_linked(std::span<const Letter> w) {
  require(check_evenly_worded(w), errc::not_evenly_worded,
          "fully-linked check needs an evenly worded relator");
  std::map<GeneratorSymbol, std::vector<std::size_t>> occ;
  for (std::size_t i = 0; i < w.size(); ++i) occ[w[i].sym].push_back(i);
  if (occ.empty()) return true;
  if (occ.size() % 2 != 0) return false;

  std::vector<std::pair<std::size_t, std::size_t>> spans;
  spans.reserve(occ.size());
  for (const auto& [sym, positions] : occ) spans.push_back({positions[0], positions[1]});

  std::vector<std::vector<std::size_t>> adj(spans.size());
  for (std::size_t i = 0; i < spans.size(); ++i)
    for (std::size_t j = i + 1; j < spans.size(); ++j)
      if (interleaved(spans[i], spans[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::vector<std::size_t> match(spans.size(), SIZE_MAX);
  return perfect_matching(adj, match, 0);
}

std::vector<std::pair<GeneratorSymbol, Word>> induced_action_on_generators(
    const Presentation& pres, const PrimeOrderData& dd) {
  PrimeOrderData d = normalized(dd);
  std::vector<std::pair<GeneratorSymbol, Word>> out;
  out.reserve(pres.generators.size());

  std::map<int, Word> x_top;  // j -> word replacing the top h-power
  if (d.t > 0)
    for (int j = 3; j <= d.t; ++j) {
      Word pj = tau_orbit(base_power(base_x(j), d.p), d);
      x_top[j] = solve_for(pj, gen_X(j, static_cast<int>(d.p - 1)));
    }

  for (const GeneratorSymbol& s : pres.generators) {
    Word image;
    switch (s.kind) {
      case GeneratorSymbol::Kind::A:
      case GeneratorSymbol::Kind::B: {
        if (s.power + 1 < d.p) {
          image.push({s.kind, s.base, s.power + 1}, 1);
        } else if (d.t > 0) {
          image.push({s.kind, s.base, 0}, 1);
        } else {
          // h wraps a lifted handle through conjugation by alpha = a_1^p.
          image.push(gen_alpha(), 1);
          image.push({s.kind, s.base, 0}, 1);
          image.push(gen_alpha(), -1);
        }
        break;
      }
      case GeneratorSymbol::Kind::X: {
        if (s.power + 1 < d.p - 1) {
          image.push(gen_X(s.base, s.power + 1), 1);
        } else {
          auto it = x_top.find(s.base);
          ensure(it != x_top.end(), "missing torsion solution for x_" + std::to_string(s.base));
          image = it->second;
        }
        break;
      }
      case GeneratorSymbol::Kind::AlphaBeta: {
        if (s.base == 0) {
          image.push(gen_alpha(), 1);
        } else {
          // h(beta) = alpha b_1 alpha^-1 with b_1 = P h(P) ... h^{p-2}(P) beta.
          image.push(gen_alpha(), 1);
          for (int k = 0; k + 1 < d.p; ++k)
            for (int j = 2; j <= d.g0; ++j) image.append(commutator(gen_A(j, k), gen_B(j, k)));
          image.push(gen_beta(), 1);
          image.push(gen_alpha(), -1);
        }
        break;
      }
    }
    out.push_back({s, image});
  }
  return out;
}

}  // namespace adapted
