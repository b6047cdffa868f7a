#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adapted/rewriter.hpp"
#include "adapted/words.hpp"

using namespace adapted;

TEST_CASE("free reduction on push") {
  Word w;
  w.push(gen_A(1, 0), 1);
  w.push(gen_B(1, 0), 1);
  w.push(gen_B(1, 0), -1);
  CHECK(w.size() == 1);
  w.push(gen_A(1, 0), -1);
  CHECK(w.empty());
}

TEST_CASE("inverse and concatenation cancel") {
  Word w = commutator(gen_A(1, 0), gen_B(1, 0));
  Word prod = w;
  prod.append(w.inverse());
  CHECK(prod.empty());
  CHECK(w.inverse().inverse() == w);
}

TEST_CASE("cyclic reduction strips conjugating letters") {
  Word w;
  w.push(gen_X(3, 0), 1);
  w.push(gen_A(1, 0), 1);
  w.push(gen_B(1, 0), 1);
  w.push(gen_A(1, 0), -1);
  w.push(gen_X(3, 0), -1);
  Word r = w.cyclically_reduced();
  REQUIRE(r.size() == 1);
  CHECK(r.letters()[0].sym == gen_B(1, 0));
}

TEST_CASE("substitution inverts replacements on negative letters") {
  Word w;
  w.push(gen_X(3, 0), 1);
  w.push(gen_X(3, 1), -1);
  std::map<GeneratorSymbol, Word> repl;
  Word ab;
  ab.push(gen_A(1, 0), 1);
  ab.push(gen_B(1, 0), 1);
  repl[gen_X(3, 1)] = ab;
  Word out = w.substituted(repl);
  REQUIRE(out.size() == 3);
  CHECK(out.letters()[1].sym == gen_B(1, 0));
  CHECK(out.letters()[1].sign == -1);
  CHECK(out.letters()[2].sym == gen_A(1, 0));
}

TEST_CASE("abelianization counts signed occurrences") {
  Word w = commutator(gen_A(1, 0), gen_B(1, 0));
  CHECK(abelianized(w).empty());
  w.push(gen_A(1, 1), 1);
  auto e = abelianized(w);
  CHECK(e.size() == 1);
  CHECK(e.at(gen_A(1, 1)) == 1);
}

TEST_CASE("evenly worded check") {
  CHECK(check_evenly_worded(Word{}));
  CHECK(check_evenly_worded(commutator(gen_A(1, 0), gen_B(1, 0))));

  Word aba;  // b^-1 missing
  aba.push(gen_A(1, 0), 1);
  aba.push(gen_B(1, 0), 1);
  aba.push(gen_A(1, 0), -1);
  CHECK_FALSE(check_evenly_worded(aba));
}

TEST_CASE("fully linked recognizes crossings") {
  GeneratorSymbol a = gen_A(1, 0), b = gen_B(1, 0), c = gen_A(2, 0), dsym = gen_B(2, 0);
  CHECK(check_fully_linked(commutator(a, b)));

  Word two_pairs = commutator(a, b);
  two_pairs.append(commutator(c, dsym));
  CHECK(check_fully_linked(two_pairs));

  // nested occurrences, as a raw sequence since the reduced word collapses
  std::vector<Letter> nested{{a, 1}, {b, 1}, {b, -1}, {a, -1}};
  CHECK(check_evenly_worded(std::span<const Letter>(nested)));
  CHECK_FALSE(check_fully_linked(std::span<const Letter>(nested)));

  // a(bcb^-1 c^-1)a^-1 ... reduced nested word on three symbols
  Word reduced_nested;
  reduced_nested.push(a, 1);
  reduced_nested.push(b, 1);
  reduced_nested.push(c, 1);
  reduced_nested.push(b, -1);
  reduced_nested.push(c, -1);
  reduced_nested.push(a, -1);
  CHECK_FALSE(check_fully_linked(reduced_nested));

  Word odd;  // evenly worded but no partner for the lone pair
  odd.push(a, 1);
  odd.push(a, -1);
  CHECK(odd.empty());  // reduces away entirely
  std::vector<Letter> lone{{a, 1}, {a, -1}};
  CHECK_FALSE(check_fully_linked(std::span<const Letter>(lone)));

  Word uneven;
  uneven.push(a, 1);
  uneven.push(b, 1);
  uneven.push(a, -1);
  CHECK_THROWS_AS((void)check_fully_linked(uneven), validation_error);
}

TEST_CASE("symbol printing") {
  CHECK(to_string(gen_A(1, 0)) == "A_1");
  CHECK(to_string(gen_A(1, 1)) == "h(A_1)");
  CHECK(to_string(gen_X(3, 2)) == "h^2(X_3)");
  CHECK(to_string(gen_alpha()) == "alpha");
  CHECK(to_string(gen_beta()) == "beta");
  CHECK(to_string(base_x(4)) == "x_4");
}
