#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "adapted/invariants.hpp"
#include "adapted/sampling.hpp"

using namespace adapted;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const validation_error& e) {
    return e.code();
  }
  FAIL("expected a validation_error");
  return errc::parse_error;
}

}  // namespace

TEST_CASE("validate derives t, m, s and g") {
  PrimeOrderData d = validate(3, {1, 1, 2, 1, 1}, 0);
  CHECK(d.t == 5);
  CHECK(d.m == std::vector<i64>{4, 1});
  CHECK(d.g == 3);
  CHECK(d.s == std::vector<i64>{1, 1, 2, 1, 1});

  PrimeOrderData involution = validate(2, {1, 1, 1, 1, 1, 1}, 0);
  CHECK(involution.t == 6);
  CHECK(involution.m == std::vector<i64>{6});
  CHECK(involution.g == 2);

  PrimeOrderData two_points = validate(3, {1, 2}, 1);
  CHECK(two_points.t == 2);
  CHECK(two_points.g == 3);
}

TEST_CASE("validate rejects bad data with the specific error") {
  CHECK(code_of([] { validate(4, {1, 1, 2}, 0); }) == errc::not_prime);
  CHECK(code_of([] { validate(3, {1, 1}, 0); }) == errc::rotation_sum_nonzero);
  CHECK(code_of([] { validate(3, {1, 3}, 0); }) == errc::out_of_range);
  CHECK(code_of([] { validate(3, {1}, 0); }) == errc::invalid_t);
  CHECK(code_of([] { validate(3, {1, 1, 1}, 0); }) == errc::genus_too_small);
  CHECK(code_of([] { validate(3, {1, 2}, -1); }) == errc::out_of_range);
}

TEST_CASE("multiplicity input expands to the sorted n-vector") {
  PrimeOrderData d = validate_from_multiplicities(3, {4, 1}, 0);
  CHECK(d.n == std::vector<i64>{1, 1, 1, 1, 2});
  CHECK(d.g == 3);
  CHECK(code_of([] { validate_from_multiplicities(3, {4}, 0); }) == errc::out_of_range);
}

TEST_CASE("fixed point free classes") {
  CHECK(validate_fixed_point_free(3, 2).g == 4);
  CHECK(validate_fixed_point_free(2, 2).g == 3);
  PrimeOrderData d = validate_fixed_point_free(5, 2);
  CHECK(d.t == 0);
  CHECK(d.n.empty());
  CHECK(d.m.empty());
  CHECK(code_of([] { validate_fixed_point_free(5, 1); }) == errc::genus_too_small);
}

TEST_CASE("normalize_conjugacy sorts and records the permutation") {
  PrimeOrderData d = normalize_conjugacy(validate(3, {1, 1, 2, 1, 1}, 0));
  CHECK(d.n == std::vector<i64>{1, 1, 1, 1, 2});
  CHECK(d.input_index == std::vector<std::size_t>{0, 1, 3, 4, 2});
  CHECK(normalize_conjugacy(d).n == d.n);  // idempotent

  PrimeOrderData e = normalize_conjugacy(validate(5, {4, 2, 1, 3}, 0));
  CHECK(e.n == std::vector<i64>{1, 2, 3, 4});

  PrimeOrderData f = normalize_conjugacy(validate(2, {1, 1}, 1));
  CHECK(f.n == std::vector<i64>{1, 1});
}

TEST_CASE("power_class multiplies rotation data") {
  PrimeOrderData d = validate(3, {1, 1, 1, 1, 2}, 0);
  CHECK(power_class(d, 1).n == d.n);
  CHECK(power_class(d, 2).n == std::vector<i64>{1, 2, 2, 2, 2});
  CHECK(power_class(validate(5, {1, 4}, 1), 2).n == std::vector<i64>{2, 3});
  CHECK(code_of([&] { power_class(d, 3); }) == errc::bad_exponent);
  CHECK(power_class(d, 2).g == d.g);
  CHECK(power_class(validate_fixed_point_free(3, 2), 2).g == 4);
}

TEST_CASE("power_class composes multiplicatively") {
  std::mt19937_64 rng(7);
  for (i64 p : {3, 5, 7}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto n = random_n_vector(rng, p, 4);
      REQUIRE(n.has_value());
      PrimeOrderData d = make_unchecked(p, *n, 1);
      for (i64 a = 1; a < p; ++a)
        for (i64 b = 1; b < p; ++b) {
          PrimeOrderData lhs = power_class(power_class(d, a), b);
          PrimeOrderData rhs = power_class(d, mod_nonneg(a * b, p));
          CHECK(lhs.n == rhs.n);
          CHECK(lhs.m == rhs.m);
        }
    }
  }
}

TEST_CASE("invariant identities hold across random classes") {
  std::mt19937_64 rng(11);
  for (i64 p : {2, 3, 5, 7}) {
    for (i64 t : {2, 3, 4, 5, 6}) {
      if (p == 2 && t % 2 != 0) continue;
      auto n = random_n_vector(rng, p, t);
      if (!n) continue;
      PrimeOrderData d = make_unchecked(p, *n, 2);
      CHECK(2 * d.g - 2 * d.p * d.g0 - (d.p - 1) * (d.t - 2) == 0);
      std::vector<i64> recount(static_cast<std::size_t>(p - 1), 0);
      for (i64 v : d.n) recount[static_cast<std::size_t>(v - 1)] += 1;
      CHECK(recount == d.m);
      for (std::size_t i = 0; i < d.n.size(); ++i)
        CHECK(mod_nonneg(d.s[i] * d.n[i], d.p) == 1);
      i64 weighted = 0;
      for (std::size_t j = 0; j < d.m.size(); ++j)
        weighted += static_cast<i64>(j + 1) * d.m[j];
      CHECK(weighted % d.p == 0);
    }
  }
}
