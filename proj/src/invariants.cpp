#include "adapted/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace adapted {

bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

i64 mod_nonneg(i64 a, i64 p) {
  i64 r = a % p;
  return r < 0 ? r + p : r;
}

i64 mod_inverse(i64 a, i64 p) {
  a = mod_nonneg(a, p);
  require(a != 0, errc::out_of_range, "no inverse of 0 mod " + std::to_string(p));
  // extended Euclid
  i64 old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  ensure(old_r == 1, "gcd(" + std::to_string(a) + "," + std::to_string(p) + ") != 1");
  return mod_nonneg(old_s, p);
}

bool PrimeOrderData::sorted_normalized() const {
  return std::is_sorted(n.begin(), n.end());
}

namespace {

PrimeOrderData derive(i64 p, const std::vector<i64>& n, i64 g0, bool enforce_genus) {
  require(is_prime(p), errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  require(g0 >= 0, errc::out_of_range, "g0 = " + std::to_string(g0) + " is negative");
  i64 t = static_cast<i64>(n.size());
  require(t != 1, errc::invalid_t, "t = 1 is impossible for a nonzero rotation sum");
  require(t >= 2, errc::invalid_t,
          "empty n-vector; use the fixed-point-free constructor for t = 0");

  i64 sum = 0;
  for (i64 v : n) {
    require(v > 0 && v < p, errc::out_of_range,
            "rotation datum " + std::to_string(v) + " outside (0, " + std::to_string(p) + ")");
    sum += v;
  }
  require(sum % p == 0, errc::rotation_sum_nonzero,
          "sum of rotation data = " + std::to_string(sum) + " is " +
              std::to_string(sum % p) + " mod " + std::to_string(p));

  PrimeOrderData d;
  d.p = p;
  d.t = t;
  d.n = n;
  d.g0 = g0;
  d.s.reserve(n.size());
  for (i64 v : n) d.s.push_back(mod_inverse(v, p));
  d.m.assign(static_cast<std::size_t>(p - 1), 0);
  for (i64 v : n) d.m[static_cast<std::size_t>(v - 1)] += 1;
  i64 twice_g = 2 * p * g0 + (p - 1) * (t - 2);
  ensure(twice_g % 2 == 0, "2g = " + std::to_string(twice_g) + " is odd");
  d.g = twice_g / 2;
  if (enforce_genus)
    require(d.g >= 2, errc::genus_too_small, "derived genus g = " + std::to_string(d.g) + " < 2");
  d.input_index.resize(n.size());
  std::iota(d.input_index.begin(), d.input_index.end(), std::size_t{0});
  return d;
}

}  // namespace

PrimeOrderData validate(i64 p, const std::vector<i64>& n, i64 g0) {
  return derive(p, n, g0, true);
}

PrimeOrderData make_unchecked(i64 p, const std::vector<i64>& n, i64 g0) {
  return derive(p, n, g0, false);
}

PrimeOrderData validate_from_multiplicities(i64 p, const std::vector<i64>& m, i64 g0) {
  require(is_prime(p), errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  require(static_cast<i64>(m.size()) == p - 1, errc::out_of_range,
          "multiplicity vector must have length p - 1 = " + std::to_string(p - 1));
  std::vector<i64> n;
  for (std::size_t j = 0; j < m.size(); ++j) {
    require(m[j] >= 0, errc::out_of_range, "negative multiplicity");
    n.insert(n.end(), static_cast<std::size_t>(m[j]), static_cast<i64>(j + 1));
  }
  return validate(p, n, g0);
}

PrimeOrderData validate_fixed_point_free(i64 p, i64 g0) {
  require(is_prime(p), errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  require(g0 >= 0, errc::out_of_range, "g0 = " + std::to_string(g0) + " is negative");
  PrimeOrderData d;
  d.p = p;
  d.t = 0;
  d.g0 = g0;
  d.g = p * (g0 - 1) + 1;
  require(d.g >= 2, errc::genus_too_small, "derived genus g = " + std::to_string(d.g) + " < 2");
  return d;
}

PrimeOrderData normalize_conjugacy(const PrimeOrderData& d) {
  if (d.t == 0 || d.sorted_normalized()) return d;
  std::vector<std::size_t> order(d.n.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d.n[a] < d.n[b]; });
  PrimeOrderData out = d;
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.n[i] = d.n[order[i]];
    out.s[i] = d.s[order[i]];
    out.input_index[i] = d.input_index[order[i]];
  }
  return out;
}

PrimeOrderData power_class(const PrimeOrderData& d, i64 k) {
  i64 kk = mod_nonneg(k, d.p);
  require(kk != 0, errc::bad_exponent,
          "exponent " + std::to_string(k) + " is 0 mod " + std::to_string(d.p));
  if (d.t == 0) return d;
  PrimeOrderData out = d;
  for (std::size_t i = 0; i < out.n.size(); ++i) {
    out.n[i] = mod_nonneg(kk * d.n[i], d.p);
    out.s[i] = mod_inverse(out.n[i], d.p);
  }
  std::fill(out.m.begin(), out.m.end(), 0);
  for (i64 v : out.n) out.m[static_cast<std::size_t>(v - 1)] += 1;
  return normalize_conjugacy(out);
}

}  // namespace adapted
