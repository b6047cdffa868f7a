#include "adapted/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace adapted {

namespace {

void extend_multisets(i64 p, i64 t, i64 from, std::vector<i64>& prefix,
                      std::vector<std::vector<i64>>& out) {
  if (static_cast<i64>(prefix.size()) == t) {
    i64 sum = std::accumulate(prefix.begin(), prefix.end(), i64{0});
    if (sum % p == 0) out.push_back(prefix);
    return;
  }
  for (i64 v = from; v < p; ++v) {
    prefix.push_back(v);
    extend_multisets(p, t, v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<i64>> all_n_multisets(i64 p, i64 t) {
  std::vector<std::vector<i64>> out;
  if (t < 2) return out;
  std::vector<i64> prefix;
  extend_multisets(p, t, 1, prefix, out);
  return out;
}

BaseWord random_kernel_word(std::mt19937_64& rng, const PrimeOrderData& d, std::size_t max_len) {
  std::vector<BaseSymbol> alphabet;
  for (int i = 1; i <= d.g0; ++i) {
    alphabet.push_back(base_a(i));
    alphabet.push_back(base_b(i));
  }
  for (int j = 1; j <= d.t; ++j) alphabet.push_back(base_x(j));
  ensure(!alphabet.empty(), "empty alphabet");

  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> sym_dist(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);

  auto phi = [&](const BaseSymbol& s) -> i64 {
    if (d.t > 0) return s.kind == BaseSymbol::Kind::x ? d.n[static_cast<std::size_t>(s.index - 1)] : 0;
    return (s.kind == BaseSymbol::Kind::a && s.index == 1) ? 1 : 0;
  };

  for (;;) {
    std::size_t len = len_dist(rng);
    BaseWord w;
    i64 c = 0;
    for (std::size_t i = 0; i < len; ++i) {
      // avoid immediate cancellation so the target length is usually reached
      for (;;) {
        BaseSymbol s = alphabet[sym_dist(rng)];
        int sign = sign_dist(rng) ? 1 : -1;
        const auto& ls = w.letters();
        if (!ls.empty() && ls.back().sym == s && ls.back().sign == -sign) continue;
        w.push(s, sign);
        c += sign * phi(s);
        break;
      }
    }
    if (mod_nonneg(c, d.p) == 0) return w;
  }
}

std::optional<std::vector<i64>> random_n_vector(std::mt19937_64& rng, i64 p, i64 t) {
  if (t < 2) return std::nullopt;
  std::uniform_int_distribution<i64> value(1, p - 1);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::vector<i64> n(static_cast<std::size_t>(t));
    i64 sum = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      n[i] = value(rng);
      sum += n[i];
    }
    i64 last = mod_nonneg(-sum, p);
    if (last == 0) continue;
    n.back() = last;
    std::sort(n.begin(), n.end());
    return n;
  }
  return std::nullopt;
}

}  // namespace adapted
