#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "adapted/errors.hpp"

namespace adapted {

/// Generator of the quotient-surface group: a_i, b_i (handles) or x_j
/// (cone points).
struct BaseSymbol {
  enum class Kind : unsigned char { a, b, x };
  Kind kind;
  int index;  // 1-based

  auto operator<=>(const BaseSymbol&) const = default;
};

std::string to_string(const BaseSymbol& s);

inline BaseSymbol base_a(int i) { return {BaseSymbol::Kind::a, i}; }
inline BaseSymbol base_b(int i) { return {BaseSymbol::Kind::b, i}; }
inline BaseSymbol base_x(int j) { return {BaseSymbol::Kind::x, j}; }

/// Generator of the surface group presented on the rewritten subgroup
/// generators. A/B carry a handle index and an h-power; X carries the cone
/// point index j and an h-power; AlphaBeta (base 0 = alpha, 1 = beta) are the
/// two special curves of the fixed-point-free case.
struct GeneratorSymbol {
  enum class Kind : unsigned char { A, B, X, AlphaBeta };
  Kind kind;
  int base;
  int power;

  auto operator<=>(const GeneratorSymbol&) const = default;
};

std::string to_string(const GeneratorSymbol& s);

inline GeneratorSymbol gen_A(int i, int k) { return {GeneratorSymbol::Kind::A, i, k}; }
inline GeneratorSymbol gen_B(int i, int k) { return {GeneratorSymbol::Kind::B, i, k}; }
inline GeneratorSymbol gen_X(int j, int k) { return {GeneratorSymbol::Kind::X, j, k}; }
inline GeneratorSymbol gen_alpha() { return {GeneratorSymbol::Kind::AlphaBeta, 0, 0}; }
inline GeneratorSymbol gen_beta() { return {GeneratorSymbol::Kind::AlphaBeta, 1, 0}; }

/// Freely reduced word over a signed alphabet. The letter sequence never
/// contains an adjacent pair s^+ s^- or s^- s^+.
template <typename Sym>
class BasicWord {
 public:
  struct Letter {
    Sym sym;
    int sign;  // +1 or -1
    bool operator==(const Letter&) const = default;
  };

  BasicWord() = default;

  static BasicWord reduced(const std::vector<Letter>& letters) {
    BasicWord w;
    for (const Letter& l : letters) w.push(l.sym, l.sign);
    return w;
  }

  void push(const Sym& sym, int sign) {
    ensure(sign == 1 || sign == -1, "letter sign must be +-1");
    if (!letters_.empty() && letters_.back().sym == sym && letters_.back().sign == -sign)
      letters_.pop_back();
    else
      letters_.push_back({sym, sign});
  }

  void append(const BasicWord& other) {
    for (const Letter& l : other.letters_) push(l.sym, l.sign);
  }

  void append_inverse(const BasicWord& other) {
    for (auto it = other.letters_.rbegin(); it != other.letters_.rend(); ++it)
      push(it->sym, -it->sign);
  }

  BasicWord inverse() const {
    BasicWord w;
    w.append_inverse(*this);
    return w;
  }

  BasicWord cyclically_reduced() const {
    BasicWord w = *this;
    while (w.letters_.size() >= 2) {
      const Letter& front = w.letters_.front();
      const Letter& back = w.letters_.back();
      if (front.sym == back.sym && front.sign == -back.sign) {
        w.letters_.erase(w.letters_.begin());
        w.letters_.pop_back();
      } else {
        break;
      }
    }
    return w;
  }

  /// Replaces occurrences of mapped symbols by their replacement words
  /// (inverted for negative occurrences) and reduces.
  BasicWord substituted(const std::map<Sym, BasicWord>& replacements) const {
    BasicWord out;
    for (const Letter& l : letters_) {
      auto it = replacements.find(l.sym);
      if (it == replacements.end()) {
        out.push(l.sym, l.sign);
      } else if (l.sign > 0) {
        out.append(it->second);
      } else {
        out.append_inverse(it->second);
      }
    }
    return out;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  bool operator==(const BasicWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

template <typename Sym>
std::map<Sym, long long> abelianized(const BasicWord<Sym>& w) {
  std::map<Sym, long long> e;
  for (const auto& l : w.letters()) {
    e[l.sym] += l.sign;
    if (e[l.sym] == 0) e.erase(l.sym);
  }
  return e;
}

using BaseWord = BasicWord<BaseSymbol>;
using Word = BasicWord<GeneratorSymbol>;
using BaseLetter = BaseWord::Letter;
using Letter = Word::Letter;

BaseWord base_power(const BaseSymbol& s, long long k);
BaseWord conjugated(const BaseWord& by, const BaseWord& w);
Word commutator(const GeneratorSymbol& a, const GeneratorSymbol& b);

std::string to_string(const BaseWord& w);
std::string to_string(const Word& w);

}  // namespace adapted
