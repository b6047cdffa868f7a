#include "adapted/words.hpp"

#include <sstream>

namespace adapted {

std::string to_string(const BaseSymbol& s) {
  const char* name = s.kind == BaseSymbol::Kind::a   ? "a"
                     : s.kind == BaseSymbol::Kind::b ? "b"
                                                     : "x";
  return std::string(name) + "_" + std::to_string(s.index);
}

namespace {

std::string powered(const std::string& core, int power) {
  if (power == 0) return core;
  if (power == 1) return "h(" + core + ")";
  return "h^" + std::to_string(power) + "(" + core + ")";
}

}  // namespace

std::string to_string(const GeneratorSymbol& s) {
  switch (s.kind) {
    case GeneratorSymbol::Kind::A:
      return powered("A_" + std::to_string(s.base), s.power);
    case GeneratorSymbol::Kind::B:
      return powered("B_" + std::to_string(s.base), s.power);
    case GeneratorSymbol::Kind::X:
      return powered("X_" + std::to_string(s.base), s.power);
    case GeneratorSymbol::Kind::AlphaBeta:
      return s.base == 0 ? "alpha" : "beta";
  }
  return "?";
}

BaseWord base_power(const BaseSymbol& s, long long k) {
  BaseWord w;
  int sign = k >= 0 ? 1 : -1;
  for (long long i = 0; i < (k >= 0 ? k : -k); ++i) w.push(s, sign);
  return w;
}

BaseWord conjugated(const BaseWord& by, const BaseWord& w) {
  BaseWord out = by;
  out.append(w);
  out.append_inverse(by);
  return out;
}

Word commutator(const GeneratorSymbol& a, const GeneratorSymbol& b) {
  Word w;
  w.push(a, 1);
  w.push(b, 1);
  w.push(a, -1);
  w.push(b, -1);
  return w;
}

namespace {

template <typename W>
std::string word_string(const W& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << " ";
    first = false;
    os << to_string(l.sym);
    if (l.sign < 0) os << "^-1";
  }
  return os.str();
}

}  // namespace

std::string to_string(const BaseWord& w) { return word_string(w); }
std::string to_string(const Word& w) { return word_string(w); }

}  // namespace adapted
