#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace clg {

// Basis blade of Cl(1,3) encoded as a 4-bit generator mask.
// Bit a set  <=>  generator e^a present; generators kept in ascending order,
// so mask 0b0011 is e^{01}, mask 0b1111 is e^{0123}.
using Blade = std::uint8_t;

inline constexpr int kBladeCount = 16;

constexpr int grade_of(Blade b) { return std::popcount(b); }

// Metric signature diag(1,-1,-1,-1).
constexpr int metric_sign(int generator) { return generator == 0 ? 1 : -1; }

struct BladeProduct {
  int sign;
  Blade blade;
};

// Clifford product of two basis blades: append the generators of b one by
// one, counting adjacent transpositions needed to restore ascending order
// and contracting repeated generators with the metric.
constexpr BladeProduct blade_mul(Blade a, Blade b) {
  int sign = 1;
  unsigned acc = a;
  for (int g = 0; g < 4; ++g) {
    if (!(b & (1u << g))) continue;
    // move e^g left past every generator in acc with larger index
    if (std::popcount(acc >> (g + 1)) & 1) sign = -sign;
    if (acc & (1u << g)) {
      sign *= metric_sign(g);
      acc &= ~(1u << g);
    } else {
      acc |= 1u << g;
    }
  }
  return {sign, static_cast<Blade>(acc)};
}

struct CayleyTable {
  std::array<std::array<signed char, 16>, 16> sign{};
  std::array<std::array<Blade, 16>, 16> blade{};
};

constexpr CayleyTable make_cayley_table() {
  CayleyTable t;
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      auto p = blade_mul(static_cast<Blade>(a), static_cast<Blade>(b));
      t.sign[a][b] = static_cast<signed char>(p.sign);
      t.blade[a][b] = p.blade;
    }
  return t;
}

inline constexpr CayleyTable kCayley = make_cayley_table();

// Reverse signs by grade: +,+,-,-,+  (parity of k(k-1)/2).
constexpr int reverse_sign(int grade) {
  return ((grade * (grade - 1) / 2) % 2 == 0) ? 1 : -1;
}

inline std::string blade_name(Blade b) {
  if (b == 0) return "e";
  std::string s = "e";
  for (int g = 0; g < 4; ++g)
    if (b & (1u << g)) s += static_cast<char>('0' + g);
  return s;
}

// Parses names of the form "e", "e0", "e013", ...; returns false on junk.
inline bool parse_blade(const std::string& name, Blade& out) {
  if (name.empty() || name[0] != 'e') return false;
  unsigned mask = 0;
  int last = -1;
  for (std::size_t i = 1; i < name.size(); ++i) {
    int g = name[i] - '0';
    if (g < 0 || g > 3 || g <= last) return false;
    mask |= 1u << g;
    last = g;
  }
  out = static_cast<Blade>(mask);
  return true;
}

}  // namespace clg
