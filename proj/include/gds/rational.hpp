#pragma once

#include <cstdint>
#include <string>

namespace gds {

// 128-bit unsigned arithmetic backs the exact counting layer. Magnitudes are
// bounded by (n+1)! for n <= 30 vertices, which fits comfortably in 128 bits.
using uint128 = unsigned __int128;

std::string u128_str(uint128 v);
uint128 u128_gcd(uint128 a, uint128 b);

/// n! as a 128-bit value. Valid for 0 <= n <= 34.
uint128 factorial128(int n);

/// Exact nonnegative rational, always stored in lowest terms.
struct Rational {
  uint128 num = 0;
  uint128 den = 1;

  static Rational make(uint128 n, uint128 d);

  bool le_one() const { return num <= den; }
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

}  // namespace gds
