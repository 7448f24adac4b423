#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vpg {

/// Exact nonnegative-friendly rational on int64. Always normalized: den > 0,
/// gcd(|num|, den) == 1. Comparisons cross-multiply in 128 bits, so values
/// stay exact for every weight arithmetic this project performs.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    long long g = std::gcd(a.den, b.den);
    return Rat(a.num * (b.den / g) + b.num * (a.den / g), (a.den / g) * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    long long g = std::gcd(a.den, b.den);
    return Rat(a.num * (b.den / g) - b.num * (a.den / g), (a.den / g) * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num * b.num, a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace vpg
