#pragma once

#include <cstdint>

namespace coxbp {

// a + b*phi with phi^2 = phi + 1. Integer scalars have b == 0.
struct Golden {
  std::int64_t a = 0;
  std::int64_t b = 0;

  constexpr Golden() = default;
  constexpr Golden(std::int64_t a_, std::int64_t b_ = 0) : a(a_), b(b_) {}

  static constexpr Golden phi() { return {0, 1}; }

  constexpr bool is_zero() const { return a == 0 && b == 0; }

  // Exact sign of a + b(1 + sqrt5)/2.
  constexpr int sign() const {
    std::int64_t x = 2 * a + b; // value = (x + b*sqrt5) / 2
    std::int64_t y = b;
    if (y == 0) return (x > 0) - (x < 0);
    if (x == 0) return (y > 0) - (y < 0);
    if (x > 0 && y > 0) return 1;
    if (x < 0 && y < 0) return -1;
    __int128 xx = static_cast<__int128>(x) * x;
    __int128 yy = static_cast<__int128>(y) * y * 5;
    if (x > 0) return xx > yy ? 1 : -1;
    return yy > xx ? 1 : -1;
  }

  constexpr double approx() const { return static_cast<double>(a) + static_cast<double>(b) * 1.6180339887498949; }

  friend constexpr Golden operator+(Golden p, Golden q) { return {p.a + q.a, p.b + q.b}; }
  friend constexpr Golden operator-(Golden p, Golden q) { return {p.a - q.a, p.b - q.b}; }
  friend constexpr Golden operator-(Golden p) { return {-p.a, -p.b}; }
  friend constexpr Golden operator*(Golden p, Golden q) {
    return {p.a * q.a + p.b * q.b, p.a * q.b + p.b * q.a + p.b * q.b};
  }
  Golden& operator+=(Golden q) { a += q.a; b += q.b; return *this; }
  Golden& operator-=(Golden q) { a -= q.a; b -= q.b; return *this; }
  friend constexpr bool operator==(Golden p, Golden q) = default;
};

} // namespace coxbp
