#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfinv/quandle.hpp"

namespace surfinv {

/// 3-cocycle of a finite quandle with values in the infinite cyclic group
/// <t>, stored as the integer exponent table: theta(x,y,z) = t^exponent(x,y,z).
/// Multiplicative identities on theta become additive identities here.
struct Cocycle3 {
  Quandle quandle;
  std::vector<std::vector<std::vector<std::int64_t>>> exponents;

  std::int64_t exponent(int x, int y, int z) const { return exponents[x][y][z]; }

  static Cocycle3 zero(const Quandle& q) {
    Cocycle3 c;
    c.quandle = q;
    const int n = q.size;
    c.exponents.assign(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0)));
    return c;
  }

  friend bool operator==(const Cocycle3&, const Cocycle3&) = default;
};

/// theta(x,y,z) = t^{(x-y)(y-z)(z-x) z} on the trivial quandle T_3.
inline Cocycle3 theta_z(int n) {
  if (n != 3) throw std::invalid_argument("theta_z is defined over T_3 only");
  Cocycle3 c = Cocycle3::zero(trivial_quandle(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        c.exponents[x][y][z] = static_cast<std::int64_t>(x - y) * (y - z) * (z - x) * z;
  return c;
}

/// theta'(x,y,z) = t^{(x-y)(y-z)(z-x) x} on the trivial quandle T_3.
inline Cocycle3 theta_x(int n) {
  if (n != 3) throw std::invalid_argument("theta_x is defined over T_3 only");
  Cocycle3 c = Cocycle3::zero(trivial_quandle(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        c.exponents[x][y][z] = static_cast<std::int64_t>(x - y) * (y - z) * (z - x) * x;
  return c;
}

struct CocycleViolation {
  int condition;              // 1 for (theta1), 2 for (theta2)
  std::array<int, 4> tuple;   // (x,y,z) for theta1 (last slot -1), (x,y,z,w) for theta2

  std::string to_string() const {
    std::string s = "(theta" + std::to_string(condition) + ") at (";
    bool first = true;
    for (int v : tuple) {
      if (v < 0) break;
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + ")";
  }
};

/// Exhaustively checks (theta1) over X^3 and (theta2) over X^4:
///   (theta1) exponent(x,y,z) = 0 when x = y or y = z,
///   (theta2) e(x,z,w) - e(x,y,w) + e(x,y,z)
///          = e(x*y,z,w) - e(x*z,y*z,w) + e(x*w,y*w,z*w).
inline std::vector<CocycleViolation> validate_cocycle(const Cocycle3& c) {
  std::vector<CocycleViolation> bad;
  const Quandle& q = c.quandle;
  const int n = q.size;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if ((x == y || y == z) && c.exponent(x, y, z) != 0)
          bad.push_back({1, {x, y, z, -1}});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          std::int64_t lhs = c.exponent(x, z, w) - c.exponent(x, y, w) + c.exponent(x, y, z);
          std::int64_t rhs = c.exponent(q.op(x, y), z, w) -
                             c.exponent(q.op(x, z), q.op(y, z), w) +
                             c.exponent(q.op(x, w), q.op(y, w), q.op(z, w));
          if (lhs != rhs) bad.push_back({2, {x, y, z, w}});
        }
  return bad;
}

}  // namespace surfinv
