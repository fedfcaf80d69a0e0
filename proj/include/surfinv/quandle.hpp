#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfinv {

/// Finite quandle on elements 0..size-1 with operation table[a][b] = a*b.
/// Axioms: (i) a*a = a, (ii) a -> a*b is a bijection for each b,
/// (iii) (a*b)*c = (a*c)*(b*c).
struct Quandle {
  int size = 0;
  std::vector<std::vector<int>> table;

  int op(int a, int b) const { return table[a][b]; }

  /// Unique z with z*b = a (right translations are bijections).
  int rdiv(int a, int b) const {
    for (int z = 0; z < size; ++z)
      if (table[z][b] == a) return z;
    throw std::logic_error("quandle: right translation by " + std::to_string(b) +
                           " is not surjective");
  }

  friend bool operator==(const Quandle&, const Quandle&) = default;
};

struct QuandleViolation {
  int axiom;                  // 1, 2, or 3
  std::array<int, 3> tuple;   // witnesses; unused slots are -1

  std::string to_string() const {
    std::string s = "axiom (" + std::string(axiom == 1 ? "i" : axiom == 2 ? "ii" : "iii") + ") at (";
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

inline std::vector<QuandleViolation> validate_quandle(const Quandle& q) {
  std::vector<QuandleViolation> bad;
  const int n = q.size;
  if (n < 1 || static_cast<int>(q.table.size()) != n) {
    bad.push_back({2, {-1, -1, -1}});
    return bad;
  }
  for (const auto& row : q.table) {
    if (static_cast<int>(row.size()) != n) {
      bad.push_back({2, {-1, -1, -1}});
      return bad;
    }
    for (int v : row)
      if (v < 0 || v >= n) {
        bad.push_back({2, {-1, -1, -1}});
        return bad;
      }
  }
  for (int a = 0; a < n; ++a)
    if (q.table[a][a] != a) bad.push_back({1, {a, a, -1}});
  for (int b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (int a = 0; a < n; ++a) {
      int v = q.table[a][b];
      if (seen[v]) bad.push_back({2, {a, b, -1}});
      seen[v] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (q.table[q.table[a][b]][c] != q.table[q.table[a][c]][q.table[b][c]])
          bad.push_back({3, {a, b, c}});
  return bad;
}

/// T_n: a*b = a.
inline Quandle trivial_quandle(int n) {
  if (n < 1) throw std::invalid_argument("trivial_quandle requires n >= 1");
  Quandle q;
  q.size = n;
  q.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) q.table[a][b] = a;
  return q;
}

/// Dihedral quandle R_n: a*b = 2b - a mod n.
inline Quandle dihedral_quandle(int n) {
  if (n < 1) throw std::invalid_argument("dihedral_quandle requires n >= 1");
  Quandle q;
  q.size = n;
  q.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) q.table[a][b] = ((2 * b - a) % n + n) % n;
  return q;
}

}  // namespace surfinv
