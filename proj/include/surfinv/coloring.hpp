#pragma once

#include <stdexcept>
#include <vector>

#include "surfinv/braid.hpp"
#include "surfinv/quandle.hpp"

namespace surfinv {

/// Strand colors at a braid-word slice, one quandle element per position.
using ColorVector = std::vector<int>;

/// One crossing of the coloring action. At sigma_i the strand at position
/// i passes over the strand at position i+1; the under strand is operated
/// by the over color: (c_i, c_{i+1}) -> (c_{i+1} * c_i, c_i). The inverse
/// crossing applies the inverse map, using the unique right-translation
/// preimage.
inline void color_step(ColorVector& c, int index, int sign, const Quandle& q) {
  int lo = index - 1;
  if (sign > 0) {
    int over = c[lo], under = c[lo + 1];
    c[lo] = q.op(under, over);
    c[lo + 1] = over;
  } else {
    int d1 = c[lo], d2 = c[lo + 1];
    c[lo] = d2;
    c[lo + 1] = q.rdiv(d1, d2);
  }
}

inline ColorVector color_action(const BraidWord& w, ColorVector c, const Quandle& q) {
  if (static_cast<int>(c.size()) != w.degree)
    throw std::invalid_argument("color vector size must equal braid degree");
  for (int v : c)
    if (v < 0 || v >= q.size)
      throw std::invalid_argument("color " + std::to_string(v) + " is not a quandle element");
  for (const auto& l : w.letters) color_step(c, l.index, l.sign, q);
  return c;
}

inline bool coloring_admissible(const BraidWord& a, const BraidWord& b, const ColorVector& c,
                                const Quandle& q) {
  return color_action(a, c, q) == c && color_action(b, c, q) == c;
}

/// All color vectors fixed by the actions of both boundary braids,
/// in lexicographic order. Exhaustive over size^degree candidates.
inline std::vector<ColorVector> enumerate_colorings(const BraidWord& a, const BraidWord& b,
                                                    const Quandle& q) {
  if (a.degree != b.degree) throw std::invalid_argument("braid degree mismatch");
  const int m = a.degree;
  std::vector<ColorVector> out;
  ColorVector c(m, 0);
  while (true) {
    if (coloring_admissible(a, b, c, q)) out.push_back(c);
    int k = m - 1;
    while (k >= 0 && c[k] == q.size - 1) c[k--] = 0;
    if (k < 0) break;
    ++c[k];
  }
  return out;
}

}  // namespace surfinv
