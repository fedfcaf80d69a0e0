#pragma once

// Shared helpers for the test suite.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "surfinv/braid.hpp"
#include "surfinv/quandle.hpp"

namespace testsupport {

/// The symmetric group on {0..n-1} as permutation arrays in lexicographic
/// order, with composition (f.g)(i) = f(g(i)).
struct SymmetricGroup {
  std::vector<std::vector<int>> elements;

  explicit SymmetricGroup(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      elements.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  int index_of(const std::vector<int>& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) throw std::logic_error("permutation not found");
    return static_cast<int>(it - elements.begin());
  }

  int mul(int f, int g) const {  // f after g
    const auto &pf = elements[f], &pg = elements[g];
    std::vector<int> r(pf.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = pf[pg[i]];
    return index_of(r);
  }

  int inv(int f) const {
    const auto& pf = elements[f];
    std::vector<int> r(pf.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[pf[i]] = static_cast<int>(i);
    return index_of(r);
  }
};

/// Conjugation quandle of a symmetric group: x*y = y x y^{-1}.
inline surfinv::Quandle conjugation_quandle(const SymmetricGroup& g) {
  surfinv::Quandle q;
  q.size = static_cast<int>(g.elements.size());
  q.table.assign(q.size, std::vector<int>(q.size));
  for (int x = 0; x < q.size; ++x)
    for (int y = 0; y < q.size; ++y) q.table[x][y] = g.mul(g.mul(y, x), g.inv(y));
  return q;
}

inline surfinv::BraidWord sigma_power_word(int degree, int e1, int e2) {
  // sigma_1^{e1} sigma_2^{e2} as a word, negative exponents meaning inverses
  surfinv::BraidWord w(degree);
  for (int k = 0; k < (e1 < 0 ? -e1 : e1); ++k) w.push(1, e1 < 0 ? -1 : 1);
  for (int k = 0; k < (e2 < 0 ? -e2 : e2); ++k) w.push(2, e2 < 0 ? -1 : 1);
  return w;
}

/// Boundary braid sigma_1^2 sigma_2^{2n} of the degree-3 family.
inline surfinv::BraidWord family_a(int n) { return sigma_power_word(3, 2, 2 * n); }

inline surfinv::BraidWord delta_squared(int degree) {
  return surfinv::garside_delta(degree) * surfinv::garside_delta(degree);
}

}  // namespace testsupport
