#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "surfinv/artin.hpp"
#include "surfinv/braid.hpp"

namespace surfinv {

/// Finitely presented group: generators x_1..x_m, relators as freely
/// reduced words (each relator equals 1). No relators means free of rank m.
struct GroupPresentation {
  int generator_count = 0;
  std::vector<FreeWord> relators;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Link group presentation of the torus-covering T^2-link with boundary
/// braids a and b: relators x_j^{-1} Artin(a)(x_j) and x_j^{-1} Artin(b)(x_j)
/// for all j, freely reduced, trivial relators dropped. The caller is
/// expected to have checked commute(a, b); the presentation is computable
/// either way.
inline GroupPresentation link_group(const BraidWord& a, const BraidWord& b) {
  if (a.degree != b.degree) throw std::invalid_argument("braid degree mismatch");
  const int m = a.degree;
  GroupPresentation p;
  p.generator_count = m;
  for (const BraidWord* w : {&a, &b}) {
    GeneratorImages im = artin(*w);
    for (int j = 1; j <= m; ++j) {
      FreeWord r = FreeWord::generator(-j) * im.image(j);
      if (!r.empty()) p.relators.push_back(std::move(r));
    }
  }
  return p;
}

/// Commutator [x_i, x_j] = x_i x_j x_i^{-1} x_j^{-1}.
inline FreeWord commutator(int i, int j) { return FreeWord({i, j, -i, -j}); }

}  // namespace surfinv
