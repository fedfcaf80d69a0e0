#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "surfinv/bigint.hpp"
#include "surfinv/presentation.hpp"

namespace surfinv {

/// Invariant factors of a finitely generated abelian group:
/// Z^rank + Z/t_1 + ... + Z/t_k with t_1 | t_2 | ... | t_k, each t > 1.
struct AbelianInvariants {
  int rank = 0;
  std::vector<long long> torsion;

  std::string to_string() const {
    std::string s = "rank " + std::to_string(rank);
    if (!torsion.empty()) {
      s += ", torsion";
      for (long long t : torsion) s += " " + std::to_string(t);
    }
    return s;
  }

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Smith normal form diagonal of an integer matrix, exact arithmetic.
/// Returns nonnegative d_1 | d_2 | ... (zeros excluded).
inline std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m) {
  std::vector<BigInt> diag;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t top = 0;
  while (top < rows && top < cols) {
    // pick the smallest nonzero entry in the remaining block as pivot
    std::size_t pr = top, pc = top;
    bool found = false;
    for (std::size_t i = top; i < rows; ++i)
      for (std::size_t j = top; j < cols; ++j) {
        if (m[i][j].is_zero()) continue;
        if (!found || m[i][j].abs() < m[pr][pc].abs()) {
          pr = i;
          pc = j;
          found = true;
        }
      }
    if (!found) break;
    std::swap(m[top], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = top + 1; i < rows; ++i) {
        if (m[i][top].is_zero()) continue;
        BigInt q = m[i][top] / m[top][top];
        for (std::size_t j = top; j < cols; ++j) m[i][j] = m[i][j] - q * m[top][j];
        if (!m[i][top].is_zero()) {
          std::swap(m[top], m[i]);  // remainder is smaller; euclid continues
          clean = false;
        }
      }
      for (std::size_t j = top + 1; j < cols; ++j) {
        if (m[top][j].is_zero()) continue;
        BigInt q = m[top][j] / m[top][top];
        for (std::size_t i = top; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][top];
        if (!m[top][j].is_zero()) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][j]);
          clean = false;
        }
      }
    }
    // enforce divisibility: pivot must divide every remaining entry
    bool restart = false;
    for (std::size_t i = top + 1; i < rows && !restart; ++i)
      for (std::size_t j = top + 1; j < cols && !restart; ++j) {
        if ((m[i][j] % m[top][top]).is_zero()) continue;
        for (std::size_t jj = top; jj < cols; ++jj) m[top][jj] = m[top][jj] + m[i][jj];
        restart = true;
      }
    if (restart) continue;
    diag.push_back(m[top][top].abs());
    ++top;
  }
  return diag;
}

/// Relator exponent-sum matrix (rows = relators, cols = generators).
inline std::vector<std::vector<BigInt>> relation_matrix(const GroupPresentation& p) {
  std::vector<std::vector<BigInt>> m;
  m.reserve(p.relators.size());
  for (const auto& r : p.relators) {
    auto sums = r.exponent_sums(p.generator_count);
    std::vector<BigInt> row;
    row.reserve(sums.size());
    for (long long s : sums) row.emplace_back(s);
    m.push_back(std::move(row));
  }
  return m;
}

/// Abelianization via Smith normal form of the relation matrix.
inline AbelianInvariants abelianization(const GroupPresentation& p) {
  AbelianInvariants inv;
  auto diag = smith_diagonal(relation_matrix(p));
  inv.rank = p.generator_count - static_cast<int>(diag.size());
  for (const auto& d : diag)
    if (d > BigInt(1)) inv.torsion.push_back(d.to_int64());
  return inv;
}

}  // namespace surfinv
