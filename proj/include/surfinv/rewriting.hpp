#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "surfinv/presentation.hpp"
#include "surfinv/smith.hpp"

namespace surfinv {

// String rewriting over the monoid alphabet with formal inverses.
// Symbol 2(j-1) is x_j and 2(j-1)+1 is x_j^{-1}, so the shortlex symbol
// order is x_1 < x_1^{-1} < x_2 < x_2^{-1} < ...

using Sym = int;
using SymWord = std::vector<Sym>;

inline Sym sym_of(int letter) {
  return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}
inline Sym sym_inverse(Sym s) { return s ^ 1; }

inline SymWord sym_word(const FreeWord& w) {
  SymWord out;
  out.reserve(w.size());
  for (int j : w.letters) out.push_back(sym_of(j));
  return out;
}

/// Shortlex: shorter first, then lexicographic on symbols.
inline bool shortlex_less(const SymWord& a, const SymWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct RewriteRule {
  SymWord lhs;
  SymWord rhs;
  bool active = true;
};

struct CompletionStats {
  std::size_t rules_created = 0;
  std::size_t equations_processed = 0;
};

struct RewriteSystem {
  int generator_count = 0;
  std::vector<RewriteRule> rules;  // active rules only after compaction
  bool complete = false;
  CompletionStats stats;

  /// Normal form under leftmost rewriting with rules tried in index order.
  /// For a complete system the strategy does not matter.
  SymWord reduce(SymWord w) const {
    std::size_t longest = 0;
    for (const auto& r : rules)
      if (r.active && r.lhs.size() > longest) longest = r.lhs.size();
    std::size_t i = 0;
    while (i < w.size()) {
      bool fired = false;
      for (const auto& r : rules) {
        if (!r.active) continue;
        if (r.lhs.size() > w.size() - i) continue;
        if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + i)) {
          SymWord next;
          next.reserve(w.size() - r.lhs.size() + r.rhs.size());
          next.insert(next.end(), w.begin(), w.begin() + i);
          next.insert(next.end(), r.rhs.begin(), r.rhs.end());
          next.insert(next.end(), w.begin() + i + r.lhs.size(), w.end());
          w = std::move(next);
          i = i > longest ? i - longest + 1 : 0;
          fired = true;
          break;
        }
      }
      if (!fired) ++i;
    }
    return w;
  }

  bool reduces_to_identity(const FreeWord& w) const { return reduce(sym_word(w)).empty(); }
};

struct Exhausted {
  std::string reason;
  CompletionStats stats;
};

using CompletionResult = std::variant<RewriteSystem, Exhausted>;

struct KbLimits {
  std::size_t max_rules = 4000;
  std::size_t max_len = 64;
};

namespace detail {

inline void push_overlaps(const RewriteSystem& rs, std::size_t i, std::size_t j,
                          std::deque<std::pair<SymWord, SymWord>>& queue) {
  const SymWord& l1 = rs.rules[i].lhs;
  const SymWord& l2 = rs.rules[j].lhs;
  // proper suffix/prefix overlaps: suffix of l1 of length k = prefix of l2
  std::size_t kmax = std::min(l1.size(), l2.size()) - 1;
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (!std::equal(l2.begin(), l2.begin() + k, l1.end() - k)) continue;
    SymWord left = rs.rules[i].rhs;  // apply rule i at 0
    left.insert(left.end(), l2.begin() + k, l2.end());
    SymWord right(l1.begin(), l1.end() - k);  // apply rule j at |l1|-k
    right.insert(right.end(), rs.rules[j].rhs.begin(), rs.rules[j].rhs.end());
    queue.emplace_back(std::move(left), std::move(right));
  }
  // containment: l2 occurs inside l1
  if (l2.size() <= l1.size()) {
    std::size_t last = l1.size() - l2.size();
    for (std::size_t pos = 0; pos <= last; ++pos) {
      if (i == j && pos == 0 && l1.size() == l2.size()) continue;  // identical rule
      if (!std::equal(l2.begin(), l2.end(), l1.begin() + pos)) continue;
      SymWord right(l1.begin(), l1.begin() + pos);
      right.insert(right.end(), rs.rules[j].rhs.begin(), rs.rules[j].rhs.end());
      right.insert(right.end(), l1.begin() + pos + l2.size(), l1.end());
      queue.emplace_back(rs.rules[i].rhs, std::move(right));
    }
  }
}

}  // namespace detail

/// Knuth-Bendix completion of the monoid presentation of P with formal
/// inverse symbols, FIFO critical-pair queue, shortlex ordering. Resource
/// exhaustion is an ordinary value.
inline CompletionResult knuth_bendix(const GroupPresentation& p, const KbLimits& limits = {}) {
  RewriteSystem rs;
  rs.generator_count = p.generator_count;

  std::deque<std::pair<SymWord, SymWord>> queue;
  // free-reduction rules x x^-1 -> e, x^-1 x -> e
  for (int g = 0; g < p.generator_count; ++g) {
    queue.emplace_back(SymWord{2 * g, 2 * g + 1}, SymWord{});
    queue.emplace_back(SymWord{2 * g + 1, 2 * g}, SymWord{});
  }
  for (const auto& r : p.relators) queue.emplace_back(sym_word(r), SymWord{});

  while (!queue.empty()) {
    auto [u, v] = std::move(queue.front());
    queue.pop_front();
    ++rs.stats.equations_processed;
    SymWord nu = rs.reduce(std::move(u));
    SymWord nv = rs.reduce(std::move(v));
    if (nu == nv) continue;
    if (shortlex_less(nu, nv)) std::swap(nu, nv);
    if (nu.size() > limits.max_len)
      return Exhausted{"rule left side exceeds max_len " + std::to_string(limits.max_len),
                       rs.stats};
    if (rs.stats.rules_created >= limits.max_rules)
      return Exhausted{"rule count exceeds max_rules " + std::to_string(limits.max_rules),
                       rs.stats};

    std::size_t idx = rs.rules.size();
    rs.rules.push_back({std::move(nu), std::move(nv), true});
    ++rs.stats.rules_created;

    // interreduction against the new rule
    const SymWord& lhs = rs.rules[idx].lhs;
    for (std::size_t k = 0; k < idx; ++k) {
      auto& rule = rs.rules[k];
      if (!rule.active) continue;
      bool lhs_hit = rule.lhs.size() >= lhs.size() &&
                     std::search(rule.lhs.begin(), rule.lhs.end(), lhs.begin(), lhs.end()) !=
                         rule.lhs.end();
      if (lhs_hit) {
        rule.active = false;
        queue.emplace_back(rule.lhs, rule.rhs);
        continue;
      }
      rule.rhs = rs.reduce(std::move(rule.rhs));
    }

    for (std::size_t k = 0; k <= idx; ++k) {
      if (!rs.rules[k].active) continue;
      detail::push_overlaps(rs, idx, k, queue);
      if (k != idx) detail::push_overlaps(rs, k, idx, queue);
    }
  }

  std::vector<RewriteRule> active;
  for (auto& r : rs.rules)
    if (r.active) active.push_back(std::move(r));
  rs.rules = std::move(active);
  rs.complete = true;
  return rs;
}

/// Re-derives every overlap of the completed system and checks both
/// reductions agree. Used to back the "complete" flag in tests.
inline bool verify_local_confluence(const RewriteSystem& rs) {
  std::deque<std::pair<SymWord, SymWord>> pairs;
  for (std::size_t i = 0; i < rs.rules.size(); ++i)
    for (std::size_t j = 0; j < rs.rules.size(); ++j) detail::push_overlaps(rs, i, j, pairs);
  for (const auto& [u, v] : pairs)
    if (rs.reduce(u) != rs.reduce(v)) return false;
  return true;
}

struct FreeAbelianCertificate {
  int rank = 0;
  RewriteSystem system;
};

struct NotFreeAbelian {
  std::string reason;
};

struct Inconclusive {
  std::string reason;
};

using CertifyResult = std::variant<FreeAbelianCertificate, NotFreeAbelian, Inconclusive>;

/// Certifies P isomorphic to Z^rank: the abelianization must be free of the
/// stated rank and a completed rewriting system must kill every commutator
/// [x_i, x_j]. Those two facts together pin the group: all generators
/// commute, so the group equals its abelianization.
inline CertifyResult certify_free_abelian(const GroupPresentation& p, int rank,
                                          const KbLimits& limits = {}) {
  AbelianInvariants inv = abelianization(p);
  if (inv.rank != rank || !inv.torsion.empty())
    return NotFreeAbelian{"abelianization is " + inv.to_string() + ", not free of rank " +
                          std::to_string(rank)};
  CompletionResult comp = knuth_bendix(p, limits);
  if (std::holds_alternative<Exhausted>(comp))
    return Inconclusive{"completion exhausted: " + std::get<Exhausted>(comp).reason};
  RewriteSystem rs = std::move(std::get<RewriteSystem>(comp));
  for (int i = 1; i <= p.generator_count; ++i)
    for (int j = i + 1; j <= p.generator_count; ++j)
      if (!rs.reduces_to_identity(commutator(i, j)))
        return NotFreeAbelian{"commutator [x_" + std::to_string(i) + ", x_" + std::to_string(j) +
                              "] does not reduce to the empty word"};
  return FreeAbelianCertificate{rank, std::move(rs)};
}

}  // namespace surfinv
