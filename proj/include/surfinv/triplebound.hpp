#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "surfinv/cocycle.hpp"
#include "surfinv/laurent.hpp"

namespace surfinv {

// Exhaustive certificate that no surface diagram with a small number of
// triple points can carry the invariant pair of the 4-vertex chart.
// Colorings are generic over the trivial three-element quandle on formal
// symbols a, b, c (encoded 0, 1, 2); each hypothetical triple point has a
// formal color triple, a BW-orientation sign epsilon and a diagram sign
// used in Boltzmann weights. The two signs are enumerated independently,
// which over-approximates the case space and keeps the bound sound.

enum class TripleType { I, II, III, IV, V };

inline TripleType classify_type(const std::array<int, 3>& t) {
  const auto [x, y, z] = t;
  if (x != y && y != z && x != z) return TripleType::I;
  if (x == z && x != y) return TripleType::II;
  if (x == y && y != z) return TripleType::III;
  if (y == z && x != y) return TripleType::IV;
  return TripleType::V;
}

inline const char* type_name(TripleType t) {
  switch (t) {
    case TripleType::I: return "(i)";
    case TripleType::II: return "(ii)";
    case TripleType::III: return "(iii)";
    case TripleType::IV: return "(iv)";
    case TripleType::V: return "(v)";
  }
  return "?";
}

struct TriplePointProfile {
  std::array<int, 3> color_triple{};  // symbols 0=a, 1=b, 2=c
  int epsilon = 1;                    // BW orientation sign
  int weight_sign = 1;                // triple point sign in Boltzmann weights

  friend bool operator==(const TriplePointProfile&, const TriplePointProfile&) = default;
  friend auto operator<=>(const TriplePointProfile&, const TriplePointProfile&) = default;
};

/// One signed ordered color pair of the edge set E(C; tau).
struct SignedPair {
  int sign;
  int x, y;
};

/// E(C; tau) = { eps(a,b), -eps(a,c), eps(b,c) } for color (a,b,c).
inline std::array<SignedPair, 3> edge_label_set(const TriplePointProfile& p) {
  const auto [a, b, c] = p.color_triple;
  return {SignedPair{p.epsilon, a, b}, SignedPair{-p.epsilon, a, c}, SignedPair{p.epsilon, b, c}};
}

/// f maps degenerate pairs to 0 and nondegenerate ones to their sign;
/// E(tau) is the f-sum over the edge label set.
inline int E_of(const TriplePointProfile& p) {
  int e = 0;
  for (const auto& sp : edge_label_set(p))
    if (sp.x != sp.y) e += sp.sign;
  return e;
}

/// Case-table value of E(tau): eps for type (i), 2 eps for type (ii),
/// 0 otherwise. The f-map route above must agree; tests check them against
/// each other exhaustively.
inline int E_of_table(const TriplePointProfile& p) {
  switch (classify_type(p.color_triple)) {
    case TripleType::I: return p.epsilon;
    case TripleType::II: return 2 * p.epsilon;
    default: return 0;
  }
}

struct DiagramHypothesis {
  std::vector<TriplePointProfile> profiles;  // kept sorted as a canonical multiset
};

/// Nondegenerate signed pairs must cancel in +/- pairs of the same ordered
/// color pair, and the E-sum must vanish.
inline bool pairing_consistent(const DiagramHypothesis& h) {
  // counts[sign][x][y]
  int counts[2][3][3] = {};
  int e_sum = 0;
  for (const auto& p : h.profiles) {
    for (const auto& sp : edge_label_set(p)) {
      if (sp.x == sp.y) continue;
      ++counts[sp.sign > 0 ? 0 : 1][sp.x][sp.y];
    }
    e_sum += E_of(p);
  }
  if (e_sum != 0) return false;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (counts[0][x][y] != counts[1][x][y]) return false;
  return true;
}

enum class Verdict { W1, W2, W3, Fail };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::W1: return "W1";
    case Verdict::W2: return "W2";
    case Verdict::W3: return "W3";
    case Verdict::Fail: return "FAIL";
  }
  return "?";
}

struct WeightSweep {
  // exponent of W_theta resp. W_theta' per substitution (a,b,c) in
  // {0,1,2}^3, indexed by 9a + 3b + c
  std::array<std::int64_t, 27> theta_exponents{};
  std::array<std::int64_t, 27> theta_prime_exponents{};
  bool w1 = false, w2 = false, w3 = false;
};

/// Runs all 27 substitutions of concrete colors for the formal symbols and
/// classifies the hypothesis:
///   W1: every W_theta is 1,
///   W2: some W_theta is none of 1, t^-2, t^4,
///   W3: the W_theta' sum over the substitution family equals 27.
inline WeightSweep weight_sweep(const DiagramHypothesis& h, const Cocycle3& theta,
                                const Cocycle3& theta_prime) {
  WeightSweep sw;
  sw.w1 = true;
  sw.w3 = true;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const int subst[3] = {a, b, c};
        std::int64_t e = 0, ep = 0;
        for (const auto& p : h.profiles) {
          int x = subst[p.color_triple[0]];
          int y = subst[p.color_triple[1]];
          int z = subst[p.color_triple[2]];
          e += p.weight_sign * theta.exponent(x, y, z);
          ep += p.weight_sign * theta_prime.exponent(x, y, z);
        }
        int k = 9 * a + 3 * b + c;
        sw.theta_exponents[k] = e;
        sw.theta_prime_exponents[k] = ep;
        if (e != 0) sw.w1 = false;
        if (e != 0 && e != -2 && e != 4) sw.w2 = true;
        if (ep != 0) sw.w3 = false;  // sum of 27 monomials equals 27 iff all exponents vanish
      }
  return sw;
}

inline Verdict verdict_of(const WeightSweep& sw) {
  if (sw.w1) return Verdict::W1;
  if (sw.w2) return Verdict::W2;
  if (sw.w3) return Verdict::W3;
  return Verdict::Fail;
}

struct CaseRow {
  DiagramHypothesis hypothesis;
  Verdict verdict;
};

struct CaseReport {
  std::size_t max_triples = 0;
  std::size_t hypotheses_enumerated = 0;
  std::size_t consistent_cases = 0;
  std::size_t w1 = 0, w2 = 0, w3 = 0, failed = 0;
  bool certified = false;  // every consistent case satisfies W1, W2 or W3
  std::vector<CaseRow> rows;  // consistent cases in canonical order
};

namespace detail {

inline std::vector<TriplePointProfile> all_profiles() {
  std::vector<TriplePointProfile> out;
  out.reserve(108);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        for (int eps : {1, -1})
          for (int ws : {1, -1})
            out.push_back({{x, y, z}, eps, ws});
  return out;
}

}  // namespace detail

/// Enumerates every multiset of at most max_triples profiles, filters by
/// pairing consistency and sweeps the survivors. The certificate holds iff
/// no survivor fails all three of W1, W2, W3.
inline CaseReport certify_lower_bound(std::size_t max_triples, const Cocycle3& theta,
                                      const Cocycle3& theta_prime) {
  CaseReport report;
  report.max_triples = max_triples;
  report.certified = true;

  const auto profiles = detail::all_profiles();
  DiagramHypothesis h;

  auto consider = [&](const DiagramHypothesis& hyp) {
    ++report.hypotheses_enumerated;
    if (!pairing_consistent(hyp)) return;
    ++report.consistent_cases;
    Verdict v = verdict_of(weight_sweep(hyp, theta, theta_prime));
    switch (v) {
      case Verdict::W1: ++report.w1; break;
      case Verdict::W2: ++report.w2; break;
      case Verdict::W3: ++report.w3; break;
      case Verdict::Fail:
        ++report.failed;
        report.certified = false;
        break;
    }
    report.rows.push_back({hyp, v});
  };

  // multisets in nondecreasing profile order, sizes 0..max_triples
  auto recurse = [&](auto&& self, std::size_t remaining, std::size_t first) -> void {
    consider(h);
    if (remaining == 0) return;
    for (std::size_t k = first; k < profiles.size(); ++k) {
      h.profiles.push_back(profiles[k]);
      self(self, remaining - 1, k);
      h.profiles.pop_back();
    }
  };
  recurse(recurse, max_triples, 0);
  return report;
}

inline CaseReport certify_lower_bound(std::size_t max_triples) {
  return certify_lower_bound(max_triples, theta_z(3), theta_x(3));
}

}  // namespace surfinv
