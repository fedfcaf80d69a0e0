#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "surfinv/artin.hpp"
#include "surfinv/movie.hpp"

namespace surfinv {

struct SearchLimits {
  std::size_t max_states_per_tile = 200000;
  std::size_t max_events_per_tile = 24;
  std::size_t max_r3_per_tile = 8;
  std::size_t word_cap = 0;   // 0 means the default 3*(|a| + 2|b|)
  std::size_t tile_extra = 4; // letters a tile word may grow beyond its start
  std::size_t equality_cap = kDefaultEqualityCap;
  bool tie_break_reverse = false;  // alternate deterministic tie-break
};

struct SearchExhausted {
  std::string reason;
  std::size_t tile = 0;
  std::size_t states_explored = 0;
};

using BuildResult = std::variant<TorusChartMovie, SearchExhausted>;

namespace detail {

inline std::string word_key(const std::vector<BraidLetter>& w) {
  std::string k;
  k.reserve(w.size());
  for (const auto& l : w) k.push_back(static_cast<char>(l.sign * l.index));
  return k;
}

/// Moves applicable to a word, in the lexicographic event-encoding order
/// (type rank, position, parameters). This order is the deterministic
/// tie-break of the search.
inline std::vector<MovieEvent> enumerate_moves(const std::vector<BraidLetter>& w, int degree,
                                               std::size_t word_cap) {
  std::vector<MovieEvent> out;
  const std::size_t n = w.size();
  for (std::size_t p = 0; p + 3 <= n; ++p) {
    const BraidLetter &a = w[p], &b = w[p + 1], &c = w[p + 2];
    if (a.index != c.index) continue;
    int gap = a.index > b.index ? a.index - b.index : b.index - a.index;
    if (gap != 1) continue;
    if (!r3_signs_valid(a.sign, b.sign, c.sign)) continue;
    out.push_back(R3Event{p, a.index, b.index, a.sign, b.sign, c.sign});
  }
  for (std::size_t p = 0; p + 2 <= n; ++p) {
    int gap = w[p].index > w[p + 1].index ? w[p].index - w[p + 1].index
                                          : w[p + 1].index - w[p].index;
    if (gap >= 2) out.push_back(R2DistantEvent{p});
  }
  for (std::size_t p = 0; p + 2 <= n; ++p)
    if (w[p].index == w[p + 1].index && w[p].sign == -w[p + 1].sign)
      out.push_back(R2CancelEvent{p});
  if (n + 2 <= word_cap) {
    for (std::size_t p = 0; p <= n; ++p)
      for (int idx = 1; idx < degree; ++idx)
        for (int sign : {1, -1}) out.push_back(R2InsertEvent{p, idx, sign});
  }
  return out;
}

struct TileNode {
  std::vector<BraidLetter> word;
  std::size_t parent = 0;
  MovieEvent event;
  std::size_t depth = 0;
  std::size_t r3_used = 0;
};

/// Breadth-first search from `start` to exactly `goal`, minimizing the R3
/// count first, then the total event count, then the lexicographic event
/// encoding. Deterministic; returns events or nothing when limits bar the
/// way.
inline std::variant<std::vector<MovieEvent>, SearchExhausted> tile_search(
    const std::vector<BraidLetter>& start, const std::vector<BraidLetter>& goal, int degree,
    const SearchLimits& limits, std::size_t word_cap) {
  if (start == goal) return std::vector<MovieEvent>{};
  std::size_t states_total = 0;
  for (std::size_t r3_budget = 0; r3_budget <= limits.max_r3_per_tile; ++r3_budget) {
    std::vector<TileNode> nodes;
    nodes.push_back({start, 0, MovieEvent{}, 0, 0});
    // cheapest R3 usage seen per word; revisits allowed only when cheaper
    std::unordered_map<std::string, std::size_t> best_r3;
    best_r3[word_key(start)] = 0;
    std::size_t head = 0;
    while (head < nodes.size()) {
      const std::size_t cur = head++;
      if (nodes[cur].depth >= limits.max_events_per_tile) continue;
      auto moves = enumerate_moves(nodes[cur].word, degree, word_cap);
      if (limits.tie_break_reverse) std::reverse(moves.begin(), moves.end());
      for (const auto& mv : moves) {
        std::size_t r3_used = nodes[cur].r3_used + (std::holds_alternative<R3Event>(mv) ? 1 : 0);
        if (r3_used > r3_budget) continue;
        std::vector<BraidLetter> next = nodes[cur].word;
        if (apply_event(next, mv)) continue;  // precondition failed
        if (next.size() > word_cap) continue;
        std::string key = word_key(next);
        auto it = best_r3.find(key);
        if (it != best_r3.end() && it->second <= r3_used) continue;
        best_r3[key] = r3_used;
        if (++states_total > limits.max_states_per_tile)
          return SearchExhausted{"state limit " + std::to_string(limits.max_states_per_tile) +
                                     " reached",
                                 0, states_total};
        nodes.push_back({std::move(next), cur, mv, nodes[cur].depth + 1, r3_used});
        if (nodes.back().word == goal) {
          std::vector<MovieEvent> path;
          for (std::size_t n = nodes.size() - 1; n != 0; n = nodes[n].parent)
            path.push_back(nodes[n].event);
          std::reverse(path.begin(), path.end());
          return path;
        }
      }
    }
  }
  return SearchExhausted{"no path within r3 budget " + std::to_string(limits.max_r3_per_tile) +
                             " and depth " + std::to_string(limits.max_events_per_tile),
                         0, states_total};
}

/// Half-twist power detection: how many back-to-back copies of the
/// garside_delta letter sequence make up b. Returns 0 when b is not a
/// literal power of the half twist.
inline std::size_t delta_power_of(const BraidWord& b) {
  if (b.degree < 2 || b.letters.empty()) return 0;
  const BraidWord delta = garside_delta(b.degree);
  if (b.size() % delta.size() != 0) return 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!(b.letters[i] == delta.letters[i % delta.size()])) return 0;
  return b.size() / delta.size();
}

}  // namespace detail

/// Builds the canonical movie from b.a to a.b by sliding each letter of a
/// leftward through the b block, one tile per letter. Each tile must
/// restore the block to exactly b, which holds whenever every letter of a
/// commutes with b (in particular for central b such as Delta^2); other
/// commuting pairs exhaust honestly. When b is a literal power of the half
/// twist, the slide is staged through one twist at a time: Delta conjugates
/// sigma_i to sigma_{m-i}, so each stage is a small search and the letter
/// closes up after an even number of stages.
inline BuildResult build_movie(const BraidWord& a, const BraidWord& b,
                               const SearchLimits& limits = {}) {
  if (a.degree != b.degree) throw std::invalid_argument("braid degree mismatch");
  if (!commute(a, b, limits.equality_cap))
    throw std::invalid_argument("boundary braids do not commute");

  const int m = a.degree;
  const std::size_t word_cap =
      limits.word_cap ? limits.word_cap : 3 * (a.size() + 2 * b.size());

  TorusChartMovie movie;
  movie.degree = m;
  movie.a = a;
  movie.b = b;

  const std::size_t delta_power = detail::delta_power_of(b);
  const std::size_t delta_len = delta_power ? b.size() / delta_power : 0;
  const auto mirror = [m](BraidLetter l) { return BraidLetter{m - l.index, l.sign}; };

  for (std::size_t t = 0; t < a.size(); ++t) {
    const BraidLetter s = a.letters[t];

    // staged slide through each half twist, rightmost first
    bool closes_up = delta_power > 0 && (delta_power % 2 == 0 || m - s.index == s.index);
    if (closes_up) {
      bool staged_ok = true;
      std::vector<MovieEvent> staged;
      BraidLetter cur = s;
      for (std::size_t f = delta_power; f-- > 0 && staged_ok;) {
        std::vector<BraidLetter> start(b.letters.begin() + f * delta_len,
                                       b.letters.begin() + (f + 1) * delta_len);
        std::vector<BraidLetter> goal;
        goal.push_back(mirror(cur));
        goal.insert(goal.end(), start.begin(), start.end());
        start.push_back(cur);
        std::size_t cap = std::min(word_cap, start.size() + limits.tile_extra);
        auto found = detail::tile_search(start, goal, m, limits, cap);
        if (std::holds_alternative<SearchExhausted>(found)) {
          staged_ok = false;
          break;
        }
        for (MovieEvent ev : std::get<std::vector<MovieEvent>>(found)) {
          std::visit([&](auto& e) { e.pos += t + f * delta_len; }, ev);
          staged.push_back(ev);
        }
        cur = mirror(cur);
      }
      if (staged_ok) {
        movie.events.insert(movie.events.end(), staged.begin(), staged.end());
        continue;
      }
    }

    std::vector<BraidLetter> start = b.letters;
    start.push_back(s);
    std::vector<BraidLetter> goal;
    goal.push_back(s);
    goal.insert(goal.end(), b.letters.begin(), b.letters.end());

    // insertions may grow the tile word a little, never past the global cap
    std::size_t tile_cap = std::min(word_cap, start.size() + limits.tile_extra);
    auto found = detail::tile_search(start, goal, a.degree, limits, tile_cap);
    if (auto* ex = std::get_if<SearchExhausted>(&found)) {
      ex->tile = t;
      return *ex;
    }
    // tile events act on the subword starting at offset t
    for (MovieEvent ev : std::get<std::vector<MovieEvent>>(found)) {
      std::visit([&](auto& e) { e.pos += t; }, ev);
      movie.events.push_back(ev);
    }
  }
  return movie;
}

}  // namespace surfinv
