#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "surfinv/braid.hpp"

namespace surfinv {

// A torus-covering chart without black vertices is modeled as a rewriting
// path between braid words: white vertices are R3 events, degree-4
// crossings are distant commutations, edge extrema are inverse-pair
// insertions and cancellations. All event positions are 0-based and refer
// to the word before the event.

/// Braid-relation move at pos: sigma_i^{s1} sigma_j^{s2} sigma_i^{s3}
/// -> sigma_j^{s3} sigma_i^{s2} sigma_j^{s1}, |i-j| = 1. The sign pattern
/// (s1,s2,s3) must not have the outer signs both opposite to the middle.
struct R3Event {
  std::size_t pos = 0;
  int i = 0;            // label of letters 1 and 3 before the event
  int j = 0;            // label of letter 2 before the event
  int s1 = 1, s2 = 1, s3 = 1;

  friend bool operator==(const R3Event&, const R3Event&) = default;
};

/// Swap of adjacent letters whose indices differ by at least 2.
struct R2DistantEvent {
  std::size_t pos = 0;

  friend bool operator==(const R2DistantEvent&, const R2DistantEvent&) = default;
};

/// Deletion of an adjacent inverse pair at (pos, pos+1).
struct R2CancelEvent {
  std::size_t pos = 0;

  friend bool operator==(const R2CancelEvent&, const R2CancelEvent&) = default;
};

/// Insertion of the inverse pair sigma_index^{sign} sigma_index^{-sign}
/// at pos.
struct R2InsertEvent {
  std::size_t pos = 0;
  int index = 1;
  int sign = 1;

  friend bool operator==(const R2InsertEvent&, const R2InsertEvent&) = default;
};

using MovieEvent = std::variant<R3Event, R2DistantEvent, R2CancelEvent, R2InsertEvent>;

inline bool r3_signs_valid(int s1, int s2, int s3) {
  return !(s1 == s3 && s1 == -s2);
}

/// Applies one event to a word in place. Returns an error message instead
/// of modifying the word when the event's precondition fails.
inline std::optional<std::string> apply_event(std::vector<BraidLetter>& w, const MovieEvent& ev) {
  if (const auto* e = std::get_if<R3Event>(&ev)) {
    if (e->pos + 3 > w.size()) return "R3 position out of range";
    const BraidLetter &a = w[e->pos], &b = w[e->pos + 1], &c = w[e->pos + 2];
    if (a.index != e->i || b.index != e->j || c.index != e->i)
      return "R3 labels do not match the word";
    if (a.sign != e->s1 || b.sign != e->s2 || c.sign != e->s3)
      return "R3 signs do not match the word";
    if (e->i == e->j || (e->i > e->j ? e->i - e->j : e->j - e->i) != 1)
      return "R3 labels must be adjacent";
    if (!r3_signs_valid(e->s1, e->s2, e->s3)) return "R3 sign pattern is not a braid relation";
    w[e->pos] = {e->j, e->s3};
    w[e->pos + 1] = {e->i, e->s2};
    w[e->pos + 2] = {e->j, e->s1};
    return std::nullopt;
  }
  if (const auto* e = std::get_if<R2DistantEvent>(&ev)) {
    if (e->pos + 2 > w.size()) return "distant commutation position out of range";
    int gap = w[e->pos].index - w[e->pos + 1].index;
    if (gap < 0) gap = -gap;
    if (gap < 2) return "distant commutation requires index gap >= 2";
    std::swap(w[e->pos], w[e->pos + 1]);
    return std::nullopt;
  }
  if (const auto* e = std::get_if<R2CancelEvent>(&ev)) {
    if (e->pos + 2 > w.size()) return "cancellation position out of range";
    if (w[e->pos].index != w[e->pos + 1].index || w[e->pos].sign != -w[e->pos + 1].sign)
      return "letters at cancellation position are not an inverse pair";
    w.erase(w.begin() + e->pos, w.begin() + e->pos + 2);
    return std::nullopt;
  }
  const auto& e = std::get<R2InsertEvent>(ev);
  if (e.pos > w.size()) return "insertion position out of range";
  w.insert(w.begin() + e.pos, {BraidLetter{e.index, e.sign}, BraidLetter{e.index, -e.sign}});
  return std::nullopt;
}

/// Rewriting path realizing a torus-covering chart with boundary braids
/// a and b: replaying events from b.a must end at a.b.
struct TorusChartMovie {
  int degree = 1;
  BraidWord a;
  BraidWord b;
  std::vector<MovieEvent> events;

  BraidWord start_word() const { return b * a; }
  BraidWord end_word() const { return a * b; }

  std::size_t r3_count() const {
    std::size_t n = 0;
    for (const auto& ev : events)
      if (std::holds_alternative<R3Event>(ev)) ++n;
    return n;
  }

  friend bool operator==(const TorusChartMovie&, const TorusChartMovie&) = default;
};

struct MovieDefect {
  std::size_t event_index = 0;  // events.size() means bad final word
  std::string message;
};

/// Replays all events from b.a and checks the path ends at a.b.
inline std::optional<MovieDefect> validate_movie(const TorusChartMovie& m) {
  if (m.a.degree != m.degree || m.b.degree != m.degree)
    return MovieDefect{0, "boundary braid degree mismatch"};
  std::vector<BraidLetter> w = m.start_word().letters;
  for (std::size_t k = 0; k < m.events.size(); ++k) {
    for (const BraidLetter& l : w)
      if (l.index < 1 || l.index >= m.degree) return MovieDefect{k, "letter index out of range"};
    if (auto err = apply_event(w, m.events[k])) return MovieDefect{k, *err};
  }
  if (w != m.end_word().letters)
    return MovieDefect{m.events.size(), "final word is not a.b"};
  return std::nullopt;
}

}  // namespace surfinv
