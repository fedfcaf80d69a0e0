#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <thread>
#include <vector>

#include "surfinv/cocycle.hpp"
#include "surfinv/coloring.hpp"
#include "surfinv/laurent.hpp"
#include "surfinv/movie.hpp"
#include "surfinv/movie_build.hpp"

namespace surfinv {

/// Triple point datum of one R3 event under a fixed coloring: the color
/// triple read at the positive presentation of the white vertex and the
/// vertex sign.
struct WhiteVertexRecord {
  std::array<int, 3> colors{};
  int sign = 1;
  std::size_t source_event = 0;
  std::size_t pos = 0;

  friend bool operator==(const WhiteVertexRecord&, const WhiteVertexRecord&) = default;
};

namespace detail {

/// Color action of one letter inside the 3-strand window of an R3 event.
/// `low` selects which local pair the letter acts on: 0 for the smaller
/// label, 1 for the larger.
inline void local_step(std::array<int, 3>& v, int low, int sign, const Quandle& q) {
  if (sign > 0) {
    int over = v[low], under = v[low + 1];
    v[low] = q.op(under, over);
    v[low + 1] = over;
  } else {
    int d1 = v[low], d2 = v[low + 1];
    v[low] = d2;
    v[low + 1] = q.rdiv(d1, d2);
  }
}

/// Sign and color triple of the white vertex behind an R3 event.
///
/// The vertex sign counts larger-label edges oriented toward the vertex
/// (one: positive, two: negative). For the positive pattern this reduces
/// to reading the colors entering the block; the five other sign patterns
/// are normalized by conjugating with the inverse-pair insertions that
/// expose a positive inner R3, which prepends the corresponding local
/// color steps.
inline WhiteVertexRecord r3_record(const R3Event& e, std::array<int, 3> v, const Quandle& q) {
  const int I = e.i, J = e.j;
  const int locI = I < J ? 0 : 1;
  const int locJ = 1 - locI;
  WhiteVertexRecord rec;
  rec.pos = e.pos;
  const int s1 = e.s1, s2 = e.s2, s3 = e.s3;
  if (s1 > 0 && s2 > 0 && s3 > 0) {
    rec.sign = I > J ? 1 : -1;
  } else if (s1 < 0 && s2 < 0 && s3 < 0) {
    // read at the block top, where the reversed sweep sees the positive
    // pattern sigma_J sigma_I sigma_J
    local_step(v, locI, s1, q);
    local_step(v, locJ, s2, q);
    local_step(v, locI, s3, q);
    rec.sign = J > I ? 1 : -1;
  } else if (s1 > 0 && s2 > 0 && s3 < 0) {
    local_step(v, locJ, -1, q);
    rec.sign = J > I ? 1 : -1;
  } else if (s1 < 0 && s2 > 0 && s3 > 0) {
    local_step(v, locI, -1, q);
    rec.sign = J > I ? 1 : -1;
  } else if (s1 < 0 && s2 < 0 && s3 > 0) {
    local_step(v, locI, -1, q);
    local_step(v, locJ, -1, q);
    rec.sign = I > J ? 1 : -1;
  } else if (s1 > 0 && s2 < 0 && s3 < 0) {
    local_step(v, locJ, -1, q);
    local_step(v, locI, -1, q);
    rec.sign = I > J ? 1 : -1;
  } else {
    throw std::logic_error("R3 sign pattern is not a braid relation");
  }
  rec.colors = v;
  return rec;
}

}  // namespace detail

/// Replays the movie under an admissible coloring and reads off the color
/// triple and sign of every R3 event, in movie order.
inline std::vector<WhiteVertexRecord> white_vertices(const TorusChartMovie& m,
                                                     const ColorVector& start, const Quandle& q) {
  if (!coloring_admissible(m.a, m.b, start, q))
    throw std::invalid_argument("coloring is not admissible for the boundary braids");
  std::vector<WhiteVertexRecord> records;
  std::vector<BraidLetter> w = m.start_word().letters;
  for (std::size_t k = 0; k < m.events.size(); ++k) {
    if (const auto* e = std::get_if<R3Event>(&m.events[k])) {
      ColorVector c = start;
      for (std::size_t p = 0; p < e->pos; ++p) color_step(c, w[p].index, w[p].sign, q);
      const int base = std::min(e->i, e->j) - 1;
      std::array<int, 3> v{c[base], c[base + 1], c[base + 2]};
      WhiteVertexRecord rec = detail::r3_record(*e, v, q);
      rec.source_event = k;
      records.push_back(rec);
    }
    if (auto err = apply_event(w, m.events[k]))
      throw std::logic_error("invalid movie event " + std::to_string(k) + ": " + *err);
  }
  return records;
}

/// Boltzmann weight of one coloring: the monomial
/// t^(sum over white vertices of sign * exponent(color triple)).
inline LaurentPoly boltzmann_weight(const TorusChartMovie& m, const ColorVector& c,
                                    const Cocycle3& theta) {
  if (theta.quandle.size == 0) throw std::invalid_argument("cocycle has an empty quandle");
  std::int64_t e = 0;
  for (const auto& rec : white_vertices(m, c, theta.quandle))
    e += rec.sign * theta.exponent(rec.colors[0], rec.colors[1], rec.colors[2]);
  return LaurentPoly::monomial(e);
}

/// Quandle cocycle invariant: the sum of Boltzmann weights over all
/// admissible colorings. Colorings are independent; `threads` > 1 splits
/// them into chunks whose partial sums are combined in chunk order, so the
/// result does not depend on the parallelism degree.
inline LaurentPoly cocycle_invariant(const TorusChartMovie& m, const Quandle& q,
                                     const Cocycle3& theta, unsigned threads = 1) {
  if (!(q == theta.quandle)) throw std::invalid_argument("cocycle is over a different quandle");
  if (auto defect = validate_movie(m))
    throw std::invalid_argument("invalid movie at event " + std::to_string(defect->event_index) +
                                ": " + defect->message);
  std::vector<ColorVector> colorings = enumerate_colorings(m.a, m.b, q);
  if (threads <= 1 || colorings.size() < 2) {
    LaurentPoly phi;
    for (const auto& c : colorings) phi += boltzmann_weight(m, c, theta);
    return phi;
  }
  unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(colorings.size()));
  std::vector<LaurentPoly> partial(n);
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned k = 0; k < n; ++k) {
    pool.emplace_back([&, k] {
      for (std::size_t i = k; i < colorings.size(); i += n)
        partial[k] += boltzmann_weight(m, colorings[i], theta);
    });
  }
  for (auto& th : pool) th.join();
  LaurentPoly phi;
  for (const auto& p : partial) phi += p;
  return phi;
}

}  // namespace surfinv
