#pragma once

#include <json.hpp>

#include "surfinv/cocycle.hpp"
#include "surfinv/invariant.hpp"
#include "surfinv/movie.hpp"
#include "surfinv/presentation.hpp"
#include "surfinv/quandle.hpp"
#include "surfinv/smith.hpp"
#include "surfinv/triplebound.hpp"

namespace surfinv {

using nlohmann::json;

// presentation: {"generatorCount": m, "relators": [[j, ...], ...]},
// j > 0 is x_j, j < 0 is x_j^{-1}

inline json to_json(const GroupPresentation& p) {
  json rel = json::array();
  for (const auto& r : p.relators) rel.push_back(r.letters);
  return json{{"generatorCount", p.generator_count}, {"relators", rel}};
}

inline GroupPresentation presentation_from_json(const json& j) {
  GroupPresentation p;
  p.generator_count = j.at("generatorCount").get<int>();
  for (const auto& r : j.at("relators")) {
    FreeWord w(r.get<std::vector<int>>());
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

inline json to_json(const AbelianInvariants& a) {
  return json{{"rank", a.rank}, {"torsion", a.torsion}};
}

// quandle: {"size": N, "table": [[...], ...]}

inline json to_json(const Quandle& q) { return json{{"size", q.size}, {"table", q.table}}; }

inline Quandle quandle_from_json(const json& j) {
  Quandle q;
  q.size = j.at("size").get<int>();
  q.table = j.at("table").get<std::vector<std::vector<int>>>();
  auto bad = validate_quandle(q);
  if (!bad.empty()) throw std::invalid_argument("quandle violates " + bad.front().to_string());
  return q;
}

// cocycle: {"quandle": {...}, "exponents": [[[...]]]} or {"builtin": "theta_z"|"theta_x"}

inline json to_json(const Cocycle3& c) {
  return json{{"quandle", to_json(c.quandle)}, {"exponents", c.exponents}};
}

inline Cocycle3 cocycle_from_json(const json& j) {
  if (j.contains("builtin")) {
    const std::string name = j.at("builtin").get<std::string>();
    if (name == "theta_z") return theta_z(3);
    if (name == "theta_x") return theta_x(3);
    throw std::invalid_argument("unknown builtin cocycle '" + name + "'");
  }
  Cocycle3 c;
  c.quandle = quandle_from_json(j.at("quandle"));
  c.exponents = j.at("exponents").get<std::vector<std::vector<std::vector<std::int64_t>>>>();
  if (static_cast<int>(c.exponents.size()) != c.quandle.size)
    throw std::invalid_argument("cocycle exponent table size mismatch");
  auto bad = validate_cocycle(c);
  if (!bad.empty()) throw std::invalid_argument("cocycle violates " + bad.front().to_string());
  return c;
}

inline json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, c}));
  return json{{"terms", terms}};
}

// movie: positions are 0-based and refer to the word before the event

inline std::vector<int> letters_json(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& l : w.letters) out.push_back(l.sign * l.index);
  return out;
}

inline BraidWord word_from_letters(const std::vector<int>& ls, int degree) {
  BraidWord w(degree);
  for (int k : ls) {
    if (k == 0) throw std::invalid_argument("zero braid letter");
    w.push(k > 0 ? k : -k, k > 0 ? 1 : -1);
  }
  return w;
}

inline json to_json(const MovieEvent& ev) {
  if (const auto* e = std::get_if<R3Event>(&ev))
    return json{{"type", "r3"},
                {"pos", e->pos},
                {"labels", json::array({e->i, e->j})},
                {"signs", json::array({e->s1, e->s2, e->s3})}};
  if (const auto* e = std::get_if<R2DistantEvent>(&ev)) return json{{"type", "r2distant"}, {"pos", e->pos}};
  if (const auto* e = std::get_if<R2CancelEvent>(&ev)) return json{{"type", "r2cancel"}, {"pos", e->pos}};
  const auto& e = std::get<R2InsertEvent>(ev);
  return json{{"type", "r2insert"}, {"pos", e.pos}, {"index", e.index}, {"sign", e.sign}};
}

inline MovieEvent event_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "r3") {
    R3Event e;
    e.pos = j.at("pos").get<std::size_t>();
    auto labels = j.at("labels").get<std::vector<int>>();
    auto signs = j.at("signs").get<std::vector<int>>();
    if (labels.size() != 2 || signs.size() != 3) throw std::invalid_argument("bad r3 event");
    e.i = labels[0];
    e.j = labels[1];
    e.s1 = signs[0];
    e.s2 = signs[1];
    e.s3 = signs[2];
    return e;
  }
  if (type == "r2distant") return R2DistantEvent{j.at("pos").get<std::size_t>()};
  if (type == "r2cancel") return R2CancelEvent{j.at("pos").get<std::size_t>()};
  if (type == "r2insert")
    return R2InsertEvent{j.at("pos").get<std::size_t>(), j.at("index").get<int>(),
                         j.at("sign").get<int>()};
  throw std::invalid_argument("unknown movie event type '" + type + "'");
}

inline json to_json(const TorusChartMovie& m) {
  json events = json::array();
  for (const auto& ev : m.events) events.push_back(to_json(ev));
  return json{{"degree", m.degree},
              {"a", letters_json(m.a)},
              {"b", letters_json(m.b)},
              {"events", events}};
}

inline TorusChartMovie movie_from_json(const json& j) {
  TorusChartMovie m;
  m.degree = j.at("degree").get<int>();
  m.a = word_from_letters(j.at("a").get<std::vector<int>>(), m.degree);
  m.b = word_from_letters(j.at("b").get<std::vector<int>>(), m.degree);
  for (const auto& ev : j.at("events")) m.events.push_back(event_from_json(ev));
  return m;
}

inline json to_json(const WhiteVertexRecord& r) {
  return json{{"sign", r.sign},
              {"colors", json::array({r.colors[0], r.colors[1], r.colors[2]})},
              {"event", r.source_event},
              {"pos", r.pos}};
}

// case report rows: columns (colorTriples, epsilon vector, sign vector, verdict)

inline json to_json(const CaseRow& row) {
  json triples = json::array(), eps = json::array(), signs = json::array();
  for (const auto& p : row.hypothesis.profiles) {
    triples.push_back(json::array({p.color_triple[0], p.color_triple[1], p.color_triple[2]}));
    eps.push_back(p.epsilon);
    signs.push_back(p.weight_sign);
  }
  return json{{"colorTriples", triples}, {"epsilons", eps}, {"signs", signs},
              {"verdict", verdict_name(row.verdict)}};
}

inline json to_json(const CaseReport& r, bool include_rows = true) {
  json j{{"maxTriples", r.max_triples},
         {"hypothesesEnumerated", r.hypotheses_enumerated},
         {"consistentCases", r.consistent_cases},
         {"verdicts", json{{"W1", r.w1}, {"W2", r.w2}, {"W3", r.w3}, {"FAIL", r.failed}}},
         {"certified", r.certified}};
  if (include_rows) {
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back(to_json(row));
    j["cases"] = rows;
  }
  return j;
}

}  // namespace surfinv
