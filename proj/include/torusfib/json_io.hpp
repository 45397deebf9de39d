#pragma once

// JSON (de)serialization for the public types.
//
// Wire formats:
//   HomologyClass           [p, q]
//   MCGElement              {"mat": [[a,b],[c,d]], "ab": n}
//   Factorization           {"factors": [{"cycle": [p,q], "power": n}, ...],
//                            "boundary": [p,q]}
//   Certificate             {"digest": hex, "word": [...], "conjugator": {...},
//                            "row": k}
//   MarkovTriple            [x, y, z]
// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.

#include <string>

#include <json.hpp>

#include "torusfib/auroux.hpp"
#include "torusfib/classifier.hpp"

namespace torusfib {

using nlohmann::json;

inline json int_to_json(const Int& v) {
  if (fits_int64(v)) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

inline void to_json(json& j, const HomologyClass& c) {
  j = json::array({int_to_json(c.p), int_to_json(c.q)});
}

inline void from_json(const json& j, HomologyClass& c) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("homology class must be a [p, q] pair");
  c.p = int_from_json(j[0]);
  c.q = int_from_json(j[1]);
}

inline void to_json(json& j, const Mat2& m) {
  j = json::array({json::array({int_to_json(m.a), int_to_json(m.b)}),
                   json::array({int_to_json(m.c), int_to_json(m.d)})});
}

inline void from_json(const json& j, Mat2& m) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw std::invalid_argument("matrix must be [[a,b],[c,d]]");
  m.a = int_from_json(j[0][0]);
  m.b = int_from_json(j[0][1]);
  m.c = int_from_json(j[1][0]);
  m.d = int_from_json(j[1][1]);
}

inline void to_json(json& j, const MCGElement& e) {
  j = json{{"mat", e.mat}, {"ab", int_to_json(e.ab)}};
}

inline void from_json(const json& j, MCGElement& e) {
  e.mat = j.at("mat").get<Mat2>();
  e.ab = int_from_json(j.at("ab"));
}

inline void to_json(json& j, const TwistFactor& f) {
  j = json{{"cycle", f.cycle}, {"power", int_to_json(f.power)}};
}

inline void from_json(const json& j, TwistFactor& f) {
  f.cycle = j.at("cycle").get<HomologyClass>();
  f.power = int_from_json(j.at("power"));
}

inline void to_json(json& j, const Factorization& f) {
  j = json{{"factors", f.factors}, {"boundary", f.boundary}};
}

inline void from_json(const json& j, Factorization& f) {
  f.factors = j.at("factors").get<std::vector<TwistFactor>>();
  f.boundary = j.at("boundary").get<HomologyClass>();
}

inline void to_json(json& j, const Certificate& c) {
  j = json{{"digest", c.digest},
           {"word", c.word},
           {"conjugator", c.conjugator},
           {"row", c.row_id}};
}

inline void from_json(const json& j, Certificate& c) {
  c.digest = j.at("digest").get<std::string>();
  c.word = j.at("word").get<std::vector<int>>();
  c.conjugator = j.at("conjugator").get<MCGElement>();
  c.row_id = j.at("row").get<int>();
}

inline void to_json(json& j, const CanonicalRow& r) {
  j = json{{"row", r.row_id},
           {"powers", json::array({int_to_json(r.powers[0]),
                                   int_to_json(r.powers[1]),
                                   int_to_json(r.powers[2])})},
           {"cycles", json::array({json(r.cycles[0]), json(r.cycles[1]),
                                   json(r.cycles[2])})},
           {"boundary", r.boundary}};
}

namespace markov {

inline void to_json(json& j, const MarkovTriple& t) {
  j = json::array({int_to_json(t.x), int_to_json(t.y), int_to_json(t.z)});
}

inline void from_json(const json& j, MarkovTriple& t) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("triple must be [x, y, z]");
  t.x = int_from_json(j[0]);
  t.y = int_from_json(j[1]);
  t.z = int_from_json(j[2]);
}

inline void to_json(json& j, const MarkovType& ty) {
  j = json::array({int_to_json(ty.l), int_to_json(ty.m), int_to_json(ty.n)});
}

}  // namespace markov

namespace auroux {

inline void to_json(json& j, const PrimitivePair& p) {
  j = json::array({json(p.c1), json(p.c2)});
}

inline void from_json(const json& j, PrimitivePair& p) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("pair must be [[p,q],[p,q]]");
  p.c1 = j[0].get<HomologyClass>();
  p.c2 = j[1].get<HomologyClass>();
}

inline void to_json(json& j, const EquivalenceWitness& w) {
  j = json{{"braid_move", w.braid_move}, {"matrix", w.matrix}};
}

inline void from_json(const json& j, EquivalenceWitness& w) {
  w.braid_move = j.at("braid_move").get<bool>();
  w.matrix = j.at("matrix").get<Mat2>();
}

}  // namespace auroux

}  // namespace torusfib
