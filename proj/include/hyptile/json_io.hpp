#ifndef HYPTILE_JSON_IO_HPP
#define HYPTILE_JSON_IO_HPP

#include <json.hpp>

#include "hyptile/board.hpp"
#include "hyptile/identity.hpp"
#include "hyptile/oracle.hpp"
#include "hyptile/recurrence.hpp"

// Deterministic JSON renderings of the library types.  ordered_json keeps
// insertion order, so identical inputs serialize byte-identically.

namespace hyptile {

using Json = nlohmann::ordered_json;

// [[deg_a, deg_b, "coeff"], ...] in canonical term order.
inline Json bipoly_json(const BiPoly& p) {
  Json arr = Json::array();
  for (const auto& [m, c] : p.terms()) arr.push_back(Json::array({m.da, m.db, c.str()}));
  return arr;
}

inline Json graph_json(const CellGraph& g) {
  Json j;
  j["q"] = g.spec().q;
  j["n"] = g.spec().n;
  j["variant"] = variant_name(g.spec().variant);
  Json cells = Json::array();
  for (const CellInfo& c : g.cells())
    cells.push_back(Json{{"id", c.id}, {"level", c.level}, {"column", c.column}});
  j["cells"] = std::move(cells);
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  j["edges"] = std::move(edges);
  Json cuts = Json::object();
  for (const auto& [pos, es] : g.cuts()) {
    Json arr = Json::array();
    for (const Edge& e : es) arr.push_back(Json::array({e.u, e.v}));
    cuts[std::to_string(pos)] = std::move(arr);
  }
  j["cuts"] = std::move(cuts);
  return j;
}

// [{"m": id} | {"d": [id, id]}, ...] in canonical piece order.
inline Json tiling_json(const Tiling& t) {
  Json arr = Json::array();
  for (const Piece& p : t.pieces) {
    if (p.is_monomer())
      arr.push_back(Json{{"m", p.u}});
    else
      arr.push_back(Json{{"d", Json::array({p.u, p.v})}});
  }
  return arr;
}

inline Json table_json(const SequenceTable& t) {
  Json j;
  j["q"] = t.q;
  j["kind"] = seq_kind_name(t.kind);
  j["provenance"] = provenance_name(t.provenance);
  Json vals = Json::array();
  for (const BiPoly& v : t.values) vals.push_back(bipoly_json(v));
  j["values"] = std::move(vals);
  return j;
}

inline Json coeffs_json(const CoeffSet& k) {
  Json j;
  j["q"] = k.q;
  j["alpha"] = bipoly_json(k.alpha);
  j["beta"] = bipoly_json(k.beta);
  j["gamma"] = bipoly_json(k.gamma);
  j["delta"] = bipoly_json(k.delta);
  return j;
}

inline Json report_json(const CheckReport& r) {
  Json j;
  j["leg"] = r.leg;
  j["params"] = r.params;
  j["status"] = check_status_name(r.status);
  if (r.counterexample) {
    const Counterexample& c = *r.counterexample;
    Json cj;
    cj["q"] = c.q;
    if (c.n >= 0) cj["n"] = c.n;
    if (c.m >= 0) cj["m"] = c.m;
    if (!c.symbolic) {
      cj["a"] = c.a_val;
      cj["b"] = c.b_val;
    }
    cj["lhs"] = c.lhs;
    cj["rhs"] = c.rhs;
    j["counterexample"] = std::move(cj);
  }
  j["checked_count"] = r.checked;
  return j;
}

inline Json bundle_json(const CrosscheckBundle& b) {
  Json j;
  j["status"] = b.pass() ? "pass" : "fail";
  Json legs = Json::array();
  for (const CheckReport& r : b.legs) legs.push_back(report_json(r));
  j["legs"] = std::move(legs);
  return j;
}

}  // namespace hyptile

#endif
