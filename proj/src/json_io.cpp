#include "cck/json_io.hpp"

namespace cck {

json weight_to_json(const Weight& w) { return json{{"lam", w.lam()}, {"rt", w.rt()}}; }

Weight weight_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lam") || !j.contains("rt"))
    throw ConfigError("weight JSON needs 'lam' and 'rt'");
  return Weight(j.at("lam").get<std::vector<Int>>(), j.at("rt").get<std::vector<Int>>());
}

json elem_to_json(const Elem& b, const CartanDatum& datum) {
  if (b.is_b())
    return json{{"kind", "b"}, {"i", datum.label(b.as_b().i)}, {"n", b.as_b().n}};
  if (b.is_t()) return json{{"kind", "t"}, {"lam", weight_to_json(b.as_t().lam)}};
  json parts = json::array();
  for (const Elem& p : b.parts()) parts.push_back(elem_to_json(p, datum));
  return json{{"kind", "tensor"}, {"parts", std::move(parts)}};
}

Elem elem_from_json(const json& j, const CartanDatum& datum) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "b") return Elem::b(datum.index_of(j.at("i").get<std::string>()), j.at("n").get<Int>());
  if (kind == "t") return Elem::t(weight_from_json(j.at("lam")));
  if (kind == "tensor") {
    std::vector<Elem> parts;
    for (const json& p : j.at("parts")) parts.push_back(elem_from_json(p, datum));
    return Elem::tensor(std::move(parts));
  }
  throw ConfigError("unknown element kind '" + kind + "'");
}

json cellvec_to_json(const CellVec& x) { return json(x); }

CellVec cellvec_from_json(const json& j) { return j.get<CellVec>(); }

json crystal_to_json(const CellularCrystal& c) {
  json word = json::array();
  for (Idx i : c.word().letters()) word.push_back(c.datum().label(i));
  return json{{"cartan", c.datum().to_json()}, {"word", std::move(word)}};
}

CellularCrystal crystal_from_json(const json& j) {
  CartanDatum datum = CartanDatum::from_json(j.at("cartan"));
  Word w;
  for (const json& s : j.at("word")) w.push_back(datum.index_of(s.get<std::string>()));
  return CellularCrystal(datum, ReducedWord(datum, std::move(w)));
}

json membership_to_json(const Membership& m, const CartanDatum& datum) {
  json path = json::array();
  for (const PathStep& s : m.path)
    path.push_back(json::array({std::string(1, s.op), datum.label(s.i)}));
  json out{{"member", m.member}, {"path", std::move(path)}};
  if (!m.member) out["reason"] = m.reject_reason;
  return out;
}

json iso_certificate_to_json(const IsoCertificate& cert, const CellularCrystal& A,
                             const CellularCrystal& B) {
  json out{{"source", crystal_to_json(A)},
           {"target", crystal_to_json(B)},
           {"anchor", {cellvec_to_json(cert.anchor_source), cellvec_to_json(cert.anchor_target)}},
           {"explored", cert.explored},
           {"status", cert.ok() ? "ok" : "conflict"}};
  if (cert.conflict) {
    out["conflict"] = json{{"kind", cert.conflict->kind},
                           {"source", cellvec_to_json(cert.conflict->source)},
                           {"target", cellvec_to_json(cert.conflict->target)},
                           {"detail", cert.conflict->detail}};
  }
  json frag = json::array();
  for (const auto& [a, b] : cert.fragment)
    frag.push_back(json::array({cellvec_to_json(a), cellvec_to_json(b)}));
  out["map"] = std::move(frag);
  return out;
}

json connectivity_to_json(const ConnectivityReport& rep, const CellularCrystal& c) {
  json witnesses = json::array();
  for (const CellVec& x : rep.unreached) witnesses.push_back(cellvec_to_json(x));
  return json{{"crystal", crystal_to_json(c)},
              {"inner_radius", rep.inner_radius},
              {"pad", rep.pad},
              {"inner_total", rep.inner_total},
              {"inner_reached", rep.inner_reached},
              {"fraction", rep.fraction()},
              {"unreached", std::move(witnesses)}};
}

}  // namespace cck
