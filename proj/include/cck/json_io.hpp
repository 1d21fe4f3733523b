#pragma once

#include <nlohmann/json.hpp>

#include "cck/isocert.hpp"

namespace cck {

using nlohmann::json;

json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j);

// {"kind":"b","i":"1","n":-2} | {"kind":"t","lam":{...}} | {"kind":"tensor","parts":[...]}
json elem_to_json(const Elem& b, const CartanDatum& datum);
Elem elem_from_json(const json& j, const CartanDatum& datum);

json cellvec_to_json(const CellVec& x);   // plain integer array
CellVec cellvec_from_json(const json& j);

// {"cartan": {...}, "word": ["1","2","1"]}
json crystal_to_json(const CellularCrystal& c);
CellularCrystal crystal_from_json(const json& j);

json membership_to_json(const Membership& m, const CartanDatum& datum);
json iso_certificate_to_json(const IsoCertificate& cert, const CellularCrystal& A,
                             const CellularCrystal& B);
json connectivity_to_json(const ConnectivityReport& rep, const CellularCrystal& c);

}  // namespace cck
