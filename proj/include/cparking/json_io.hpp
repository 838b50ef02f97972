/// JSON (de)serialization for the external interfaces. Formats are pinned:
/// QTCoeff as a (q,t)-ascending list of {"q","t","num","den"}, paths as
/// {"m","n","start_x","north_x","labels"} (+"end_x" for non-cyclic
/// components), tuples as {"paths":[...], "perm":[...]}.
#pragma once

#include <json.hpp>

#include "cparking/bijection.hpp"
#include "cparking/ehaops.hpp"
#include "cparking/macdonald.hpp"
#include "cparking/paths.hpp"
#include "cparking/sympoly.hpp"

namespace cparking {

using nlohmann::json;

json to_json(const QTCoeff& c);
QTCoeff qtcoeff_from_json(const json& j);

json to_json(const QTRatFun& f);
QTRatFun ratfun_from_json(const json& j);

json to_json(const LabeledPath& p);
LabeledPath path_from_json(const json& j);

json to_json(const PathTuple& t);
PathTuple tuple_from_json(const json& j);

json to_json(const GlobalParkingFunction& g);
GlobalParkingFunction global_from_json(const json& j);

json to_json(const SymPoly& f);
json to_json(const BasisExpansion& e);

json to_json(const TupleSeries& s);
json to_json(const OmegaSeries& s);

json to_json(const MacdonaldTable& t);

}  // namespace cparking
