#pragma once

#include "sph/build.hpp"
#include "sph/enumerate.hpp"

#include <json.hpp>

#include <iosfwd>

namespace sph {

using json = nlohmann::json;

// {"system":"A2","M":[{"root":[1,1],"pi":0}],"classes":[[0]]}
json to_json(const CombTriple& t);
// Uses sys when given, otherwise the "system" label in the document.
CombTriple triple_from_json(const json& j, SystemPtr sys = nullptr);

// {"rank_T":n,"vanishing":[[...]]}; rows are saturated on input. rank_T may be
// omitted when the caller supplies it.
json to_json(const TorusSpec& t);
TorusSpec torus_from_json(const json& j, int rank_T = -1);

json to_json(const ValidationReport& r);
json to_json(const SubalgebraModel& m);
json to_json(const OrbitGraph& g);
json to_json(const Table& t);

// One line per triple.
void write_catalog_jsonl(std::ostream& os, const Catalog& c);

}  // namespace sph
