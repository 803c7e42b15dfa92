#ifndef COMMGROUP_JSON_IO_HPP
#define COMMGROUP_JSON_IO_HPP

// JSON forms:
//   ModuleElement  {"rank": n, "case": "free"|"surface",
//                   "terms": [{"i":1,"j":2,"k":[0,0],"c":-2}, ...]}
//   LaurentPoly    {"rank": n, "terms": [{"e":[1,-1],"c":3}, ...]}
//   HomologyResult {"betti": b, "torsion": [..]}
// Coefficients that do not fit in 64 bits are written as decimal strings.

#include <json.hpp>

#include "commgroup/homology.hpp"
#include "commgroup/module.hpp"

namespace commgroup {

nlohmann::json to_json(const ModuleElement& m);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const HomologyResult& h);

/// Throw ErrorCode::Parse on malformed documents.
ModuleElement module_from_json(const nlohmann::json& j);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace commgroup

#endif
